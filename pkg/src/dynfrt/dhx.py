"""Degree-graded operator algebras on Map(H, C V) and the function-operator algebra on M_H.

A DhxElement over V stores, for each degree (alpha, beta), a morphism
u: V (x) {beta} -> {alpha} (x) V.  It acts on functions g: H -> C^V by

    Gamma(u)(g)(lam)_v = sum_w u(lam)[v][w] * g(lam beta)_w

Equality of elements means equality of these operators; the stored terms are
only preimages.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .linalg import Mat, to_fraction
from .report import StructureError
from .vecth import (VectHMorphism, VectHObject, assoc, assoc_inv, compose_all, identity,
                    point_iso, point_obj, tensor_mor, tensor_obj, unit_obj)
from .wgroup import GroupElement

Degree = tuple[GroupElement, GroupElement]


@dataclass(frozen=True)
class MHFunction:
    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(to_fraction(v) for v in self.values))

    @classmethod
    def const(cls, n: int, c=1) -> "MHFunction":
        return cls((to_fraction(c),) * n)

    @classmethod
    def delta(cls, n: int, at: int) -> "MHFunction":
        return cls(tuple(Fraction(int(i == at)) for i in range(n)))

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, lam: int) -> Fraction:
        return self.values[lam]

    def __add__(self, other: "MHFunction") -> "MHFunction":
        return MHFunction(tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, other: "MHFunction") -> "MHFunction":
        return MHFunction(tuple(a * b for a, b in zip(self.values, other.values)))

    def scale(self, c) -> "MHFunction":
        c = to_fraction(c)
        return MHFunction(tuple(c * a for a in self.values))

    def shift(self, alpha: GroupElement) -> "MHFunction":
        """T_alpha f: lam -> f(lam alpha)."""
        return MHFunction(tuple(self.values[alpha(lam)] for lam in range(len(self.values))))

    def is_zero(self) -> bool:
        return not any(self.values)


@lru_cache(maxsize=4096)
def left_point(alpha: GroupElement) -> VectHObject:
    return point_obj(alpha.perm, name=f"{{{list(alpha.perm)}}}")


def component_shape(v: VectHObject, alpha: GroupElement, beta: GroupElement):
    """(source, target) = (V (x) {beta}, {alpha} (x) V)."""
    return tensor_obj(v, left_point(beta)), tensor_obj(left_point(alpha), v)


class DhxElement:
    __slots__ = ("v", "terms")

    def __init__(self, v: VectHObject, terms: Mapping[Degree, VectHMorphism] | None = None):
        self.v = v
        self.terms: dict[Degree, VectHMorphism] = {}
        for (alpha, beta), u in (terms or {}).items():
            src, tgt = component_shape(v, alpha, beta)
            if u.source != src or u.target != tgt:
                raise StructureError("component does not have the shape V(x){beta} -> {alpha}(x)V")
            if not u.is_zero():
                self.terms[(alpha, beta)] = u

    @property
    def n_h(self) -> int:
        return self.v.n_h

    def degrees(self) -> list[Degree]:
        return list(self.terms)

    def __add__(self, other: "DhxElement") -> "DhxElement":
        if self.v != other.v:
            raise StructureError("elements act on different objects")
        terms = dict(self.terms)
        for deg, u in other.terms.items():
            terms[deg] = terms[deg] + u if deg in terms else u
        return DhxElement(self.v, terms)

    def __neg__(self) -> "DhxElement":
        return self.scale(-1)

    def __sub__(self, other: "DhxElement") -> "DhxElement":
        return self + (-other)

    def scale(self, c) -> "DhxElement":
        return DhxElement(self.v, {d: u.scale(c) for d, u in self.terms.items()})

    def __mul__(self, other: "DhxElement") -> "DhxElement":
        if self.v != other.v:
            raise StructureError("elements act on different objects")
        out = DhxElement(self.v)
        for (a, b), u in self.terms.items():
            for (c, d), w in other.terms.items():
                out = out + DhxElement(self.v, {(a * c, b * d): star_closed_form(self.v, u, (a, b), w, (c, d))})
        return out

    def operator(self) -> Mat:
        return gamma_operator(self)

    def equals(self, other: "DhxElement") -> bool:
        return self.v == other.v and gamma_operator(self) == gamma_operator(other)

    def is_zero(self) -> bool:
        return gamma_operator(self).is_zero()

    def __repr__(self) -> str:
        return f"DhxElement({self.v!r}, {len(self.terms)} terms)"


def gamma_operator(e: DhxElement) -> Mat:
    """Matrix of the operator on Map(H, C V); index (lam, v) -> lam*|V| + v."""
    n, nv = e.n_h, e.v.size
    entries = []
    for (alpha, beta), u in e.terms.items():
        for lam in range(n):
            shifted = beta(lam)
            for i, j, c in u.mats[lam].entries():
                entries.append((lam * nv + i, shifted * nv + j, c))
    return Mat.from_entries(n * nv, n * nv, entries)


def gamma_apply(e: DhxElement, g: Sequence[Sequence]) -> list[list[Fraction]]:
    """Apply the operator of e to g given as g[lam][v]."""
    n, nv = e.n_h, e.v.size
    flat = [to_fraction(g[lam][v]) for lam in range(n) for v in range(nv)]
    out = gamma_operator(e).apply(flat)
    return [out[lam * nv:(lam + 1) * nv] for lam in range(n)]


def delta_basis(n_h: int, size: int) -> Iterable[list[list[Fraction]]]:
    for lam in range(n_h):
        for v in range(size):
            g = [[Fraction(0)] * size for _ in range(n_h)]
            g[lam][v] = Fraction(1)
            yield g


def star_product(v: VectHObject, u: VectHMorphism, deg_u: Degree,
                 w: VectHMorphism, deg_w: Degree) -> VectHMorphism:
    """The component of Gamma(u) Gamma(w) at degree (alpha gamma, beta delta).

    Built from constraints and point isomorphisms around id (x) u and w (x) id.
    """
    alpha, beta = deg_u
    gamma, delta = deg_w
    pa, pb, pg, pd = (left_point(x) for x in (alpha, beta, gamma, delta))
    p_bd, p_ag = left_point(beta * delta), left_point(alpha * gamma)
    iota_in = point_iso(p_bd, tensor_obj(pd, pb))
    iota_out = point_iso(tensor_obj(pg, pa), p_ag)
    return compose_all(
        tensor_mor(iota_out, identity(v)),
        assoc_inv(pg, pa, v),
        tensor_mor(identity(pg), u),
        assoc(pg, v, pb),
        tensor_mor(w, identity(pb)),
        assoc_inv(v, pd, pb),
        tensor_mor(identity(v), iota_in),
    )


def star_closed_form(v: VectHObject, u: VectHMorphism, deg_u: Degree,
                     w: VectHMorphism, deg_w: Degree) -> VectHMorphism:
    """Same value as star_product: the lam-matrix is u(lam) @ w(lam beta)."""
    alpha, beta = deg_u
    gamma, delta = deg_w
    src, tgt = component_shape(v, alpha * gamma, beta * delta)
    mats = [u.mats[lam] @ w.mats[beta(lam)] for lam in range(v.n_h)]
    return VectHMorphism(src, tgt, mats)


def homogeneous(v: VectHObject, alpha: GroupElement, beta: GroupElement, mats) -> DhxElement:
    src, tgt = component_shape(v, alpha, beta)
    return DhxElement(v, {(alpha, beta): VectHMorphism(src, tgt, mats)})


def unit(v: VectHObject) -> DhxElement:
    e = GroupElement.identity(v.n_h)
    return homogeneous(v, e, e, [Mat.identity(v.size)] * v.n_h)


def zero_element(v: VectHObject) -> DhxElement:
    return DhxElement(v)


def mu_l(v: VectHObject, f: MHFunction) -> DhxElement:
    """g -> (lam -> sum_v v f(lam . v) g(lam)_v)."""
    e = GroupElement.identity(v.n_h)
    mats = [Mat.from_entries(v.size, v.size, [(i, i, f(v.act[lam][i])) for i in range(v.size)])
            for lam in range(v.n_h)]
    return homogeneous(v, e, e, mats)


def mu_r(v: VectHObject, f: MHFunction) -> DhxElement:
    """g -> (lam -> f(lam) g(lam))."""
    e = GroupElement.identity(v.n_h)
    mats = [Mat.identity(v.size).scale(f(lam)) for lam in range(v.n_h)]
    return homogeneous(v, e, e, mats)


def point_scalar(f: MHFunction, source: GroupElement, target: GroupElement) -> VectHMorphism:
    """f_{target,source}: {source} -> {target}, lam -> f(lam)."""
    s, t = left_point(source), left_point(target)
    mats = [Mat.from_entries(1, 1, [(0, 0, f(lam))]) for lam in range(len(f))]
    return VectHMorphism(s, t, mats, check=True)


# the algebra of operators f * T_alpha on M_H

class IhxElement:
    __slots__ = ("n_h", "terms")

    def __init__(self, n_h: int, terms: Mapping[GroupElement, MHFunction] | None = None):
        self.n_h = n_h
        self.terms: dict[GroupElement, MHFunction] = {}
        for alpha, f in (terms or {}).items():
            if len(f) != n_h or len(alpha.perm) != n_h:
                raise StructureError("function or degree has the wrong length")
            if not f.is_zero():
                self.terms[alpha] = f

    @classmethod
    def shift_operator(cls, alpha: GroupElement) -> "IhxElement":
        n = len(alpha.perm)
        return cls(n, {alpha: MHFunction.const(n)})

    @classmethod
    def one(cls, n_h: int) -> "IhxElement":
        return cls.shift_operator(GroupElement.identity(n_h))

    @classmethod
    def multiplication(cls, f: MHFunction) -> "IhxElement":
        return cls(len(f), {GroupElement.identity(len(f)): f})

    def __add__(self, other: "IhxElement") -> "IhxElement":
        terms = dict(self.terms)
        for alpha, f in other.terms.items():
            terms[alpha] = terms[alpha] + f if alpha in terms else f
        return IhxElement(self.n_h, terms)

    def scale(self, c) -> "IhxElement":
        return IhxElement(self.n_h, {a: f.scale(c) for a, f in self.terms.items()})

    def __sub__(self, other: "IhxElement") -> "IhxElement":
        return self + other.scale(-1)

    def __mul__(self, other: "IhxElement") -> "IhxElement":
        out = IhxElement(self.n_h)
        for alpha, f in self.terms.items():
            for beta, g in other.terms.items():
                out = out + IhxElement(self.n_h, {alpha * beta: f * g.shift(alpha)})
        return out

    def operator(self) -> Mat:
        entries = []
        for alpha, f in self.terms.items():
            for lam in range(self.n_h):
                entries.append((lam, alpha(lam), f(lam)))
        return Mat.from_entries(self.n_h, self.n_h, entries)

    def equals(self, other: "IhxElement") -> bool:
        return self.operator() == other.operator()

    def is_zero(self) -> bool:
        return self.operator().is_zero()

    def __repr__(self) -> str:
        return f"IhxElement({len(self.terms)} terms)"


def ihx_product(a: IhxElement, b: IhxElement) -> IhxElement:
    return a * b


def ihx_apply(a: IhxElement, f: MHFunction) -> MHFunction:
    out = [Fraction(0)] * a.n_h
    for alpha, coef in a.terms.items():
        for lam in range(a.n_h):
            out[lam] += coef(lam) * f(alpha(lam))
    return MHFunction(tuple(out))


def phi0(a: IhxElement) -> DhxElement:
    """f * T_alpha as the degree-(alpha, alpha) element over the unit object."""
    i = unit_obj(a.n_h)
    out = DhxElement(i)
    for alpha, f in a.terms.items():
        mats = [Mat.from_entries(1, 1, [(0, 0, f(lam))]) for lam in range(a.n_h)]
        out = out + homogeneous(i, alpha, alpha, mats)
    return out


def boxtimes_component(v_obj: VectHObject, w_obj: VectHObject, v: VectHMorphism,
                       w: VectHMorphism, alpha: GroupElement, gamma: GroupElement,
                       beta: GroupElement) -> VectHMorphism:
    """v: V(x){gamma} -> {alpha}(x)V and w: W(x){beta} -> {gamma}(x)W glued over gamma."""
    pa, pg, pb = left_point(alpha), left_point(gamma), left_point(beta)
    return compose_all(
        assoc(pa, v_obj, w_obj),
        tensor_mor(v, identity(w_obj)),
        assoc_inv(v_obj, pg, w_obj),
        tensor_mor(identity(v_obj), w),
        assoc(v_obj, w_obj, pb),
    )


def phi2(e1: DhxElement, e2: DhxElement) -> DhxElement:
    """Image of e1 (x) e2 in the algebra over V (x) W; inner degrees must match."""
    vw = tensor_obj(e1.v, e2.v)
    out = DhxElement(vw)
    for (alpha, gamma), v in e1.terms.items():
        for (gamma2, beta), w in e2.terms.items():
            if gamma != gamma2:
                raise StructureError("phi2 needs matching inner degrees on every pair of terms")
            comp = boxtimes_component(e1.v, e2.v, v, w, alpha, gamma, beta)
            out = out + DhxElement(vw, {(alpha, beta): comp})
    return out


def operator_on_first(op: Mat, v: VectHObject, w: VectHObject) -> Mat:
    """U^(1) on Map(H, C(V x W)) built from an operator U on Map(H, C V).

    U^(1)(g)(lam)_(v1,v2) = sum_v1' U(const v1')(lam . v2)_v1 g(lam)_(v1', v2).
    """
    n, nv, nw = v.n_h, v.size, w.size
    # U(const v1')(mu)_v1 = sum_nu U[(mu, v1), (nu, v1')]
    on_const: dict[tuple[int, int, int], Fraction] = {}
    for i, j, c in op.entries():
        mu, v1 = divmod(i, nv)
        _, v1p = divmod(j, nv)
        key = (mu, v1, v1p)
        on_const[key] = on_const.get(key, 0) + c
    by_mu: dict[int, list] = {}
    for (mu, v1, v1p), c in on_const.items():
        by_mu.setdefault(mu, []).append((v1, v1p, c))
    size = nv * nw
    entries = []
    for lam in range(n):
        for v2 in range(nw):
            mu = w.act[lam][v2]
            for v1, v1p, c in by_mu.get(mu, ()):
                entries.append((lam * size + v1 * nw + v2, lam * size + v1p * nw + v2, c))
    return Mat.from_entries(n * size, n * size, entries)


def operator_on_second(op: Mat, v: VectHObject, w: VectHObject) -> Mat:
    """U^(2)(g)(lam)_(v1,v2) = U(g^(v1))(lam)_v2 with g^(v1)(mu) = sum_v2 v2 g(mu)_(v1,v2)."""
    n, nv, nw = v.n_h, v.size, w.size
    size = nv * nw
    entries = []
    for i, j, c in op.entries():
        lam, v2 = divmod(i, nw)
        mu, v2p = divmod(j, nw)
        for v1 in range(nv):
            entries.append((lam * size + v1 * nw + v2, mu * size + v1 * nw + v2p, c))
    return Mat.from_entries(n * size, n * size, entries)
