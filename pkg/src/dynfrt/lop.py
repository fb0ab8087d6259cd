"""L-operators over a Yang-Baxter-type morphism sigma: X (x) X -> X (x) X."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .linalg import Mat, nullspace
from .report import CheckReport, StructureError
from .vecth import (VectHMorphism, VectHObject, assoc, assoc_inv, check_morphism,
                    compose_all, identity, left_unit, right_unit_inv, tensor_mor, tensor_obj,
                    unit_obj)


@dataclass(frozen=True)
class SigmaContext:
    x: VectHObject
    sigma: VectHMorphism
    sigma_inv: VectHMorphism

    @classmethod
    def build(cls, x: VectHObject, sigma: VectHMorphism) -> "SigmaContext":
        xx = tensor_obj(x, x)
        if sigma.source != xx or sigma.target != xx:
            raise StructureError("sigma must be an endomorphism of X (x) X")
        rep = check_morphism(sigma)
        if not rep:
            raise StructureError(f"sigma violates the support condition at {rep.witness}")
        try:
            inv = sigma.inverse()
        except ValueError:
            raise StructureError("sigma is not invertible") from None
        return cls(x, sigma, inv)

    @property
    def n_h(self) -> int:
        return self.x.n_h


@dataclass(frozen=True)
class LOperator:
    """An invertible l: V (x) X -> X (x) V with its inverse stored."""

    v: VectHObject
    l: VectHMorphism
    l_inv: VectHMorphism

    @classmethod
    def build(cls, v: VectHObject, x: VectHObject, l: VectHMorphism,
              l_inv: VectHMorphism | None = None) -> "LOperator":
        if l.source != tensor_obj(v, x) or l.target != tensor_obj(x, v):
            raise StructureError("an L-operator must map V (x) X to X (x) V")
        rep = check_morphism(l)
        if not rep:
            raise StructureError(f"L violates the support condition at {rep.witness}")
        if l_inv is None:
            try:
                l_inv = l.inverse()
            except ValueError:
                raise StructureError("L is not invertible") from None
        elif (l_inv @ l != identity(l.source)) or (l @ l_inv != identity(l.target)):
            raise StructureError("the supplied inverse does not invert L")
        return cls(v, l, l_inv)


def rll_sides(ctx: SigmaContext, lv: LOperator) -> tuple[VectHMorphism, VectHMorphism]:
    x, v, s, l = ctx.x, lv.v, ctx.sigma, lv.l
    left = compose_all(assoc(x, x, v), tensor_mor(s, identity(v)), assoc_inv(x, x, v),
                       tensor_mor(identity(x), l), assoc(x, v, x), tensor_mor(l, identity(x)))
    right = compose_all(tensor_mor(identity(x), l), assoc(x, v, x), tensor_mor(l, identity(x)),
                        assoc_inv(v, x, x), tensor_mor(identity(v), s), assoc(v, x, x))
    return left, right


def check_rll(ctx: SigmaContext, lv: LOperator) -> CheckReport:
    left, right = rll_sides(ctx, lv)
    diff = left.first_difference(right)
    return CheckReport("rll", diff is None, witness=diff,
                       count=ctx.n_h * left.source.size ** 2)


def yb_sides(ctx: SigmaContext) -> tuple[VectHMorphism, VectHMorphism]:
    x, s = ctx.x, ctx.sigma
    idx = identity(x)
    s1 = tensor_mor(s, idx)
    s2 = tensor_mor(idx, s)
    a, a_inv = assoc(x, x, x), assoc_inv(x, x, x)
    left = compose_all(s2, a, s1, a_inv, s2, a)
    right = compose_all(a, s1, a_inv, s2, a, s1)
    return left, right


def check_yb_operator(ctx: SigmaContext) -> CheckReport:
    left, right = yb_sides(ctx)
    diff = left.first_difference(right)
    return CheckReport("yang_baxter", diff is None, witness=diff,
                       count=ctx.n_h * left.source.size ** 2)


def boxtimes(ctx: SigmaContext, lv: LOperator, lw: LOperator) -> LOperator:
    x, v, w = ctx.x, lv.v, lw.v
    l = compose_all(assoc(x, v, w), tensor_mor(lv.l, identity(w)), assoc_inv(v, x, w),
                    tensor_mor(identity(v), lw.l), assoc(v, w, x))
    l_inv = compose_all(assoc_inv(v, w, x), tensor_mor(identity(v), lw.l_inv), assoc(v, x, w),
                        tensor_mor(lv.l_inv, identity(w)), assoc_inv(x, v, w))
    return LOperator(tensor_obj(v, w), l, l_inv)


def unit_loperator(ctx: SigmaContext) -> LOperator:
    x = ctx.x
    l = right_unit_inv(x) @ left_unit(x)
    return LOperator(unit_obj(x.n_h), l, l.inverse())


def sigma_loperator(ctx: SigmaContext) -> LOperator:
    """(X, sigma) viewed as an L-operator."""
    return LOperator(ctx.x, ctx.sigma, ctx.sigma_inv)


def intertwining_sides(ctx: SigmaContext, f: VectHMorphism, lv: LOperator, lw: LOperator):
    if f.source != lv.v or f.target != lw.v:
        raise StructureError("f must map the carrier of lv to the carrier of lw")
    x = ctx.x
    return (tensor_mor(identity(x), f) @ lv.l, lw.l @ tensor_mor(f, identity(x)))


def is_rep_morphism(ctx: SigmaContext, f: VectHMorphism, lv: LOperator, lw: LOperator) -> bool:
    left, right = intertwining_sides(ctx, f, lv, lw)
    return left == right


def intertwiner_basis(ctx: SigmaContext, lv: LOperator, lw: LOperator) -> list[VectHMorphism]:
    """Basis of the space of Vect_H morphisms V -> W intertwining the two L-operators."""
    v, w = lv.v, lw.v
    slots = [(lam, i, j) for lam in range(v.n_h) for i in range(w.size) for j in range(v.size)
             if w.act[lam][i] == v.act[lam][j]]

    def unit_morphism(slot):
        lam, i, j = slot
        mats = [Mat(w.size, v.size) for _ in range(v.n_h)]
        mats[lam] = Mat.from_entries(w.size, v.size, [(i, j, 1)])
        return VectHMorphism(v, w, mats)

    columns = []
    n_rows = 0
    for slot in slots:
        left, right = intertwining_sides(ctx, unit_morphism(slot), lv, lw)
        diff = left - right
        col = []
        for m in diff.mats:
            col.extend(x for row in m.to_dense() for x in row)
        n_rows = len(col)
        columns.append(col)
    if not slots:
        return []
    basis = []
    for vec in nullspace(columns, n_rows):
        mats = [Mat(w.size, v.size) for _ in range(v.n_h)]
        entries: dict[int, list] = {}
        for (lam, i, j), c in zip(slots, vec):
            if c:
                entries.setdefault(lam, []).append((i, j, c))
        for lam, es in entries.items():
            mats[lam] = Mat.from_entries(w.size, v.size, es)
        basis.append(VectHMorphism(v, w, mats))
    return basis


def has_isomorphism(ctx: SigmaContext, lv: LOperator, lw: LOperator, tries: int = 20,
                    seed: int = 0) -> bool:
    """Whether some invertible intertwiner exists.

    A True answer comes with an explicit invertible intertwiner.  False is exact
    for carriers of different sizes and for intertwiner spaces of dimension at
    most one; otherwise it means no random combination of the basis (integer
    coefficients up to 10^6) was invertible, and the determinant being a
    nonzero polynomial makes that failure vanishingly unlikely.
    """
    if lv.v.size != lw.v.size:
        return False
    basis = intertwiner_basis(ctx, lv, lw)
    if not basis:
        return False
    rng = random.Random(seed)
    candidates = [basis[0]] if len(basis) == 1 else (
        _combination(basis, [rng.randint(-10**6, 10**6) for _ in basis]) for _ in range(tries))
    for f in candidates:
        try:
            f.inverse()
        except ValueError:
            continue
        return True
    return False


def _combination(basis: list[VectHMorphism], coeffs: list[int]) -> VectHMorphism:
    out = basis[0].scale(coeffs[0])
    for f, c in zip(basis[1:], coeffs[1:]):
        out = out + f.scale(c)
    return out
