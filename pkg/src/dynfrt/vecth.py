"""The tensor category Vect_H over a finite set H.

An object is a finite carrier V with a map act[lam][v] = lam . v in H.  A
morphism f: V -> W is an H-indexed family of |W| x |V| matrices with
f(lam)[w][v] != 0 only when lam . w == lam . v.  Pairs are flattened
row-major, so the associator and unit constraints are index relabelings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from .linalg import Mat, to_fraction
from .report import CheckReport, StructureError


@dataclass(frozen=True)
class VectHObject:
    act: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        act = tuple(tuple(row) for row in self.act)
        if not act or not act[0]:
            raise StructureError("objects need a nonempty H and a nonempty carrier")
        n_h = len(act)
        width = len(act[0])
        for lam, row in enumerate(act):
            if len(row) != width:
                raise StructureError("ragged action table")
            if all(type(mu) is int for mu in row) and min(row) >= 0 and max(row) < n_h:
                continue
            for v, mu in enumerate(row):
                if isinstance(mu, bool) or not isinstance(mu, int) or not 0 <= mu < n_h:
                    raise StructureError(f"act[{lam}][{v}]={mu!r} is not an element of H")
        object.__setattr__(self, "act", act)
        object.__setattr__(self, "n_h", n_h)
        object.__setattr__(self, "size", width)
        object.__setattr__(self, "_hash", hash(act))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if not isinstance(other, VectHObject):
            return NotImplemented
        return self is other or (self._hash == other._hash and self.act == other.act)

    def __repr__(self) -> str:
        return f"VectHObject({self.name or ''}|H|={self.n_h}, |V|={self.size})"


def unit_obj(n_h: int) -> VectHObject:
    return VectHObject(tuple((lam,) for lam in range(n_h)), name="I")


def point_obj(perm: Sequence[int], name: str | None = None) -> VectHObject:
    """One-point object {alpha} with lam . e = perm[lam]."""
    return VectHObject(tuple((p,) for p in perm), name=name)


def element_obj(v: VectHObject, elem: int) -> VectHObject:
    """The one-point subobject {v} of V."""
    return VectHObject(tuple((row[elem],) for row in v.act), name=f"{{{elem}}}")


@lru_cache(maxsize=4096)
def tensor_obj(v: VectHObject, w: VectHObject) -> VectHObject:
    if v.n_h != w.n_h:
        raise StructureError("objects live over different H")
    act = tuple(tuple(v.act[w.act[lam][b]][a] for a in range(v.size) for b in range(w.size))
                for lam in range(v.n_h))
    return VectHObject(act)


class VectHMorphism:
    __slots__ = ("source", "target", "mats")

    def __init__(self, source: VectHObject, target: VectHObject, mats: Sequence[Mat],
                 check: bool = False):
        if source.n_h != target.n_h:
            raise StructureError("source and target live over different H")
        mats = tuple(mats)
        if len(mats) != source.n_h:
            raise StructureError(f"expected {source.n_h} matrices, got {len(mats)}")
        for m in mats:
            if m.shape != (target.size, source.size):
                raise StructureError(f"matrix shape {m.shape} does not match "
                                     f"{target.size}x{source.size}")
        self.source = source
        self.target = target
        self.mats = mats
        if check:
            rep = check_morphism(self)
            if not rep:
                raise StructureError(f"support condition violated at {rep.witness}")

    @property
    def n_h(self) -> int:
        return self.source.n_h

    def __eq__(self, other) -> bool:
        if not isinstance(other, VectHMorphism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.mats == other.mats)

    def __hash__(self):
        return hash((self.source, self.target, self.mats))

    def __repr__(self) -> str:
        return f"VectHMorphism({self.source!r} -> {self.target!r})"

    def __add__(self, other: "VectHMorphism") -> "VectHMorphism":
        _same_hom(self, other)
        return VectHMorphism(self.source, self.target,
                             [a + b for a, b in zip(self.mats, other.mats)])

    def __sub__(self, other: "VectHMorphism") -> "VectHMorphism":
        _same_hom(self, other)
        return VectHMorphism(self.source, self.target,
                             [a - b for a, b in zip(self.mats, other.mats)])

    def __neg__(self) -> "VectHMorphism":
        return self.scale(-1)

    def scale(self, c) -> "VectHMorphism":
        return VectHMorphism(self.source, self.target, [m.scale(c) for m in self.mats])

    def __matmul__(self, other: "VectHMorphism") -> "VectHMorphism":
        return compose(self, other)

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.mats)

    def retype(self, source: VectHObject, target: VectHObject) -> "VectHMorphism":
        """Same matrices viewed between data-equal objects (used for relabeled names)."""
        if source != self.source or target != self.target:
            raise StructureError("retype needs data-equal objects")
        return VectHMorphism(source, target, self.mats)

    def inverse(self) -> "VectHMorphism":
        return VectHMorphism(self.target, self.source, [m.inverse() for m in self.mats])

    def first_difference(self, other: "VectHMorphism"):
        _same_hom(self, other)
        for lam, (a, b) in enumerate(zip(self.mats, other.mats)):
            pos = a.first_difference(b)
            if pos is not None:
                return {"lambda": lam, "row": pos[0], "col": pos[1],
                        "left": str(a[pos]), "right": str(b[pos])}
        return None


def _same_hom(f: VectHMorphism, g: VectHMorphism) -> None:
    if f.source != g.source or f.target != g.target:
        raise StructureError("morphisms have different source or target")


def identity(v: VectHObject) -> VectHMorphism:
    return VectHMorphism(v, v, [Mat.identity(v.size)] * v.n_h)


def zero(source: VectHObject, target: VectHObject) -> VectHMorphism:
    return VectHMorphism(source, target, [Mat(target.size, source.size)] * source.n_h)


def from_function(source: VectHObject, target: VectHObject, fn) -> VectHMorphism:
    """0/1 morphism with fn(lam, v) = image of basis vector v (or None for zero)."""
    mats = []
    for lam in range(source.n_h):
        entries = []
        for v in range(source.size):
            w = fn(lam, v)
            if w is not None:
                entries.append((w, v, 1))
        mats.append(Mat.from_entries(target.size, source.size, entries))
    return VectHMorphism(source, target, mats)


def check_morphism(f: VectHMorphism) -> CheckReport:
    count = 0
    for lam, m in enumerate(f.mats):
        t_act = f.target.act[lam]
        s_act = f.source.act[lam]
        for w, v, _ in m.entries():
            count += 1
            if t_act[w] != s_act[v]:
                return CheckReport("morphism", False, count=count,
                                   witness={"lambda": lam, "row": w, "col": v})
    return CheckReport("morphism", True, count=count)


def compose(g: VectHMorphism, f: VectHMorphism) -> VectHMorphism:
    """g after f, lambda-wise."""
    if f.target != g.source:
        raise StructureError(f"cannot compose: target {f.target!r} != source {g.source!r}")
    return VectHMorphism(f.source, g.target, [a @ b for a, b in zip(g.mats, f.mats)])


def compose_all(*maps: VectHMorphism) -> VectHMorphism:
    """compose_all(h, g, f) = h o g o f."""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = compose(m, out)
    return out


def tensor_mor(f: VectHMorphism, g: VectHMorphism) -> VectHMorphism:
    """(f (x) g)(lam)[(u1,v1),(u2,v2)] = f(lam . v2)[u1,u2] * g(lam)[v1,v2]."""
    if f.n_h != g.n_h:
        raise StructureError("morphisms live over different H")
    source = tensor_obj(f.source, g.source)
    target = tensor_obj(f.target, g.target)
    gs, gt = g.source.size, g.target.size
    mats = []
    for lam in range(f.n_h):
        out = Mat(target.size, source.size)
        s_act = g.source.act[lam]
        data = out.data
        for v1, grow in g.mats[lam].data.items():
            for v2, gv in grow.items():
                fm = f.mats[s_act[v2]]
                for u1, frow in fm.data.items():
                    row = data.setdefault(u1 * gt + v1, {})
                    for u2, fv in frow.items():
                        row[u2 * gs + v2] = fv * gv
        mats.append(out)
    return VectHMorphism(source, target, mats)


def _relabel(source: VectHObject, target: VectHObject, index_map) -> VectHMorphism:
    m = Mat.from_map(target.size, source.size, [index_map(j) for j in range(source.size)])
    return VectHMorphism(source, target, [m] * source.n_h)


def _assoc_index(nv: int, nw: int):
    def index(j):
        ab, c = divmod(j, nw)
        a, b = divmod(ab, nv)
        return a * (nv * nw) + (b * nw + c)
    return index


def _assoc_inverse_index(nv: int, nw: int):
    def index(j):
        a, bc = divmod(j, nv * nw)
        b, c = divmod(bc, nw)
        return (a * nv + b) * nw + c
    return index


@lru_cache(maxsize=1024)
def assoc(u: VectHObject, v: VectHObject, w: VectHObject) -> VectHMorphism:
    """a: (U (x) V) (x) W -> U (x) (V (x) W), ((a,b),c) -> (a,(b,c))."""
    return _relabel(tensor_obj(tensor_obj(u, v), w), tensor_obj(u, tensor_obj(v, w)),
                    _assoc_index(v.size, w.size))


@lru_cache(maxsize=1024)
def assoc_inv(u: VectHObject, v: VectHObject, w: VectHObject) -> VectHMorphism:
    return _relabel(tensor_obj(u, tensor_obj(v, w)), tensor_obj(tensor_obj(u, v), w),
                    _assoc_inverse_index(v.size, w.size))


@lru_cache(maxsize=1024)
def left_unit(v: VectHObject) -> VectHMorphism:
    """l: I (x) V -> V, (e, v) -> v."""
    return _relabel(tensor_obj(unit_obj(v.n_h), v), v, lambda j: j)


@lru_cache(maxsize=1024)
def right_unit(v: VectHObject) -> VectHMorphism:
    """r: V (x) I -> V, (v, e) -> v."""
    return _relabel(tensor_obj(v, unit_obj(v.n_h)), v, lambda j: j)


def left_unit_inv(v: VectHObject) -> VectHMorphism:
    return _relabel(v, tensor_obj(unit_obj(v.n_h), v), lambda j: j)


def right_unit_inv(v: VectHObject) -> VectHMorphism:
    return _relabel(v, tensor_obj(v, unit_obj(v.n_h)), lambda j: j)


def point_morphisms(v: VectHObject, elem: int) -> tuple[VectHMorphism, VectHMorphism]:
    """(i, p) with i: {elem} -> V the inclusion and p: V -> {elem} the projection."""
    if not 0 <= elem < v.size:
        raise StructureError(f"element {elem} not in carrier")
    pt = element_obj(v, elem)
    i = from_function(pt, v, lambda lam, _: elem)
    p = from_function(v, pt, lambda lam, w: 0 if w == elem else None)
    return i, p


def point_iso(a: VectHObject, b: VectHObject) -> VectHMorphism:
    """iota: {a} -> {b} for one-point objects acting identically on H."""
    if a.size != 1 or b.size != 1:
        raise StructureError("point_iso needs one-point objects")
    for lam in range(a.n_h):
        if a.act[lam][0] != b.act[lam][0]:
            raise StructureError(f"one-point objects differ at lambda={lam}: "
                                 f"{a.act[lam][0]} vs {b.act[lam][0]}")
    return VectHMorphism(a, b, [Mat.identity(1)] * a.n_h)


def morphism_from_dense(source: VectHObject, target: VectHObject, dense_mats,
                        check: bool = True) -> VectHMorphism:
    mats = [Mat.from_dense([[to_fraction(x) for x in row] for row in m]) if m
            else Mat(target.size, source.size) for m in dense_mats]
    return VectHMorphism(source, target, mats, check=check)
