"""Dynamical Yang-Baxter maps on finite sets and their certifiers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .carriers import FiniteAction, Quasigroup, TernarySystem, left_divide
from .report import CheckReport, StructureError
from .vecth import VectHMorphism, VectHObject, from_function, tensor_obj

Pair = tuple[int, int]


@dataclass(frozen=True)
class DynamicalMap:
    """table[lam][x][y] = R(lam)(x, y)."""

    action: FiniteAction
    table: tuple[tuple[tuple[Pair, ...], ...], ...]

    def __post_init__(self):
        nh, nx = self.action.h.size, self.action.x.size
        rows = []
        if len(self.table) != nh:
            raise StructureError(f"need {nh} maps, one per element of H")
        for lam, block in enumerate(self.table):
            if len(block) != nx or any(len(r) != nx for r in block):
                raise StructureError(f"R({lam}) must be an {nx}x{nx} table")
            out = []
            for x, r in enumerate(block):
                cells = []
                for y, uv in enumerate(r):
                    u, v = uv
                    if not (0 <= u < nx and 0 <= v < nx):
                        raise StructureError(f"R({lam})({x},{y})={uv!r} outside X x X")
                    cells.append((int(u), int(v)))
                out.append(tuple(cells))
            rows.append(tuple(out))
        object.__setattr__(self, "table", tuple(rows))

    @classmethod
    def from_function(cls, action: FiniteAction, fn) -> "DynamicalMap":
        return cls(action, tuple(tuple(tuple(fn(lam, x, y) for y in action.x) for x in action.x)
                                 for lam in action.h))

    @property
    def h_size(self) -> int:
        return self.action.h.size

    @property
    def x_size(self) -> int:
        return self.action.x.size

    def __call__(self, lam: int, x: int, y: int) -> Pair:
        return self.table[lam][x][y]

    def x_object(self) -> VectHObject:
        return VectHObject(self.action.table, name="X")


def flip_map(action: FiniteAction) -> DynamicalMap:
    return DynamicalMap.from_function(action, lambda lam, x, y: (y, x))


def identity_map(action: FiniteAction) -> DynamicalMap:
    return DynamicalMap.from_function(action, lambda lam, x, y: (x, y))


def build_from_quasigroup(q: Quasigroup, t: TernarySystem,
                          iso: Sequence[int] | None = None) -> DynamicalMap:
    """R(lam)(a, b) = (eta, xi) with

    xi  = lam \\ iso^-1(mu(iso(lam), iso(lam.a), iso((lam.a).b)))
    eta = (lam.xi) \\ ((lam.a).b)
    """
    n = q.size
    if t.carrier.size != n:
        raise StructureError("quasigroup and ternary system have different sizes")
    iso = tuple(range(n)) if iso is None else tuple(iso)
    if sorted(iso) != list(range(n)):
        raise StructureError("iso must be a bijection")
    iso_inv = [0] * n
    for a, b in enumerate(iso):
        iso_inv[b] = a

    def r(lam, a, b):
        la = q.mul(lam, a)
        lab = q.mul(la, b)
        xi = left_divide(q, lam, iso_inv[t(iso[lam], iso[la], iso[lab])])
        eta = left_divide(q, q.mul(lam, xi), lab)
        return eta, xi

    return DynamicalMap.from_function(q.as_action(), r)


def _apply12(r, lam, s):
    x, y, z = s
    u, v = r(lam, x, y)
    return u, v, z


def _apply13(r, lam, s):
    x, y, z = s
    u, v = r(lam, x, z)
    return u, y, v


def _apply23(r, lam, s):
    x, y, z = s
    u, v = r(lam, y, z)
    return x, u, v


def qdybe_sides(r: DynamicalMap, lam: int, x: int, y: int, z: int) -> tuple[tuple, tuple]:
    """Both three-fold composites at (lam; x, y, z), applied right to left."""
    act = r.action.act
    # left: R23(lam) R13(lam . X2) R12(lam)
    s = _apply12(r, lam, (x, y, z))
    s = _apply13(r, act(lam, s[1]), s)
    left = _apply23(r, lam, s)
    # right: R12(lam . X3) R13(lam) R23(lam . X1)
    s = _apply23(r, act(lam, x), (x, y, z))
    s = _apply13(r, lam, s)
    right = _apply12(r, act(lam, s[2]), s)
    return left, right


def check_qdybe(r: DynamicalMap) -> CheckReport:
    count = 0
    for lam, x, y, z in product(r.action.h, r.action.x, r.action.x, r.action.x):
        count += 1
        left, right = qdybe_sides(r, lam, x, y, z)
        if left != right:
            return CheckReport("qdybe", False, count=count,
                               witness={"lambda": lam, "xyz": [x, y, z],
                                        "left": list(left), "right": list(right)})
    return CheckReport("qdybe", True, count=count)


def check_weight_zero(r: DynamicalMap) -> CheckReport:
    act = r.action.act
    count = 0
    for lam, x, y in product(r.action.h, r.action.x, r.action.x):
        count += 1
        u, v = r(lam, x, y)
        if act(act(lam, v), u) != act(act(lam, x), y):
            return CheckReport("weight_zero", False, count=count,
                               witness={"lambda": lam, "xy": [x, y], "uv": [u, v]})
    return CheckReport("weight_zero", True, count=count)


def inverse_table(r: DynamicalMap) -> DynamicalMap | None:
    """The family R(lam)^-1, or None when some R(lam) is not a bijection."""
    nx = r.x_size
    inv = []
    for lam in r.action.h:
        block = [[None] * nx for _ in range(nx)]
        for x, y in product(range(nx), repeat=2):
            u, v = r(lam, x, y)
            if block[u][v] is not None:
                return None
            block[u][v] = (x, y)
        inv.append(block)
    return DynamicalMap(r.action, inv)


def check_bijective(r: DynamicalMap) -> CheckReport:
    nx = r.x_size
    for lam in r.action.h:
        seen: dict[Pair, Pair] = {}
        for x, y in product(range(nx), repeat=2):
            uv = r(lam, x, y)
            if uv in seen:
                return CheckReport("bijective", False, count=r.h_size,
                                   witness={"lambda": lam, "collision": [list(seen[uv]), [x, y]],
                                            "image": list(uv)})
            seen[uv] = (x, y)
    return CheckReport("bijective", True, count=r.h_size)


def _unitary_orientation(r: DynamicalMap, flip_first: bool):
    for lam, x, y in product(r.action.h, r.action.x, r.action.x):
        if flip_first:
            # R tau R tau
            u, v = r(lam, y, x)
            p, q = r(lam, v, u)
        else:
            # tau R tau R
            u, v = r(lam, x, y)
            q, p = r(lam, v, u)
        if (p, q) != (x, y):
            return {"lambda": lam, "xy": [x, y], "image": [p, q]}
    return None


def check_unitarity(r: DynamicalMap) -> CheckReport:
    if not check_bijective(r):
        raise ValueError("unitarity is only defined for bijective maps")
    w_main = _unitary_orientation(r, flip_first=False)
    count = r.h_size * r.x_size ** 2
    if w_main is None:
        return CheckReport("unitarity", True, count=count,
                           details={"tau_R_tau_R": True})
    w_alt = _unitary_orientation(r, flip_first=True)
    return CheckReport("unitarity", False, count=count, witness=w_main,
                       details={"tau_R_tau_R": False, "R_tau_R_tau": w_alt is None,
                                "alternate_witness": w_alt})


def sigma_from_r(r: DynamicalMap) -> VectHMorphism:
    """The Vect_H automorphism of X (x) X given by (x, y) -> R(lam)(y, x)."""
    if not check_bijective(r):
        raise ValueError("sigma needs a bijective map")
    wz = check_weight_zero(r)
    if not wz:
        raise ValueError(f"weight zero fails at {wz.witness}; sigma would break the support condition")
    x = r.x_object()
    xx = tensor_obj(x, x)
    n = r.x_size

    def image(lam, j):
        a, b = divmod(j, n)
        u, v = r(lam, b, a)
        return u * n + v

    return from_function(xx, xx, image)


def to_json(r: DynamicalMap) -> dict:
    return {"kind": "dybm", "h_size": r.h_size, "x_size": r.x_size,
            "action": [list(row) for row in r.action.table],
            "r": [[[list(uv) for uv in row] for row in block] for block in r.table]}


def from_json(doc: dict) -> DynamicalMap:
    if not isinstance(doc, dict) or doc.get("kind") != "dybm":
        raise StructureError("expected a document with kind 'dybm'")
    try:
        action = FiniteAction.from_table(doc["action"])
        if action.h.size != doc["h_size"] or action.x.size != doc["x_size"]:
            raise StructureError("declared sizes do not match the action table")
        return DynamicalMap(action, doc["r"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, StructureError):
            raise
        raise StructureError(f"malformed dybm file: {exc}") from None
