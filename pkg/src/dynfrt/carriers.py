"""Finite carrier sets, actions, quasigroups and ternary systems."""

from __future__ import annotations

from dataclasses import dataclass, field

from .report import CheckReport, StructureError

DEFAULT_SIZE_CAP = 16

Q5_TABLE = (
    (4, 3, 2, 1, 0),
    (3, 1, 0, 2, 4),
    (0, 2, 3, 4, 1),
    (1, 0, 4, 3, 2),
    (2, 4, 1, 0, 3),
)


@dataclass(frozen=True)
class FiniteSet:
    size: int
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise StructureError(f"a carrier needs at least one element, got size {self.size!r}")
        if self.labels is not None and len(self.labels) != self.size:
            raise StructureError("label count does not match carrier size")

    def __iter__(self):
        return iter(range(self.size))

    def __len__(self):
        return self.size

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)


def _as_table(rows, n_rows: int, n_cols: int, bound: int) -> tuple[tuple[int, ...], ...]:
    if len(rows) != n_rows or any(len(r) != n_cols for r in rows):
        raise StructureError(f"table must be {n_rows}x{n_cols}")
    out = []
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < bound:
                raise StructureError(f"entry ({i},{j})={v!r} out of range 0..{bound - 1}")
        out.append(tuple(row))
    return tuple(out)


def _is_perm(values, n: int) -> bool:
    return sorted(values) == list(range(n))


@dataclass(frozen=True)
class FiniteAction:
    """table[lam][a] = lam . a, an element of H."""

    h: FiniteSet
    x: FiniteSet
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "table", _as_table(self.table, self.h.size, self.x.size, self.h.size))

    @classmethod
    def from_table(cls, table) -> "FiniteAction":
        if not table:
            raise StructureError("empty action table")
        return cls(FiniteSet(len(table)), FiniteSet(len(table[0])), table)

    def act(self, lam: int, a: int) -> int:
        return self.table[lam][a]

    def column(self, a: int) -> tuple[int, ...]:
        return tuple(self.table[lam][a] for lam in self.h)


@dataclass(frozen=True)
class Quasigroup:
    carrier: FiniteSet
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.carrier.size
        object.__setattr__(self, "table", _as_table(self.table, n, n, n))

    @classmethod
    def from_table(cls, table) -> "Quasigroup":
        if not table:
            raise StructureError("empty quasigroup table")
        return cls(FiniteSet(len(table)), table)

    @property
    def size(self) -> int:
        return self.carrier.size

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def as_action(self) -> FiniteAction:
        return FiniteAction(self.carrier, self.carrier, self.table)


@dataclass(frozen=True)
class TernarySystem:
    carrier: FiniteSet
    table: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        n = self.carrier.size
        if len(self.table) != n:
            raise StructureError(f"ternary table must have {n} slices")
        object.__setattr__(self, "table", tuple(_as_table(s, n, n, n) for s in self.table))

    @classmethod
    def from_function(cls, n: int, op) -> "TernarySystem":
        return cls(FiniteSet(n), tuple(tuple(tuple(op(a, b, c) for c in range(n))
                                             for b in range(n)) for a in range(n)))

    def __call__(self, a: int, b: int, c: int) -> int:
        return self.table[a][b][c]


def check_size_cap(*sizes: int, cap: int = DEFAULT_SIZE_CAP) -> None:
    for s in sizes:
        if s > cap:
            raise StructureError(f"carrier of size {s} exceeds the configured cap {cap}")


def validate_action(a: FiniteAction) -> CheckReport:
    bad = [x for x in a.x if not _is_perm(a.column(x), a.h.size)]
    return CheckReport("action", not bad, witness={"failing_columns": bad} if bad else None,
                       count=a.x.size)


def validate_quasigroup(q: Quasigroup) -> CheckReport:
    n = q.size
    bad_rows = [i for i in range(n) if not _is_perm(q.table[i], n)]
    bad_cols = [j for j in range(n) if not _is_perm([q.table[i][j] for i in range(n)], n)]
    ok = not bad_rows and not bad_cols
    witness = None if ok else {"failing_rows": bad_rows, "failing_columns": bad_cols}
    return CheckReport("quasigroup", ok, witness=witness, count=2 * n)


def left_divide(q: Quasigroup, a: int, b: int) -> int:
    """The unique c with a.c = b."""
    row = q.table[a]
    for c, v in enumerate(row):
        if v == b:
            return c
    raise ValueError(f"{b} does not occur in row {a}; not a quasigroup")


def builtin_q5() -> Quasigroup:
    return Quasigroup.from_table(Q5_TABLE)


def builtin_z5_ternary() -> TernarySystem:
    return TernarySystem.from_function(5, lambda a, b, c: (a - b + c) % 5)


def cyclic_group(n: int) -> Quasigroup:
    return Quasigroup.from_table([[(a + b) % n for b in range(n)] for a in range(n)])


def group_ternary(n: int) -> TernarySystem:
    return TernarySystem.from_function(n, lambda a, b, c: (a - b + c) % n)


# serialization

def to_json(s) -> dict:
    if isinstance(s, Quasigroup):
        return {"kind": "quasigroup", "size": s.size, "table": [list(r) for r in s.table]}
    if isinstance(s, FiniteAction):
        return {"kind": "action", "h_size": s.h.size, "x_size": s.x.size,
                "table": [list(r) for r in s.table]}
    if isinstance(s, TernarySystem):
        return {"kind": "ternary", "size": s.carrier.size,
                "table": [[list(r) for r in sl] for sl in s.table]}
    raise TypeError(f"cannot serialize {type(s).__name__}")


def from_json(doc: dict):
    if not isinstance(doc, dict) or "kind" not in doc:
        raise StructureError("structure file must be an object with a 'kind' field")
    kind = doc["kind"]
    try:
        if kind == "quasigroup":
            q = Quasigroup(FiniteSet(doc["size"]), doc["table"])
            return q
        if kind == "action":
            return FiniteAction(FiniteSet(doc["h_size"]), FiniteSet(doc["x_size"]), doc["table"])
        if kind == "ternary":
            return TernarySystem(FiniteSet(doc["size"]), doc["table"])
    except KeyError as exc:
        raise StructureError(f"missing field {exc}") from None
    except TypeError as exc:
        raise StructureError(str(exc)) from None
    raise StructureError(f"unknown structure kind {kind!r}")
