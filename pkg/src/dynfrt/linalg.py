"""Exact sparse rational matrices.

Entries are ``fractions.Fraction``; zero entries are never stored.  Rows are
held as ``{row: {col: value}}`` which keeps the permutation-like matrices that
dominate this package cheap to multiply and tensor.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator


def to_fraction(value) -> Fraction:
    """Parse ints, Fractions and "num/den" strings into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read {value!r} as an exact rational")


def format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Mat:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: dict | None = None):
        self.rows = rows
        self.cols = cols
        self.data: dict[int, dict[int, Fraction]] = {}
        if data:
            for i, row in data.items():
                clean = {j: to_fraction(v) for j, v in row.items() if v != 0}
                if clean:
                    self.data[i] = clean

    # construction

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Mat":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        m = cls(n, n)
        m.data = {i: {i: Fraction(1)} for i in range(n)}
        return m

    @classmethod
    def from_entries(cls, rows: int, cols: int,
                     entries: Iterable[tuple[int, int, object]]) -> "Mat":
        """Build from (row, col, value) triples; repeated positions accumulate."""
        m = cls(rows, cols)
        for i, j, v in entries:
            m._add(i, j, to_fraction(v))
        m._prune()
        return m

    @classmethod
    def from_dense(cls, dense) -> "Mat":
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        entries = []
        for i, row in enumerate(dense):
            if len(row) != cols:
                raise ValueError("ragged matrix")
            entries.extend((i, j, v) for j, v in enumerate(row))
        return cls.from_entries(rows, cols, entries)

    @classmethod
    def from_map(cls, rows: int, cols: int, mapping) -> "Mat":
        """0/1 matrix of a function col -> row (mapping[col] = row)."""
        return cls.from_entries(rows, cols, ((mapping[j], j, 1) for j in range(cols)))

    def _add(self, i: int, j: int, v: Fraction) -> None:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i},{j}) outside {self.rows}x{self.cols}")
        if v:
            row = self.data.setdefault(i, {})
            row[j] = row.get(j, 0) + v

    def _prune(self) -> None:
        for i in list(self.data):
            row = self.data[i]
            for j in [j for j, v in row.items() if v == 0]:
                del row[j]
            if not row:
                del self.data[i]

    # access

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.data.get(i, {}).get(j, Fraction(0))

    def entries(self) -> Iterator[tuple[int, int, Fraction]]:
        for i in sorted(self.data):
            row = self.data[i]
            for j in sorted(row):
                yield i, j, row[j]

    def nnz(self) -> int:
        return sum(len(r) for r in self.data.values())

    def is_zero(self) -> bool:
        return not self.data

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for i, j, v in self.entries():
            out[i][j] = v
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    # arithmetic

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.shape, tuple(self.entries())))

    def __repr__(self) -> str:
        return f"Mat({self.rows}x{self.cols}, nnz={self.nnz()})"

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        out = self.copy()
        for i, j, v in other.entries():
            out._add(i, j, v)
        out._prune()
        return out

    def __neg__(self) -> "Mat":
        return self.scale(-1)

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-other)

    def scale(self, c) -> "Mat":
        c = to_fraction(c)
        if c == 0:
            return Mat(self.rows, self.cols)
        out = Mat(self.rows, self.cols)
        out.data = {i: {j: v * c for j, v in row.items()} for i, row in self.data.items()}
        return out

    def copy(self) -> "Mat":
        out = Mat(self.rows, self.cols)
        out.data = {i: dict(row) for i, row in self.data.items()}
        return out

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = Mat(self.rows, other.cols)
        odata = other.data
        for i, row in self.data.items():
            acc: dict[int, Fraction] = {}
            for k, a in row.items():
                orow = odata.get(k)
                if orow is None:
                    continue
                for j, b in orow.items():
                    acc[j] = acc.get(j, 0) + a * b
            acc = {j: v for j, v in acc.items() if v != 0}
            if acc:
                out.data[i] = acc
        return out

    def apply(self, vec: list) -> list[Fraction]:
        """Matrix times a dense column vector."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = [Fraction(0)] * self.rows
        for i, row in self.data.items():
            out[i] = sum((v * vec[j] for j, v in row.items()), Fraction(0))
        return out

    def transpose(self) -> "Mat":
        return Mat.from_entries(self.cols, self.rows, ((j, i, v) for i, j, v in self.entries()))

    def kron(self, other: "Mat") -> "Mat":
        """Kronecker product with row-major pairing of indices."""
        out = Mat(self.rows * other.rows, self.cols * other.cols)
        for i1, j1, a in self.entries():
            for i2, j2, b in other.entries():
                out._add(i1 * other.rows + i2, j1 * other.cols + j2, a * b)
        return out

    def inverse(self) -> "Mat":
        """Exact Gauss-Jordan inverse; raises ValueError when singular."""
        n = self.rows
        if n != self.cols:
            raise ValueError("only square matrices are invertible")
        work = [dict(self.data.get(i, {})) for i in range(n)]
        inv = [{i: Fraction(1)} for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r].get(col)), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            work[col], work[pivot] = work[pivot], work[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
            p = work[col][col]
            if p != 1:
                work[col] = {j: v / p for j, v in work[col].items()}
                inv[col] = {j: v / p for j, v in inv[col].items()}
            for r in range(n):
                if r == col:
                    continue
                c = work[r].get(col)
                if not c:
                    continue
                for src, dst in ((work[col], work[r]), (inv[col], inv[r])):
                    for j, v in src.items():
                        nv = dst.get(j, 0) - c * v
                        if nv:
                            dst[j] = nv
                        else:
                            dst.pop(j, None)
        return Mat(n, n, {i: row for i, row in enumerate(inv)})

    def first_difference(self, other: "Mat") -> tuple[int, int] | None:
        """Lexicographically first position where two same-shape matrices differ."""
        diff = self - other
        for i, j, _ in diff.entries():
            return i, j
        return None


def nullspace(columns: list[list[Fraction]], n_rows: int) -> list[list[Fraction]]:
    """Basis of {c : sum_j c_j * columns[j] = 0}, by exact row reduction."""
    n = len(columns)
    rows = [[to_fraction(columns[j][i]) for j in range(n)] for i in range(n_rows)]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        rows[r] = [v / p for v in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        basis.append(vec)
    return basis
