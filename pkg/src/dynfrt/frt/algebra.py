"""Words over the FRT alphabet and their formal linear combinations.

The alphabet has three kinds of letters: scalar letters (an element of
M_H (x) M_H stored as its coefficient matrix c[i][j] on the basis
delta_i (x) delta_j), generators L_ab and inverse generators Linv_ab.
Elements of the quotient algebra are represented by these free-algebra
preimages; equality in the quotient is only ever observed through
evaluation channels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from ..carriers import FiniteAction, validate_action
from ..dhx import IhxElement, MHFunction
from ..linalg import to_fraction
from ..report import StructureError
from ..wgroup import GroupElement, translation_element


class Scalar:
    """sum_ij coeffs[i][j] delta_i (x) delta_j in M_H (x) M_H."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs):
        rows = tuple(tuple(to_fraction(c) for c in row) for row in coeffs)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise StructureError("a scalar letter needs a square |H| x |H| coefficient matrix")
        self.coeffs = rows
        self._hash = hash(rows)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._hash == other._hash and self.coeffs == other.coeffs

    @classmethod
    def pure(cls, f: MHFunction, g: MHFunction) -> "Scalar":
        return _pure(f.values, g.values)

    @classmethod
    def left(cls, f: MHFunction) -> "Scalar":
        return cls.pure(f, MHFunction.const(len(f)))

    @classmethod
    def right(cls, g: MHFunction) -> "Scalar":
        return cls.pure(MHFunction.const(len(g)), g)

    @classmethod
    def basis(cls, n: int, i: int, j: int) -> "Scalar":
        return cls.pure(MHFunction.delta(n, i), MHFunction.delta(n, j))

    @property
    def n_h(self) -> int:
        return len(self.coeffs)

    def __mul__(self, other: "Scalar") -> "Scalar":
        return Scalar(tuple(tuple(a * b for a, b in zip(r1, r2))
                            for r1, r2 in zip(self.coeffs, other.coeffs)))

    def __add__(self, other: "Scalar") -> "Scalar":
        return Scalar(tuple(tuple(a + b for a, b in zip(r1, r2))
                            for r1, r2 in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "Scalar":
        c = to_fraction(c)
        return Scalar(tuple(tuple(c * a for a in r) for r in self.coeffs))

    def is_one(self) -> bool:
        return all(c == 1 for r in self.coeffs for c in r)

    def is_zero(self) -> bool:
        return not any(c for r in self.coeffs for c in r)

    def diagonal(self) -> MHFunction:
        """m(xi): lam -> sum_ij c_ij delta_i(lam) delta_j(lam)."""
        return MHFunction(tuple(self.coeffs[i][i] for i in range(self.n_h)))

    def row(self, i: int) -> MHFunction:
        return MHFunction(self.coeffs[i])

    def factor(self) -> tuple[MHFunction, MHFunction] | None:
        """(f, g) with self = f (x) g and f's first nonzero value 1, if rank one."""
        rows = self.coeffs
        pivot = next(((i, j) for i, r in enumerate(rows) for j, c in enumerate(r) if c), None)
        if pivot is None:
            return None
        i0, j0 = pivot
        g = rows[i0]
        f = [rows[i][j0] / g[j0] for i in range(self.n_h)]
        f_norm = f[i0]
        f = [c / f_norm for c in f]
        g = tuple(c * f_norm for c in g)
        for i, r in enumerate(rows):
            if any(r[j] != f[i] * g[j] for j in range(self.n_h)):
                return None
        return MHFunction(tuple(f)), MHFunction(g)

    def __repr__(self) -> str:
        fg = self.factor()
        if fg is not None:
            return f"S({[str(v) for v in fg[0].values]}(x){[str(v) for v in fg[1].values]})"
        return f"S({[[str(c) for c in r] for r in self.coeffs]})"


@lru_cache(maxsize=65536)
def _pure(f: tuple, g: tuple) -> Scalar:
    zero = Fraction(0)
    return Scalar(tuple(tuple(zero if a == 0 else (b if a == 1 else a * b) for b in g) for a in f))


@dataclass(frozen=True)
class Gen:
    a: int
    b: int

    def __repr__(self) -> str:
        return f"L{self.a}{self.b}"


@dataclass(frozen=True)
class GenInv:
    a: int
    b: int

    def __repr__(self) -> str:
        return f"Li{self.a}{self.b}"


Letter = Union[Scalar, Gen, GenInv]
Word = tuple  # tuple[Letter, ...]


def normalize_word(word: Sequence[Letter]) -> Word | None:
    """Merge adjacent scalar letters and drop unit scalars; None if a scalar is zero."""
    out: list[Letter] = []
    for letter in word:
        if isinstance(letter, Scalar):
            if letter.is_zero():
                return None
            if out and isinstance(out[-1], Scalar):
                merged = out[-1] * letter
                if merged.is_zero():
                    return None
                out[-1] = merged
            else:
                out.append(letter)
            if out[-1].is_one():
                out.pop()
        else:
            out.append(letter)
    return tuple(out)


class AlgebraElement:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, object] | Iterable[tuple[Word, object]] = (),
                 normalize: bool = True):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Fraction] = {}
        for word, coef in items:
            coef = to_fraction(coef)
            if coef == 0:
                continue
            w = normalize_word(word) if normalize else tuple(word)
            if w is None:
                continue
            acc[w] = acc.get(w, 0) + coef
        self.terms = {w: c for w, c in acc.items() if c != 0}

    @classmethod
    def word(cls, *letters: Letter, coef=1, normalize: bool = True) -> "AlgebraElement":
        return cls({tuple(letters): coef}, normalize=normalize)

    @classmethod
    def one(cls) -> "AlgebraElement":
        return cls({(): 1})

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(list(self.terms.items()) + list(other.terms.items()), normalize=False)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(-1)

    def __neg__(self) -> "AlgebraElement":
        return self.scale(-1)

    def scale(self, c) -> "AlgebraElement":
        c = to_fraction(c)
        return AlgebraElement({w: c * v for w, v in self.terms.items()}, normalize=False)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement([(w1 + w2, c1 * c2) for w1, c1 in self.terms.items()
                               for w2, c2 in other.terms.items()])

    def __eq__(self, other) -> bool:
        """Formal equality of preimages, not equality in the quotient."""
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{''.join(map(repr, w)) or '1'}" for w, c in self.terms.items())


def validate_letters(e: AlgebraElement, n_h: int, n_x: int) -> None:
    for word in e.terms:
        for letter in word:
            if isinstance(letter, Scalar):
                if letter.n_h != n_h:
                    raise StructureError("scalar letter has the wrong size")
            elif not (0 <= letter.a < n_x and 0 <= letter.b < n_x):
                raise StructureError(f"generator indices out of range in {letter!r}")


# grading

class Brackets:
    """Cache of the translations [x] and their inverses for one action."""

    def __init__(self, action: FiniteAction):
        self.action = action
        self.n_h = action.h.size
        self.pos = [translation_element(action, x) for x in action.x]
        self.neg = [g.inverse() for g in self.pos]
        self.one = GroupElement.identity(self.n_h)

    @classmethod
    def from_object(cls, x) -> "Brackets":
        """Brackets for the action carried by an object X of Vect_H."""
        action = FiniteAction.from_table(x.act)
        rep = validate_action(action)
        if not rep:
            raise StructureError(f"X does not act by bijections: {rep.witness}")
        return cls(action)

    def letter_degree(self, letter: Letter) -> tuple[GroupElement, GroupElement]:
        if isinstance(letter, Gen):
            return self.pos[letter.a], self.pos[letter.b]
        if isinstance(letter, GenInv):
            return self.neg[letter.b], self.neg[letter.a]
        return self.one, self.one


def grading(word: Sequence[Letter], action: FiniteAction | Brackets):
    br = action if isinstance(action, Brackets) else Brackets(action)
    left, right = br.one, br.one
    for letter in word:
        l, r = br.letter_degree(letter)
        left, right = left * l, right * r
    return left, right


# coproduct

def letter_coproduct(letter: Letter, n_x: int) -> list[tuple[Word, Word]]:
    if isinstance(letter, Gen):
        return [((Gen(letter.a, c),), (Gen(c, letter.b),)) for c in range(n_x)]
    if isinstance(letter, GenInv):
        return [((GenInv(c, letter.b),), (GenInv(letter.a, c),)) for c in range(n_x)]
    fg = letter.factor()
    if fg is not None:
        f, g = fg
        pairs = [(f, g)]
    else:
        n = letter.n_h
        pairs = [(MHFunction.delta(n, i), letter.row(i)) for i in range(n)
                 if not letter.row(i).is_zero()]
    return [((Scalar.left(f),), (Scalar.right(g),)) for f, g in pairs]


PairSum = dict  # dict[tuple[Word, Word], Fraction]


def coproduct(e: AlgebraElement, n_x: int) -> PairSum:
    out: dict[tuple[Word, Word], Fraction] = {}
    for word, coef in e.terms.items():
        partial: dict[tuple[Word, Word], Fraction] = {((), ()): coef}
        for letter in word:
            nxt: dict[tuple[Word, Word], Fraction] = {}
            for (w1, w2), c in partial.items():
                for l1, l2 in letter_coproduct(letter, n_x):
                    n1, n2 = normalize_word(w1 + l1), normalize_word(w2 + l2)
                    if n1 is None or n2 is None:
                        continue
                    nxt[(n1, n2)] = nxt.get((n1, n2), 0) + c
            partial = nxt
        for k, c in partial.items():
            out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c != 0}


def coproduct_left_then(e: AlgebraElement, n_x: int) -> dict:
    """(Delta (x) id) Delta as a formal sum of word triples."""
    out: dict[tuple, Fraction] = {}
    for (w1, w2), c in coproduct(e, n_x).items():
        for (u1, u2), c2 in coproduct(AlgebraElement({w1: 1}), n_x).items():
            key = (u1, u2, w2)
            out[key] = out.get(key, 0) + c * c2
    return {k: c for k, c in out.items() if c != 0}


def coproduct_right_then(e: AlgebraElement, n_x: int) -> dict:
    """(id (x) Delta) Delta as a formal sum of word triples."""
    out: dict[tuple, Fraction] = {}
    for (w1, w2), c in coproduct(e, n_x).items():
        for (u1, u2), c2 in coproduct(AlgebraElement({w2: 1}), n_x).items():
            key = (w1, u1, u2)
            out[key] = out.get(key, 0) + c * c2
    return {k: c for k, c in out.items() if c != 0}


# counit

def letter_counit(letter: Letter, br: Brackets) -> IhxElement:
    n = br.n_h
    if isinstance(letter, Gen):
        if letter.a != letter.b:
            return IhxElement(n)
        return IhxElement.shift_operator(br.pos[letter.a])
    if isinstance(letter, GenInv):
        if letter.a != letter.b:
            return IhxElement(n)
        return IhxElement.shift_operator(br.neg[letter.b])
    return IhxElement.multiplication(letter.diagonal())


def counit(e: AlgebraElement, action: FiniteAction | Brackets) -> IhxElement:
    br = action if isinstance(action, Brackets) else Brackets(action)
    out = IhxElement(br.n_h)
    for word, coef in e.terms.items():
        acc = IhxElement.one(br.n_h)
        for letter in word:
            acc = acc * letter_counit(letter, br)
            if not acc.terms:
                break
        out = out + acc.scale(coef)
    return out
