"""The grading group: permutations of H generated by the translations lam -> lam . x.

Group elements act on H from the right, so the product alpha*beta sends lam to
(lam alpha) beta.  A generator word is a tuple of (x, +1) / (x, -1) pairs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .carriers import FiniteAction

DEFAULT_GROUP_CAP = 10_000

GeneratorWord = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class GroupElement:
    perm: tuple[int, ...]

    def __post_init__(self):
        perm = tuple(self.perm)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"{perm} is not a permutation")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def identity(cls, n: int) -> "GroupElement":
        return cls(tuple(range(n)))

    def __call__(self, lam: int) -> int:
        return self.perm[lam]

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        # lam (self other) = (lam self) other
        return GroupElement(tuple(other.perm[p] for p in self.perm))

    def inverse(self) -> "GroupElement":
        inv = [0] * len(self.perm)
        for lam, p in enumerate(self.perm):
            inv[p] = lam
        return GroupElement(tuple(inv))

    def is_identity(self) -> bool:
        return all(lam == p for lam, p in enumerate(self.perm))

    def order(self) -> int:
        k, cur = 1, self
        while not cur.is_identity():
            cur = cur * self
            k += 1
        return k

    def __repr__(self) -> str:
        return f"GroupElement({list(self.perm)})"


def product(elements: Iterable[GroupElement], n: int) -> GroupElement:
    out = GroupElement.identity(n)
    for e in elements:
        out = out * e
    return out


def translation_element(a: FiniteAction, x: int) -> GroupElement:
    return GroupElement(a.column(x))


def evaluate_word(a: FiniteAction, word: Sequence[tuple[int, int]]) -> GroupElement:
    out = GroupElement.identity(a.h.size)
    for x, sign in word:
        if not 0 <= x < a.x.size:
            raise ValueError(f"generator {x} out of range")
        g = translation_element(a, x)
        if sign == 1:
            out = out * g
        elif sign == -1:
            out = out * g.inverse()
        else:
            raise ValueError(f"generator sign must be +1 or -1, got {sign}")
    return out


def same_class(a: FiniteAction, w1, w2) -> bool:
    return evaluate_word(a, w1) == evaluate_word(a, w2)


class GroupOverflow(RuntimeError):
    pass


@dataclass
class GroupClosure:
    elements: list[GroupElement]
    witnesses: dict[GroupElement, GeneratorWord]
    generators: list[GroupElement]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        return g in self.witnesses


def generate_group(a: FiniteAction, cap: int = DEFAULT_GROUP_CAP) -> GroupClosure:
    """Breadth-first closure from the translations and their inverses.

    Generators are tried in index order, positive before inverse, so witnesses
    are shortest words and deterministic.
    """
    n = a.h.size
    gens: list[tuple[tuple[int, int], GroupElement]] = []
    for x in a.x:
        t = translation_element(a, x)
        gens.append(((x, 1), t))
        gens.append(((x, -1), t.inverse()))
    e = GroupElement.identity(n)
    witnesses: dict[GroupElement, GeneratorWord] = {e: ()}
    elements = [e]
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for letter, t in gens:
            h = g * t
            if h not in witnesses:
                if len(elements) >= cap:
                    raise GroupOverflow(f"group closure exceeded the cap of {cap} elements")
                witnesses[h] = witnesses[g] + (letter,)
                elements.append(h)
                queue.append(h)
    return GroupClosure(elements, witnesses, [t for (x, s), t in gens if s == 1])


def bracket(a: FiniteAction, *xs: int) -> GroupElement:
    """[x1 x2 ...] as a group element."""
    return evaluate_word(a, [(x, 1) for x in xs])
