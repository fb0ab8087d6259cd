"""Seeded generators of small random structures for property checks."""

from __future__ import annotations

import random
from fractions import Fraction

from .carriers import FiniteAction
from .linalg import Mat
from .vecth import VectHMorphism, VectHObject
from .wgroup import GroupElement


def random_perm(rng: random.Random, n: int) -> tuple[int, ...]:
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def random_action(rng: random.Random, max_h: int = 4, max_x: int = 4) -> FiniteAction:
    nh = rng.randint(1, max_h)
    nx = rng.randint(1, max_x)
    cols = [random_perm(rng, nh) for _ in range(nx)]
    return FiniteAction.from_table([[cols[a][lam] for a in range(nx)] for lam in range(nh)])


def random_object(rng: random.Random, n_h: int, max_size: int = 3) -> VectHObject:
    size = rng.randint(1, max_size)
    return VectHObject(tuple(tuple(rng.randrange(n_h) for _ in range(size)) for _ in range(n_h)))


def random_element(rng: random.Random, n_h: int) -> GroupElement:
    return GroupElement(random_perm(rng, n_h))


def random_scalar(rng: random.Random, zero_weight: float = 0.3) -> Fraction:
    if rng.random() < zero_weight:
        return Fraction(0)
    return Fraction(rng.randint(-5, 5), rng.randint(1, 4))


def random_morphism(rng: random.Random, source: VectHObject, target: VectHObject,
                    zero_weight: float = 0.3) -> VectHMorphism:
    """Random rational entries on exactly the support-allowed positions."""
    mats = []
    for lam in range(source.n_h):
        entries = [(w, v, random_scalar(rng, zero_weight))
                   for w in range(target.size) for v in range(source.size)
                   if target.act[lam][w] == source.act[lam][v]]
        mats.append(Mat.from_entries(target.size, source.size, entries))
    return VectHMorphism(source, target, mats)


def random_invertible_morphism(rng: random.Random, source: VectHObject,
                               target: VectHObject) -> VectHMorphism | None:
    """Random invertible support-respecting morphism, or None when none exists."""
    if source.size != target.size:
        return None
    for _ in range(50):
        f = random_morphism(rng, source, target, zero_weight=0.2)
        try:
            f.inverse()
        except ValueError:
            continue
        return f
    return None
