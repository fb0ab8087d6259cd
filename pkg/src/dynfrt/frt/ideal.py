"""The five generator families of the defining ideal, enumerated concretely.

Families (1) and (3) are linear in their M_H arguments, so enumerating them on
the delta bases covers the whole family.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterator

from ..dhx import MHFunction
from ..lop import SigmaContext
from .algebra import AlgebraElement, Brackets, Gen, GenInv, Scalar

FAMILY_ONE_SCALARS = (Fraction(2), Fraction(-1, 3))


def sigma_coefficient(ctx: SigmaContext, a: int, c: int, x: int, y: int) -> MHFunction:
    """lam -> sigma(lam)[(a, c), (x, y)]."""
    n = ctx.x.size
    return MHFunction(tuple(m[a * n + c, x * n + y] for m in ctx.sigma.mats))


def _coefficient_table(ctx: SigmaContext) -> dict:
    n = ctx.x.size
    return {(a, c, x, y): sigma_coefficient(ctx, a, c, x, y)
            for a, c, x, y in product(range(n), repeat=4)}


def family_one(n_h: int) -> Iterator[tuple[str, AlgebraElement]]:
    basis = [Scalar.basis(n_h, i, j) for i in range(n_h) for j in range(n_h)]
    for k, s in enumerate(basis):
        for c in FAMILY_ONE_SCALARS:
            yield (f"1:scale[{k}]*{c}",
                   AlgebraElement.word(s, coef=c, normalize=False)
                   - AlgebraElement.word(s.scale(c), normalize=False))
        for k2, t in enumerate(basis):
            yield (f"1:sum[{k},{k2}]",
                   AlgebraElement.word(s, normalize=False) + AlgebraElement.word(t, normalize=False)
                   - AlgebraElement.word(s + t, normalize=False))
            yield (f"1:prod[{k},{k2}]",
                   AlgebraElement.word(s, t, normalize=False)
                   - AlgebraElement.word(s * t, normalize=False))


def family_two(n_x: int) -> Iterator[tuple[str, AlgebraElement]]:
    one = AlgebraElement.one()
    for a, b in product(range(n_x), repeat=2):
        e1 = AlgebraElement([((Gen(a, c), GenInv(c, b)), 1) for c in range(n_x)])
        e2 = AlgebraElement([((GenInv(a, c), Gen(c, b)), 1) for c in range(n_x)])
        if a == b:
            e1, e2 = e1 - one, e2 - one
        yield f"2:L*Linv[{a},{b}]", e1
        yield f"2:Linv*L[{a},{b}]", e2


def family_three(br: Brackets) -> Iterator[tuple[str, AlgebraElement]]:
    n_h, n_x = br.n_h, br.action.x.size
    W = AlgebraElement.word
    for a, b in product(range(n_x), repeat=2):
        ta, tb = br.pos[a], br.pos[b]
        for mu in range(n_h):
            f = MHFunction.delta(n_h, mu)
            L, Li = Gen(a, b), GenInv(a, b)
            yield (f"3:left-L[{a},{b};{mu}]",
                   W(Scalar.left(f.shift(ta)), L) - W(L, Scalar.left(f)))
            yield (f"3:right-L[{a},{b};{mu}]",
                   W(Scalar.right(f.shift(tb)), L) - W(L, Scalar.right(f)))
            yield (f"3:left-Linv[{a},{b};{mu}]",
                   W(Scalar.left(f), Li) - W(Li, Scalar.left(f.shift(tb))))
            yield (f"3:right-Linv[{a},{b};{mu}]",
                   W(Scalar.right(f), Li) - W(Li, Scalar.right(f.shift(ta))))


def family_four_element(ctx: SigmaContext, a: int, b: int, c: int, d: int,
                        table: dict | None = None) -> AlgebraElement:
    n_x = ctx.x.size
    coef = table.__getitem__ if table is not None else (lambda k: sigma_coefficient(ctx, *k))
    terms = []
    for x, y in product(range(n_x), repeat=2):
        terms.append(((Scalar.left(coef((a, c, x, y))), Gen(y, d), Gen(x, b)), 1))
        terms.append(((Scalar.right(coef((x, y, b, d))), Gen(c, y), Gen(a, x)), -1))
    return AlgebraElement(terms)


def family_four(ctx: SigmaContext) -> Iterator[tuple[str, AlgebraElement]]:
    n_x = ctx.x.size
    table = _coefficient_table(ctx)
    for a, b, c, d in product(range(n_x), repeat=4):
        yield f"4:[{a},{b},{c},{d}]", family_four_element(ctx, a, b, c, d, table)


def family_five(n_h: int) -> Iterator[tuple[str, AlgebraElement]]:
    ones = Scalar.pure(MHFunction.const(n_h), MHFunction.const(n_h))
    yield "5:unit", AlgebraElement.one() - AlgebraElement.word(ones, normalize=False)


def ideal_generators(ctx: SigmaContext, br: Brackets) -> Iterator[tuple[str, AlgebraElement]]:
    yield from family_one(br.n_h)
    yield from family_two(br.action.x.size)
    yield from family_three(br)
    yield from family_four(ctx)
    yield from family_five(br.n_h)
