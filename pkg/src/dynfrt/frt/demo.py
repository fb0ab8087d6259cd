"""The Q5 example showing the graded components of A_R do not form a direct sum."""

from __future__ import annotations

from itertools import product

from ..carriers import builtin_q5, builtin_z5_ternary
from ..dhx import MHFunction, ihx_apply
from ..dybm import DynamicalMap, build_from_quasigroup, sigma_from_r
from ..lop import SigmaContext
from .algebra import AlgebraElement, Brackets, Gen, Scalar, counit, grading
from .channels import CounitChannel, basic_representation
from .ideal import family_four_element


def r_indicator(r: DynamicalMap, a: int, c: int, x: int, y: int) -> MHFunction:
    """lam -> 1 if R(lam)(x, y) == (a, c) else 0."""
    return MHFunction(tuple(int(r(lam, x, y) == (a, c)) for lam in range(r.h_size)))


def _perm(g) -> list[int]:
    return list(g.perm)


def demo_nondirect_sum() -> dict:
    q = builtin_q5()
    r = build_from_quasigroup(q, builtin_z5_ternary())
    ctx = SigmaContext.build(r.x_object(), sigma_from_r(r))
    br = Brackets(r.action)
    n = r.x_size
    one = MHFunction.const(r.h_size)

    # (i) the element
    coeff = r_indicator(r, 4, 3, 1, 2)
    v = AlgebraElement.word(Scalar.left(coeff), Gen(1, 1), Gen(2, 2))
    deg_v = grading((Gen(1, 1), Gen(2, 2)), br)

    # (ii) counit value at lam = 0
    eps_value = ihx_apply(counit(v, br), one)(0)

    # (iii) rewriting by the family-(4) relation
    relation = family_four_element(ctx, 4, 2, 3, 1)
    rewritten = v - relation
    displayed = AlgebraElement(
        [((Scalar.left(r_indicator(r, 4, 3, x, y)), Gen(x, 1), Gen(y, 2)), -1)
         for x, y in product(range(n), repeat=2) if (x, y) != (1, 2)]
        + [((Scalar.right(r_indicator(r, x, y, 1, 2)), Gen(3, y), Gen(4, x)), 1)
           for x, y in product(range(n), repeat=2)])
    terms = []
    off_component = True
    for word, c in sorted(rewritten.terms.items(), key=lambda kv: repr(kv[0])):
        left, right = grading(word, br)
        if (left, right) == deg_v:
            off_component = False
        terms.append({"word": repr(word), "coeff": str(c),
                      "degree": [_perm(left), _perm(right)]})
    channels = [CounitChannel(br), basic_representation(ctx, br)]
    agree = {ch.name: ch.evaluate(v - rewritten).is_zero() for ch in channels}

    # (iv) group-level facts
    t12 = br.pos[1] * br.pos[2]
    t34 = br.pos[3] * br.pos[4]
    solutions = [[x, y] for x, y in product(range(n), repeat=2) if br.pos[x] * br.pos[y] == t12]

    checks = {
        "eps_value_at_0_is_1": eps_value == 1,
        "rewriting_matches_displayed_form": rewritten == displayed,
        "rewriting_avoids_degree_of_v": off_component and bool(terms),
        "rewriting_agrees_on_channels": all(agree.values()),
        "unique_solution_12": solutions == [[1, 2]],
        "bracket_12_differs_from_34": t12 != t34,
    }
    return {
        "element": repr(v),
        "degree": [_perm(deg_v[0]), _perm(deg_v[1])],
        "eps_value_at_0": str(eps_value),
        "rewritten_terms": terms,
        "channel_agreement": agree,
        "solutions_of_xy_eq_12": solutions,
        "bracket_12": _perm(t12),
        "bracket_34": _perm(t34),
        "checks": checks,
        "pass": all(checks.values()),
        "conclusion": ("a nonzero element of the ([12],[12]) component equals a sum of elements "
                       "from other components, so the graded sum is not direct"),
    }
