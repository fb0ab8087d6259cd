import random
from itertools import permutations, product

import pytest
from hypothesis import given

from conftest import rngs
from dynfrt.dybm import flip_map, sigma_from_r
from dynfrt.linalg import Mat
from dynfrt.lop import (LOperator, SigmaContext, boxtimes, check_rll, check_yb_operator,
                        has_isomorphism, intertwiner_basis, is_rep_morphism, rll_sides,
                        sigma_loperator, unit_loperator, yb_sides)
from dynfrt.randomdata import random_action, random_invertible_morphism, random_object
from dynfrt.report import StructureError
from dynfrt.vecth import (VectHMorphism, VectHObject, identity, left_unit, right_unit,
                          tensor_obj)

X_TRIVIAL = VectHObject(((0, 0),))


def _perm_context(images):
    xx = tensor_obj(X_TRIVIAL, X_TRIVIAL)
    mapping = {j: images[j][0] * 2 + images[j][1] for j in range(4)}
    return SigmaContext.build(X_TRIVIAL, VectHMorphism(xx, xx, [Mat.from_map(4, 4, mapping)]))


def _flip_context(rng):
    r = flip_map(random_action(rng, max_h=3, max_x=3))
    return SigmaContext.build(r.x_object(), sigma_from_r(r))


def test_q5_sigma_is_yang_baxter(q5):
    rep = check_yb_operator(q5.ctx)
    assert rep and rep.count == 5 * 125 ** 2


def test_q5_rll(q5):
    assert check_rll(q5.ctx, sigma_loperator(q5.ctx))


def test_identity_sigma_is_yang_baxter():
    assert check_yb_operator(_perm_context([(0, 0), (0, 1), (1, 0), (1, 1)]))


def test_braid_relation_over_all_permutations_of_two_points():
    # An independent brute force finds exactly these five solutions among the 24.
    solutions = {((0, 0), (0, 1), (1, 0), (1, 1)), ((0, 0), (1, 0), (0, 1), (1, 1)),
                 ((0, 1), (1, 1), (0, 0), (1, 0)), ((1, 0), (0, 0), (1, 1), (0, 1)),
                 ((1, 1), (0, 1), (1, 0), (0, 0))}
    for images in permutations(product(range(2), repeat=2)):
        rep = check_yb_operator(_perm_context(images))
        assert bool(rep) == (images in solutions), images
        if not rep:
            left, right = yb_sides(_perm_context(images))
            w = rep.witness
            assert left.mats[w["lambda"]][w["row"], w["col"]] != right.mats[w["lambda"]][w["row"], w["col"]]


def test_random_invertible_l_failing_rll_has_witness():
    # the flip would not do: with sigma = flip every invertible L satisfies RLL
    ctx = _perm_context([(0, 1), (1, 1), (0, 0), (1, 0)])
    assert check_yb_operator(ctx)
    rng = random.Random(7)
    for _ in range(200):
        v = random_object(rng, ctx.n_h, max_size=2)
        l = random_invertible_morphism(rng, tensor_obj(v, ctx.x), tensor_obj(ctx.x, v))
        if l is None:
            continue
        rep = check_rll(ctx, LOperator.build(v, ctx.x, l))
        if not rep:
            left, right = rll_sides(ctx, LOperator.build(v, ctx.x, l))
            w = rep.witness
            assert str(left.mats[w["lambda"]][w["row"], w["col"]]) == w["left"]
            assert left != right
            return
    pytest.fail("no failing L found")


def test_unit_loperator_passes(q5):
    assert check_rll(q5.ctx, unit_loperator(q5.ctx))


def test_boxtimes_square_passes_and_inverts(q5):
    l = sigma_loperator(q5.ctx)
    sq = boxtimes(q5.ctx, l, l)
    assert check_rll(q5.ctx, sq)
    assert sq.l_inv @ sq.l == identity(sq.l.source)


def test_unit_constraints_are_rep_morphisms(q5):
    ctx = q5.ctx
    l, u = sigma_loperator(ctx), unit_loperator(ctx)
    assert is_rep_morphism(ctx, left_unit(l.v), boxtimes(ctx, u, l), l)
    assert is_rep_morphism(ctx, right_unit(l.v), boxtimes(ctx, l, u), l)


def test_unit_and_x_are_not_isomorphic(q5):
    ctx = q5.ctx
    u, l = unit_loperator(ctx), sigma_loperator(ctx)
    assert not has_isomorphism(ctx, u, l)
    assert len(intertwiner_basis(ctx, u, l)) == 1
    assert has_isomorphism(ctx, l, l)


@given(rngs)
def test_boxtimes_closure_on_flip(rng):
    ctx = _flip_context(rng)
    ops = [unit_loperator(ctx), sigma_loperator(ctx)]
    assert check_yb_operator(ctx)
    for a, b in product(ops, repeat=2):
        c = boxtimes(ctx, a, b)
        assert check_rll(ctx, c)
        assert c.l_inv @ c.l == identity(c.l.source)


@given(rngs)
def test_rep_morphisms_compose(rng):
    ctx = _flip_context(rng)
    l = sigma_loperator(ctx)
    basis = intertwiner_basis(ctx, l, l)
    assert basis
    for f in basis[:3]:
        for g in basis[:3]:
            assert is_rep_morphism(ctx, f @ g, l, l)


def test_loperator_shape_and_invertibility_errors(q5):
    x = q5.ctx.x
    with pytest.raises(StructureError):
        LOperator.build(x, x, identity(x))
    xx = tensor_obj(x, x)
    zero = VectHMorphism(xx, xx, [Mat(25, 25)] * 5)
    with pytest.raises(StructureError):
        LOperator.build(x, x, zero)
