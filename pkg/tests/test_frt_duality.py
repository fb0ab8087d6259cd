from hypothesis import given

from conftest import rngs
from dynfrt.dhx import component_shape
from dynfrt.frt.duality import composite_through_star, vee, vee_closed_form, wedge, wedge_closed_form
from dynfrt.randomdata import random_element, random_morphism, random_object
from dynfrt.vecth import VectHObject, identity, tensor_obj
from dynfrt.dhx import left_point
from dynfrt.wgroup import GroupElement


def _case(rng):
    n = rng.randint(1, 4)
    v = random_object(rng, n)
    alpha, beta = random_element(rng, n), random_element(rng, n)
    return v, alpha, beta


@given(rngs)
def test_wedge_inverts_vee(rng):
    v, alpha, beta = _case(rng)
    u = random_morphism(rng, *component_shape(v, beta, alpha))
    assert wedge(vee(u, v, alpha, beta), v, alpha, beta) == u


@given(rngs)
def test_vee_inverts_wedge(rng):
    v, alpha, beta = _case(rng)
    src = tensor_obj(left_point(beta.inverse()), v)
    tgt = tensor_obj(v, left_point(alpha.inverse()))
    u = random_morphism(rng, src, tgt)
    assert vee(wedge(u, v, alpha, beta), v, alpha, beta) == u


@given(rngs)
def test_closed_forms_match_the_composites(rng):
    v, alpha, beta = _case(rng)
    u = random_morphism(rng, *component_shape(v, beta, alpha))
    assert vee(u, v, alpha, beta) == vee_closed_form(u, v, alpha, beta)
    w = vee(u, v, alpha, beta)
    assert wedge(w, v, alpha, beta) == wedge_closed_form(w, v, alpha, beta)


def test_vee_of_the_identity_shape_is_a_reindexing():
    v = VectHObject(((0, 1), (1, 0)))
    e = GroupElement.identity(2)
    src, tgt = component_shape(v, e, e)
    u = identity(src).retype(src, tgt)
    assert vee(u, v, e, e).mats == u.mats


@given(rngs)
def test_composition_with_a_dual_goes_through_the_star_product(rng):
    n = rng.randint(1, 4)
    v = random_object(rng, n)
    ta, tb, tc = (random_element(rng, n) for _ in range(3))
    u = random_morphism(rng, *component_shape(v, ta, tc))
    w = random_morphism(rng, *component_shape(v, tb.inverse(), tc.inverse()))
    lhs = u @ vee(w, v, tc.inverse(), tb.inverse())
    assert lhs == composite_through_star(u, w, v, ta, tb, tc)
