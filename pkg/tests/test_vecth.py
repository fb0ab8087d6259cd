from fractions import Fraction

import pytest
from hypothesis import given

from conftest import rngs
from dynfrt.linalg import Mat
from dynfrt.randomdata import random_morphism, random_object
from dynfrt.report import StructureError
from dynfrt.vecth import (VectHMorphism, VectHObject, assoc, assoc_inv, check_morphism,
                          compose_all, identity, left_unit, left_unit_inv, point_iso,
                          point_morphisms, point_obj, right_unit, right_unit_inv, tensor_mor,
                          tensor_obj, unit_obj)


def _objects(rng, k, n_h=None):
    n_h = n_h or rng.randint(1, 3)
    return [random_object(rng, n_h, max_size=2) for _ in range(k)]


def test_tensor_with_unit_keeps_the_action():
    v = VectHObject(((0, 1), (1, 0), (2, 2)))
    assert tensor_obj(unit_obj(3), v).act == v.act
    assert tensor_obj(v, unit_obj(3)).act == v.act


def test_tensor_action_formula():
    v = VectHObject(((0, 1), (1, 0)))
    w = VectHObject(((1, 1), (0, 0)))
    vw = tensor_obj(v, w)
    for lam in range(2):
        for a in range(2):
            for b in range(2):
                assert vw.act[lam][a * 2 + b] == v.act[w.act[lam][b]][a]


def _set_map_morphism(src, tgt, maps):
    return VectHMorphism(src, tgt, [Mat.from_map(tgt.size, src.size, dict(enumerate(m)))
                                    for m in maps], check=True)


def test_tensor_of_set_maps_is_the_shifted_product_map():
    # V has lam . v = lam, W has lam . w = 1 - lam, so f is read at the shifted parameter.
    v = VectHObject(((0, 0), (1, 1)))
    w = VectHObject(((1, 1), (0, 0)))
    f = _set_map_morphism(v, v, [(1, 0), (0, 0)])
    g = _set_map_morphism(w, w, [(1, 1), (0, 1)])
    fg = tensor_mor(f, g)
    # Frozen from direct expansion of the tensor formula.
    expected = {0: [(0, 1), (0, 1), (0, 1), (0, 1)], 1: [(1, 0), (1, 1), (0, 0), (0, 1)]}
    for lam, images in expected.items():
        m = fg.mats[lam]
        for j, (u, t) in enumerate(images):
            assert m[u * 2 + t, j] == 1
        assert m.nnz() == 4


def test_support_condition_is_enforced():
    v = VectHObject(((0,), (1,)))
    w = VectHObject(((1,), (0,)))
    bad = VectHMorphism(v, w, [Mat.identity(1), Mat.identity(1)])
    rep = check_morphism(bad)
    assert not rep
    assert rep.witness["lambda"] == 0
    with pytest.raises(StructureError):
        VectHMorphism(v, w, [Mat.identity(1)] * 2, check=True)


@given(rngs)
def test_tensor_respects_support_and_bilinearity(rng):
    v, w = _objects(rng, 2)
    f, f2 = random_morphism(rng, v, v), random_morphism(rng, v, v)
    g = random_morphism(rng, w, w)
    assert check_morphism(tensor_mor(f, g))
    assert tensor_mor(f + f2, g) == tensor_mor(f, g) + tensor_mor(f2, g)
    assert tensor_mor(identity(v), identity(w)) == identity(tensor_obj(v, w))


@given(rngs)
def test_tensor_is_functorial(rng):
    v, w = _objects(rng, 2)
    f1, f2 = random_morphism(rng, v, v), random_morphism(rng, v, v)
    g1, g2 = random_morphism(rng, w, w), random_morphism(rng, w, w)
    assert tensor_mor(f1 @ f2, g1 @ g2) == tensor_mor(f1, g1) @ tensor_mor(f2, g2)


@given(rngs)
def test_associator_naturality(rng):
    u, v, w = _objects(rng, 3)
    f, g, h = (random_morphism(rng, x, x) for x in (u, v, w))
    left = assoc(u, v, w) @ tensor_mor(tensor_mor(f, g), h)
    right = tensor_mor(f, tensor_mor(g, h)) @ assoc(u, v, w)
    assert left == right
    assert assoc_inv(u, v, w) @ assoc(u, v, w) == identity(assoc(u, v, w).source)


@given(rngs)
def test_unit_naturality_and_inverses(rng):
    (v,) = _objects(rng, 1)
    f = random_morphism(rng, v, v)
    i = unit_obj(v.n_h)
    assert left_unit(v) @ tensor_mor(identity(i), f) == f @ left_unit(v)
    assert right_unit(v) @ tensor_mor(f, identity(i)) == f @ right_unit(v)
    assert left_unit(v) @ left_unit_inv(v) == identity(v)
    assert right_unit(v) @ right_unit_inv(v) == identity(v)


@given(rngs)
def test_pentagon(rng):
    a, b, c, d = _objects(rng, 4)
    left = assoc(a, b, tensor_obj(c, d)) @ assoc(tensor_obj(a, b), c, d)
    right = compose_all(tensor_mor(identity(a), assoc(b, c, d)), assoc(a, tensor_obj(b, c), d),
                        tensor_mor(assoc(a, b, c), identity(d)))
    assert left == right


@given(rngs)
def test_triangle(rng):
    v, w = _objects(rng, 2)
    i = unit_obj(v.n_h)
    left = tensor_mor(identity(v), left_unit(w)) @ assoc(v, i, w)
    assert left == tensor_mor(right_unit(v), identity(w))


def test_point_morphisms_split():
    v = VectHObject(((0, 1, 1), (1, 0, 0)))
    for elem in range(3):
        i, p = point_morphisms(v, elem)
        assert (p @ i) == identity(i.source)


def test_point_iso_checks_the_action():
    with pytest.raises(StructureError):
        point_iso(point_obj((0, 1)), point_obj((1, 0)))
    assert point_iso(point_obj((1, 0)), point_obj((1, 0))).mats[0] == Mat.identity(1)


def test_exact_scalars_stay_integral():
    v = VectHObject(((0, 0), (1, 1)))
    f = VectHMorphism(v, v, [Mat.from_dense([[1, 1], [0, 1]])] * 2)
    assert all(x.denominator == 1 for m in tensor_mor(f, f).mats for _, _, x in m.entries())
    assert f.inverse().mats[0][0, 1] == Fraction(-1)
