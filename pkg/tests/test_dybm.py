from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import rngs
from dynfrt import dybm
from dynfrt.carriers import (FiniteAction, Quasigroup, builtin_q5, builtin_z5_ternary,
                             cyclic_group, group_ternary, validate_quasigroup)
from dynfrt.dybm import (DynamicalMap, build_from_quasigroup, check_bijective, check_qdybe,
                         check_unitarity, check_weight_zero, flip_map, identity_map,
                         inverse_table, sigma_from_r)
from dynfrt.randomdata import random_action, random_perm
from dynfrt.report import StructureError
from dynfrt.vecth import check_morphism, compose, identity

TRIVIAL_H_TWO = FiniteAction.from_table([[0, 0]])


def test_q5_values(q5):
    assert q5.r(0, 1, 2) == (4, 3)
    assert q5.r(1, 1, 2) == (4, 2)


def test_q5_certifiers(q5):
    rep = check_qdybe(q5.r)
    assert rep and rep.count == 625
    assert check_weight_zero(q5.r)
    assert check_bijective(q5.r)


def test_cyclic_group_gives_the_identity_family():
    # Frozen from an independent evaluation of the construction over Z/5.
    r = build_from_quasigroup(cyclic_group(5), builtin_z5_ternary())
    assert all(r(lam, a, b) == (a, b) for lam, a, b in product(range(5), repeat=3))


@given(rngs)
def test_flip_map_passes_everything(rng):
    f = flip_map(random_action(rng))
    assert check_qdybe(f) and check_weight_zero(f) and check_bijective(f)
    assert check_unitarity(f)


def test_identity_map_weight_zero_witness():
    # First (lam, x, y) with (lam.y).x != (lam.x).y in the Q5 table.
    rep = check_weight_zero(identity_map(builtin_q5().as_action()))
    assert not rep
    assert rep.witness == {"lambda": 0, "xy": [0, 1], "uv": [0, 1]}


def _maps_on_two_points():
    pairs = list(product(range(2), repeat=2))
    for images in product(pairs, repeat=4):
        yield DynamicalMap(TRIVIAL_H_TWO, [[list(images[0:2]), list(images[2:4])]])


def test_qdybe_over_all_maps_on_two_points():
    # An independent brute force finds 43 solutions among the 256 maps.
    results = [bool(check_qdybe(r)) for r in _maps_on_two_points()]
    assert sum(results) == 43


def test_qdybe_non_solution_reports_witness():
    r = DynamicalMap(TRIVIAL_H_TWO, [[[(0, 0), (0, 0)], [(0, 0), (0, 1)]]])
    rep = check_qdybe(r)
    assert not rep
    left, right = dybm.qdybe_sides(r, rep.witness["lambda"], *rep.witness["xyz"])
    assert left != right


def test_constant_map_is_not_bijective():
    r = DynamicalMap.from_function(builtin_q5().as_action(), lambda lam, x, y: (0, 0))
    assert not check_bijective(r)
    assert inverse_table(r) is None


def test_unitarity_on_q5(q5):
    # Both orientations hold; they are conjugate by the flip.
    rep = check_unitarity(q5.r)
    assert rep
    assert rep.details == {"tau_R_tau_R": True}
    assert dybm._unitary_orientation(q5.r, flip_first=True) is None


def test_unitarity_rejects_non_bijective():
    r = DynamicalMap.from_function(builtin_q5().as_action(), lambda lam, x, y: (0, 0))
    with pytest.raises(ValueError):
        check_unitarity(r)


def test_sigma_is_a_morphism(q5):
    s = sigma_from_r(q5.r)
    assert check_morphism(s)
    assert compose(s, s.inverse()) == identity(s.source)


def test_inverse_round_trip(q5):
    inv = inverse_table(q5.r)
    for lam, x, y in product(range(5), repeat=3):
        assert inv(lam, *q5.r(lam, x, y)) == (x, y)


def test_json_round_trip(q5):
    doc = dybm.to_json(q5.r)
    assert dybm.from_json(doc).table == q5.r.table


def test_json_rejects_wrong_kind():
    with pytest.raises(StructureError):
        dybm.from_json({"kind": "action"})


def _isotope_of_cyclic(rng, n):
    """x * y = gamma^-1(alpha(x) + beta(y)) for random bijections alpha, beta, gamma."""
    al, be, ga = (random_perm(rng, n) for _ in range(3))
    ga_inv = [0] * n
    for i, g in enumerate(ga):
        ga_inv[g] = i
    return Quasigroup.from_table([[ga_inv[(al[x] + be[y]) % n] for y in range(n)]
                                  for x in range(n)])


@given(rngs, st.integers(min_value=2, max_value=5))
def test_construction_from_isotopes_of_cyclic_groups(rng, n):
    q = _isotope_of_cyclic(rng, n)
    assert validate_quasigroup(q)
    r = build_from_quasigroup(q, group_ternary(n), iso=random_perm(rng, n))
    assert check_qdybe(r) and check_weight_zero(r) and check_bijective(r)
    assert check_morphism(sigma_from_r(r))


def test_size_mismatch_is_structural():
    with pytest.raises(StructureError):
        build_from_quasigroup(builtin_q5(), group_ternary(4))


@given(rngs)
def test_unitarity_orientations_agree(rng):
    a = random_action(rng, max_h=3, max_x=3)
    nx = a.x.size
    pairs = list(product(range(nx), repeat=2))
    table = []
    for _ in a.h:
        images = pairs[:]
        rng.shuffle(images)
        table.append([[list(images[x * nx + y]) for y in range(nx)] for x in range(nx)])
    r = DynamicalMap(a, table)
    main = dybm._unitary_orientation(r, flip_first=False) is None
    alternate = dybm._unitary_orientation(r, flip_first=True) is None
    assert main == alternate
    assert bool(check_unitarity(r)) == main
