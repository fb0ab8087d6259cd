import pytest
from hypothesis import given

from conftest import rngs
from dynfrt import io
from dynfrt.frt.algebra import AlgebraElement, Gen, GenInv, Scalar
from dynfrt.lop import sigma_loperator
from dynfrt.randomdata import random_morphism, random_object
from dynfrt.report import StructureError


@given(rngs)
def test_morphism_round_trip(rng):
    n = rng.randint(1, 3)
    v, w = random_object(rng, n), random_object(rng, n)
    f = random_morphism(rng, v, w)
    assert io.morphism_from_json(io.morphism_to_json(f)) == f


def test_scalars_are_written_as_fraction_strings(q5):
    doc = io.morphism_to_json(q5.ctx.sigma)
    assert doc["mats"][0][0][0] in ("0", "1")


def test_sigma_and_loperator_round_trip(q5):
    ctx = io.sigma_from_json(io.sigma_to_json(q5.ctx))
    assert ctx.sigma == q5.ctx.sigma
    lop = io.loperator_from_json(io.loperator_to_json(sigma_loperator(q5.ctx)), ctx)
    assert lop.l == q5.ctx.sigma


def test_dybm_file_works_as_a_sigma_file(q5):
    from dynfrt import dybm
    assert io.sigma_from_json(dybm.to_json(q5.r)).sigma == q5.ctx.sigma


def test_element_round_trip():
    e = (AlgebraElement.word(Gen(0, 1), GenInv(2, 2), coef="3/4")
         + AlgebraElement.word(Scalar([[1, 0], [2, "1/2"]])))
    assert io.element_from_json(io.element_to_json(e)) == e


@pytest.mark.parametrize("doc", [
    {"coeff": 1, "word": [{"L": [0]}]},
    {"coeff": 1, "word": [{"M": [0, 1]}]},
    {"coeff": "x", "word": []},
    {"word": [{"scalar": [[1, 2]]}]},
])
def test_bad_elements_are_structural_errors(doc):
    with pytest.raises(StructureError):
        io.element_from_json([doc])


def test_support_violation_in_a_file_is_rejected():
    doc = {"source": {"act": [[0], [1]]}, "target": {"act": [[1], [0]]},
           "mats": [[["1"]], [["0"]]]}
    with pytest.raises(StructureError):
        io.morphism_from_json(doc)


def test_invalid_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(StructureError):
        io.load(p)
