import pytest
from hypothesis import given, settings, strategies as st

from dynfrt.frt.algebra import AlgebraElement, Gen, GenInv, Scalar, grading
from dynfrt.frt.certify import (EvaluationBattery, check_coassociativity_through,
                                check_counit_axioms, pi_from_loperator)
from dynfrt.frt.channels import (CounitChannel, TensorChannel, basic_representation, f_functor,
                                 g_functor, trivial_representation)
from dynfrt.frt.ideal import family_four_element
from dynfrt.dhx import MHFunction
from dynfrt.linalg import Mat
from dynfrt.lop import LOperator, boxtimes, sigma_loperator, unit_loperator
from dynfrt.vecth import VectHMorphism, tensor_obj, unit_obj

N = 5
idx = st.integers(0, N - 1)
gen_letters = st.one_of(st.builds(Gen, idx, idx), st.builds(GenInv, idx, idx),
                        st.builds(lambda i, j: Scalar.basis(N, i, j), idx, idx))
words = st.lists(gen_letters, min_size=1, max_size=3).map(tuple)


@pytest.fixture(scope="module")
def pi(q5):
    return g_functor(sigma_loperator(q5.ctx), q5.ctx, q5.br, name="pi_sigma")


@pytest.fixture(scope="module")
def battery(q5):
    return EvaluationBattery.default(q5.ctx, q5.br, certify=False)


def _same_loperator(a, b):
    return a.v == b.v and a.l == b.l and a.l_inv == b.l_inv


def test_g_of_x_is_the_basic_representation(q5, pi):
    assert pi.same_generators(basic_representation(q5.ctx, q5.br))


@pytest.mark.parametrize("which", ["sigma", "unit", "square"])
def test_f_after_g_is_identity(q5, which):
    ctx = q5.ctx
    l = sigma_loperator(ctx)
    lop = {"sigma": l, "unit": unit_loperator(ctx), "square": boxtimes(ctx, l, l)}[which]
    assert _same_loperator(f_functor(g_functor(lop, ctx, q5.br), ctx), lop)


def test_g_after_f_is_identity(q5):
    for rep in (basic_representation(q5.ctx, q5.br), trivial_representation(q5.br)):
        assert g_functor(f_functor(rep, q5.ctx), q5.ctx, q5.br).same_generators(rep)


def test_unit_and_trivial_correspond(q5):
    unit = unit_loperator(q5.ctx)
    triv = trivial_representation(q5.br)
    assert g_functor(unit, q5.ctx, q5.br).same_generators(triv)
    assert _same_loperator(f_functor(triv, q5.ctx), unit)


def test_trivial_representation_agrees_with_the_counit_channel(q5):
    triv, eps = trivial_representation(q5.br), CounitChannel(q5.br)
    e = AlgebraElement.word(Gen(1, 1), GenInv(2, 2), Gen(3, 4))
    assert triv.evaluate(e).equals(eps.evaluate(e))


@given(words)
def test_images_are_homogeneous_of_the_word_degree(q5, pi, word):
    img = pi.word_image(word)
    assert set(img.terms) <= {grading(word, q5.br)}


def test_pi_requires_rll(q5):
    i = unit_obj(N)
    mats = [Mat.from_entries(N, N, [(a, a, a + 2) for a in range(N)]) for _ in range(N)]
    bad = LOperator.build(i, q5.ctx.x, VectHMorphism(tensor_obj(i, q5.ctx.x),
                                                     tensor_obj(q5.ctx.x, i), mats))
    with pytest.raises(ValueError):
        pi_from_loperator(bad, AlgebraElement.word(Gen(0, 0)), q5.ctx, q5.br)


def test_pi_of_the_empty_word_is_the_unit(q5, pi):
    assert pi_from_loperator(sigma_loperator(q5.ctx), AlgebraElement.one(), q5.ctx,
                             q5.br).equals(pi.unit())


def test_battery_separates_and_abstains(q5, battery):
    d = battery.compare(AlgebraElement.word(Gen(0, 0)), AlgebraElement.word(Gen(1, 1)))
    assert d["verdict"] == "distinct" and d["channel"] is not None
    e = AlgebraElement.word(Gen(2, 3))
    same = battery.compare(e, e + family_four_element(q5.ctx, 0, 1, 2, 3))
    assert same == {"verdict": "indistinguishable by battery", "channel": None}


@settings(max_examples=15)
@given(words, words)
def test_distinct_verdicts_have_a_witness_channel(q5, battery, w1, w2):
    e1, e2 = AlgebraElement({w1: 1}), AlgebraElement({w2: 1})
    d = battery.compare(e1, e2)
    if d["verdict"] == "distinct":
        ch = next(c for c in battery.channels if c.name == d["channel"])
        assert not ch.evaluate(e1).equals(ch.evaluate(e2))
    else:
        assert all(c.evaluate(e1).equals(c.evaluate(e2)) for c in battery.channels)


@settings(max_examples=10)
@given(words, words)
def test_tensor_channel_is_multiplicative(q5, pi, w1, w2):
    t = TensorChannel(CounitChannel(q5.br), pi)
    e1, e2 = AlgebraElement({w1: 1}), AlgebraElement({w2: 1})
    assert t.via_coproduct(e1 * e2).equals(t.via_coproduct(e1) * t.via_coproduct(e2))


def test_counit_axioms_through_pi(q5, pi):
    f, g = MHFunction((1, 0, 2, 0, 3)), MHFunction((0, 1, 1, 2, 0))
    letters = [Gen(a, b) for a in range(N) for b in range(N)] + [Scalar.pure(f, g)]
    assert check_counit_axioms(pi, letters)


def test_coassociativity_through_the_counit_channel(q5):
    letters = [Gen(1, 2), GenInv(3, 0), Scalar.basis(N, 1, 4)]
    assert check_coassociativity_through(CounitChannel(q5.br), letters)
