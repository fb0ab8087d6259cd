"""The FRT-type algebra of a Yang-Baxter operator: words, ideal, coproduct, counit, channels."""

from .algebra import (AlgebraElement, Brackets, Gen, GenInv, Scalar, coproduct, counit, grading,
                      letter_coproduct, letter_counit)
from .certify import (EvaluationBattery, certify_counit_kills_ideal, certify_pi_kills_ideal,
                      check_bialgebroid_axioms, pi_from_loperator)
from .channels import (CounitChannel, Representation, TensorChannel, basic_representation,
                       f_functor, g_functor, trivial_representation)
from .demo import demo_nondirect_sum
from .duality import vee, wedge
from .ideal import ideal_generators

__all__ = [
    "AlgebraElement", "Brackets", "Gen", "GenInv", "Scalar", "coproduct", "counit", "grading",
    "letter_coproduct", "letter_counit", "EvaluationBattery", "certify_counit_kills_ideal",
    "certify_pi_kills_ideal", "check_bialgebroid_axioms", "pi_from_loperator", "CounitChannel",
    "Representation", "TensorChannel", "basic_representation", "f_functor", "g_functor",
    "trivial_representation", "demo_nondirect_sum", "vee", "wedge", "ideal_generators",
]
