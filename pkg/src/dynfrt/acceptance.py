"""Runners for the acceptance criteria, shared by the CLI and the test suite.

Every runner returns a ``CriterionResult``; a criterion passes only when all
of its checks pass and it finishes inside its time budget.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .carriers import builtin_q5, builtin_z5_ternary, validate_quasigroup
from .dhx import DhxElement, component_shape, delta_basis, gamma_apply, star_product
from .dybm import (build_from_quasigroup, check_bijective, check_qdybe, check_weight_zero,
                   flip_map, sigma_from_r)
from .frt.algebra import Brackets
from .frt.certify import (EvaluationBattery, certify_counit_kills_ideal, certify_pi_kills_ideal,
                          check_bialgebroid_axioms)
from .frt.channels import basic_representation, f_functor, g_functor, trivial_representation
from .frt.demo import demo_nondirect_sum
from .frt.duality import vee, wedge
from .lop import (SigmaContext, boxtimes, check_rll, check_yb_operator, is_rep_morphism,
                  sigma_loperator, unit_loperator)
from .randomdata import random_action, random_element, random_morphism, random_object
from .vecth import left_unit, right_unit
from .wgroup import DEFAULT_GROUP_CAP, evaluate_word, generate_group

DEFAULT_SEED = 20240601


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    seconds: float
    budget: float
    checks: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def to_json(self, timing: bool = False) -> dict:
        out = {"criterion": self.number, "title": self.title, "pass": self.passed,
               "checks": self.checks}
        if self.details:
            out["details"] = self.details
        if timing:
            out["seconds"] = round(self.seconds, 3)
            out["budget_seconds"] = self.budget
        return out

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number:>2}: {self.title} ({self.seconds:.2f}s / {self.budget:g}s)"


@dataclass
class Q5Setup:
    r: object
    ctx: SigmaContext
    br: Brackets


@lru_cache(maxsize=1)
def q5_setup() -> Q5Setup:
    r = build_from_quasigroup(builtin_q5(), builtin_z5_ternary())
    return Q5Setup(r, SigmaContext.build(r.x_object(), sigma_from_r(r)), Brackets(r.action))


def _timed(number: int, title: str, budget: float, body: Callable[[], tuple[dict, dict]]):
    start = time.perf_counter()
    checks, details = body()
    seconds = time.perf_counter() - start
    checks = dict(checks)
    checks["within_budget"] = seconds < budget
    return CriterionResult(number, title, all(checks.values()), seconds, budget, checks, details)


def criterion_1(seed: int = DEFAULT_SEED) -> CriterionResult:
    def body():
        q = builtin_q5()
        r = build_from_quasigroup(q, builtin_z5_ternary())
        return ({"q5_is_quasigroup": validate_quasigroup(q).passed,
                 "R(0)(1,2)=(4,3)": r(0, 1, 2) == (4, 3),
                 "R(1)(1,2)=(4,2)": r(1, 1, 2) == (4, 2)},
                {"R(0)(1,2)": list(r(0, 1, 2)), "R(1)(1,2)": list(r(1, 1, 2))})
    return _timed(1, "Q5 fidelity", 1.0, body)


def criterion_2(seed: int = DEFAULT_SEED, n_actions: int = 100) -> CriterionResult:
    def body():
        r = q5_setup().r
        qd = check_qdybe(r)
        rng = random.Random(seed)
        flip_ok = True
        for _ in range(n_actions):
            f = flip_map(random_action(rng))
            if not (check_qdybe(f) and check_weight_zero(f) and check_bijective(f)):
                flip_ok = False
                break
        return ({"qdybe": qd.passed and qd.count == 625,
                 "weight_zero": check_weight_zero(r).passed,
                 "bijective": check_bijective(r).passed,
                 "flip_on_random_actions": flip_ok},
                {"qdybe_instances": qd.count, "random_actions": n_actions})
    return _timed(2, "QDYBE certification", 1.0, body)


def criterion_3(seed: int = DEFAULT_SEED) -> CriterionResult:
    def body():
        ctx = q5_setup().ctx
        return ({"yang_baxter": check_yb_operator(ctx).passed,
                 "rll_sigma": check_rll(ctx, sigma_loperator(ctx)).passed}, {})
    return _timed(3, "Yang-Baxter operator", 5.0, body)


def criterion_4(seed: int = DEFAULT_SEED) -> CriterionResult:
    def body():
        ctx = q5_setup().ctx
        l = sigma_loperator(ctx)
        u = unit_loperator(ctx)
        return ({"rll_sigma": check_rll(ctx, l).passed,
                 "rll_sigma_square": check_rll(ctx, boxtimes(ctx, l, l)).passed,
                 "rll_unit": check_rll(ctx, u).passed,
                 "left_unit_is_rep_morphism":
                     is_rep_morphism(ctx, left_unit(l.v), boxtimes(ctx, u, l), l),
                 "right_unit_is_rep_morphism":
                     is_rep_morphism(ctx, right_unit(l.v), boxtimes(ctx, l, u), l)}, {})
    return _timed(4, "box-product closure", 10.0, body)


def _random_homogeneous(rng, v):
    alpha, beta = random_element(rng, v.n_h), random_element(rng, v.n_h)
    src, tgt = component_shape(v, alpha, beta)
    return random_morphism(rng, src, tgt), (alpha, beta)


def criterion_5(seed: int = DEFAULT_SEED, n_pairs: int = 500) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        for k in range(n_pairs):
            n_h = rng.randint(1, 4)
            v = random_object(rng, n_h)
            u, du = _random_homogeneous(rng, v)
            w, dw = _random_homogeneous(rng, v)
            prod = DhxElement(v, {(du[0] * dw[0], du[1] * dw[1]): star_product(v, u, du, w, dw)})
            eu, ew = DhxElement(v, {du: u}), DhxElement(v, {dw: w})
            for g in delta_basis(n_h, v.size):
                if gamma_apply(prod, g) != gamma_apply(eu, gamma_apply(ew, g)):
                    return {"gamma_multiplicative": False}, {"failing_pair": k}
        return {"gamma_multiplicative": True}, {"pairs": n_pairs}
    return _timed(5, "Gamma/star coherence", 10.0, body)


@lru_cache(maxsize=1)
def _battery_certificates():
    s = q5_setup()
    l = sigma_loperator(s.ctx)
    counit_rep = certify_counit_kills_ideal(s.ctx, s.br)
    pi = certify_pi_kills_ideal(l, s.ctx, s.br, name="pi_sigma")
    pi2 = certify_pi_kills_ideal(boxtimes(s.ctx, l, l), s.ctx, s.br, name="pi_sigma_square")
    return counit_rep, pi, pi2


def criterion_6(seed: int = DEFAULT_SEED) -> CriterionResult:
    def body():
        counit_rep, pi, pi2 = _battery_certificates()
        return ({"counit_kills_ideal": counit_rep.passed,
                 "family_4_instances": counit_rep.details["per_family"].get("4") == 625,
                 "pi_sigma_kills_ideal": pi.passed,
                 "pi_sigma_square_kills_ideal": pi2.passed},
                {"generators_per_family": counit_rep.details["per_family"]})
    return _timed(6, "ideal killing", 30.0, body)


def criterion_7(seed: int = DEFAULT_SEED) -> CriterionResult:
    certs = list(_battery_certificates())

    def body():
        s = q5_setup()
        battery = EvaluationBattery.default(s.ctx, s.br, certify=False)
        battery.certificates = certs
        reports = check_bialgebroid_axioms(s.ctx, s.br, battery)
        checks = {"battery_certified": all(certs)}
        checks.update({r.name: r.passed for r in reports})
        return checks, {}
    return _timed(7, "bialgebroid axioms", 10.0, body)


def criterion_8(seed: int = DEFAULT_SEED) -> CriterionResult:
    def body():
        d = demo_nondirect_sum()
        return dict(d["checks"]), {"solutions_of_xy_eq_12": d["solutions_of_xy_eq_12"],
                                   "eps_value_at_0": d["eps_value_at_0"]}
    return _timed(8, "non-direct-sum demonstration", 1.0, body)


def criterion_9(seed: int = DEFAULT_SEED) -> CriterionResult:
    def body():
        s = q5_setup()
        ctx, br = s.ctx, s.br
        l = sigma_loperator(ctx)
        checks = {}
        for name, lop in (("sigma", l), ("unit", unit_loperator(ctx)),
                          ("sigma_square", boxtimes(ctx, l, l))):
            back = f_functor(g_functor(lop, ctx, br), ctx)
            checks[f"FG[{name}]"] = back.v == lop.v and back.l == lop.l and back.l_inv == lop.l_inv
        basic = basic_representation(ctx, br)
        for rep in (basic, trivial_representation(br)):
            checks[f"GF[{rep.name}]"] = g_functor(f_functor(rep, ctx), ctx, br).same_generators(rep)
        checks["G(sigma)=pi_sigma"] = g_functor(l, ctx, br).same_generators(basic)
        return checks, {}
    return _timed(9, "F/G isomorphism", 10.0, body)


def criterion_10(seed: int = DEFAULT_SEED, n_cases: int = 200) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        for k in range(n_cases):
            n_h = rng.randint(1, 4)
            v = random_object(rng, n_h)
            alpha, beta = random_element(rng, n_h), random_element(rng, n_h)
            src, tgt = component_shape(v, beta, alpha)  # V (x) {alpha} -> {beta} (x) V
            u = random_morphism(rng, src, tgt)
            if wedge(vee(u, v, alpha, beta), v, alpha, beta) != u:
                return {"round_trip": False}, {"failing_case": k}
        return {"round_trip": True}, {"cases": n_cases}
    return _timed(10, "vee/wedge duality", 5.0, body)


def criterion_11(seed: int = DEFAULT_SEED, n_pairs: int = 1000,
                 cap: int = DEFAULT_GROUP_CAP) -> CriterionResult:
    def body():
        a = q5_setup().r.action
        closure = generate_group(a, cap=cap)
        witnesses_ok = all(evaluate_word(a, closure.witnesses[g]) == g for g in closure.elements)
        rng = random.Random(seed)
        n_h, n_x = a.h.size, a.x.size

        def word():
            return [(rng.randrange(n_x), rng.choice((1, -1))) for _ in range(rng.randint(0, 8))]

        action_ok = True
        for _ in range(n_pairs):
            w1, w2 = word(), word()
            g12, g1, g2 = evaluate_word(a, w1 + w2), evaluate_word(a, w1), evaluate_word(a, w2)
            if any(g12(lam) != g2(g1(lam)) for lam in range(n_h)):
                action_ok = False
                break
        return ({"closure_under_cap": closure.order <= cap, "witnesses_reevaluate": witnesses_ok,
                 "right_action_law": action_ok},
                {"order": closure.order, "word_pairs": n_pairs})
    return _timed(11, "group machinery", 5.0, body)


CRITERIA: dict[int, Callable[..., CriterionResult]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
    11: criterion_11,
}


def run_all(seed: int = DEFAULT_SEED, cap: int = DEFAULT_GROUP_CAP) -> list[CriterionResult]:
    out = []
    for n, fn in CRITERIA.items():
        out.append(fn(seed, cap=cap) if n == 11 else fn(seed))
    return out
