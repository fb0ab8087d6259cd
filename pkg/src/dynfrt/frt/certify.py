"""Certificates that channels kill the defining ideal, and the bialgebroid axioms."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable

from ..dhx import DhxElement, MHFunction, ihx_apply
from ..lop import LOperator, SigmaContext, boxtimes, check_rll, sigma_loperator
from ..report import CheckReport
from .algebra import (AlgebraElement, Brackets, Gen, GenInv, Scalar, coproduct,
                      coproduct_left_then, coproduct_right_then, counit)
from .channels import (Channel, CounitChannel, Representation, TensorChannel, basic_representation,
                       g_functor)
from .ideal import ideal_generators


def certify_counit_kills_ideal(ctx: SigmaContext, br: Brackets) -> CheckReport:
    """Every generator of the ideal maps to the zero operator on M_H."""
    counts: dict[str, int] = {}
    for label, e in ideal_generators(ctx, br):
        family = label.split(":")[0]
        counts[family] = counts.get(family, 0) + 1
        if not counit(e, br).is_zero():
            return CheckReport("counit_kills_ideal", False, witness={"generator": label},
                               count=sum(counts.values()), details={"per_family": counts})
    return CheckReport("counit_kills_ideal", True, count=sum(counts.values()),
                       details={"per_family": counts})


def certify_channel_kills_ideal(channel: Channel, ctx: SigmaContext) -> CheckReport:
    counts: dict[str, int] = {}
    for label, e in ideal_generators(ctx, channel.br):
        family = label.split(":")[0]
        counts[family] = counts.get(family, 0) + 1
        if not channel.evaluate(e).is_zero():
            return CheckReport(f"kills_ideal[{channel.name}]", False,
                               witness={"generator": label}, count=sum(counts.values()),
                               details={"per_family": counts})
    return CheckReport(f"kills_ideal[{channel.name}]", True, count=sum(counts.values()),
                       details={"per_family": counts})


def pi_from_loperator(lop: LOperator, e: AlgebraElement, ctx: SigmaContext, br: Brackets,
                      require_rll: bool = True) -> DhxElement:
    if require_rll:
        rep = check_rll(ctx, lop)
        if not rep:
            raise ValueError(f"L fails RLL=LLR at {rep.witness}")
    return g_functor(lop, ctx, br).evaluate(e)


def certify_pi_kills_ideal(lop: LOperator, ctx: SigmaContext, br: Brackets,
                           name: str = "G(L)") -> CheckReport:
    rep = certify_channel_kills_ideal(g_functor(lop, ctx, br, name=name), ctx)
    rep.details["rll"] = check_rll(ctx, lop).passed
    return rep


@dataclass
class EvaluationBattery:
    channels: list[Channel]
    certificates: list[CheckReport] = field(default_factory=list)

    @classmethod
    def build(cls, ctx: SigmaContext, br: Brackets, loperators: Iterable[tuple[str, LOperator]],
              certify: bool = True) -> "EvaluationBattery":
        channels: list[Channel] = [CounitChannel(br)]
        channels += [g_functor(l, ctx, br, name=name) for name, l in loperators]
        battery = cls(channels)
        if certify:
            battery.certificates.append(certify_counit_kills_ideal(ctx, br))
            for ch in channels[1:]:
                battery.certificates.append(certify_channel_kills_ideal(ch, ctx))
            if not all(battery.certificates):
                bad = [c.name for c in battery.certificates if not c]
                raise ValueError(f"battery channels do not kill the ideal: {bad}")
        return battery

    @classmethod
    def default(cls, ctx: SigmaContext, br: Brackets, certify: bool = True) -> "EvaluationBattery":
        l = sigma_loperator(ctx)
        return cls.build(ctx, br, [("pi_sigma", l), ("pi_sigma_square", boxtimes(ctx, l, l))],
                         certify=certify)

    def compare(self, e1: AlgebraElement, e2: AlgebraElement) -> dict:
        """'distinct' with a separating channel, or 'indistinguishable by battery'."""
        for ch in self.channels:
            if not ch.evaluate(e1 - e2).is_zero():
                return {"verdict": "distinct", "channel": ch.name}
        return {"verdict": "indistinguishable by battery", "channel": None}


def generator_letters(br: Brackets, extra_scalars: Iterable[Scalar] = ()) -> list:
    n_h, n_x = br.n_h, br.action.x.size
    letters: list = [Gen(a, b) for a, b in product(range(n_x), repeat=2)]
    letters += [GenInv(a, b) for a, b in product(range(n_x), repeat=2)]
    letters += [Scalar.basis(n_h, i, j) for i, j in product(range(n_h), repeat=2)]
    letters += list(extra_scalars)
    return letters


def check_coassociativity(br: Brackets, letters) -> CheckReport:
    n_x = br.action.x.size
    for k, letter in enumerate(letters):
        e = AlgebraElement({(letter,): 1})
        if coproduct_left_then(e, n_x) != coproduct_right_then(e, n_x):
            return CheckReport("coassociativity", False, witness={"letter": repr(letter)}, count=k + 1)
    return CheckReport("coassociativity", True, count=len(letters))


def check_coassociativity_through(channel: Channel, letters) -> CheckReport:
    """Both association orders of the triple tensor channel agree on every letter."""
    left = TensorChannel(TensorChannel(channel, channel), channel)
    right = TensorChannel(channel, TensorChannel(channel, channel))
    for k, letter in enumerate(letters):
        if not left.letter_image(letter).operator() == right.letter_image(letter).operator():
            return CheckReport(f"coassociativity[{channel.name}]", False,
                               witness={"letter": repr(letter)}, count=k + 1)
    return CheckReport(f"coassociativity[{channel.name}]", True, count=len(letters))


def counit_sides(channel: Channel, e: AlgebraElement) -> tuple[DhxElement, DhxElement]:
    """Images of l_A (eps (x) id) Delta(e) and r_A (id (x) eps) Delta(e)."""
    br = channel.br
    one = MHFunction.const(br.n_h)
    left = DhxElement(channel.v)
    right = DhxElement(channel.v)
    for (w1, w2), coef in coproduct(e, br.action.x.size).items():
        u1 = ihx_apply(counit(AlgebraElement({w1: 1}), br), one)
        u2 = ihx_apply(counit(AlgebraElement({w2: 1}), br), one)
        left = left + (channel.mu_l(u1) * channel.word_image(w2)).scale(coef)
        right = right + (channel.mu_r(u2) * channel.word_image(w1)).scale(coef)
    return left, right


def check_counit_axioms(channel: Channel, letters) -> CheckReport:
    for k, letter in enumerate(letters):
        e = AlgebraElement({(letter,): 1})
        target = channel.evaluate(e).operator()
        left, right = counit_sides(channel, e)
        for side, img in (("left", left), ("right", right)):
            if img.operator() != target:
                return CheckReport(f"counit_axioms[{channel.name}]", False,
                                   witness={"letter": repr(letter), "side": side}, count=k + 1)
    return CheckReport(f"counit_axioms[{channel.name}]", True, count=len(letters))


def check_bialgebroid_axioms(ctx: SigmaContext, br: Brackets,
                             battery: EvaluationBattery) -> list[CheckReport]:
    dense = Scalar(tuple(tuple(Fraction(i + 2 * j + 1, j + 1) for j in range(br.n_h))
                         for i in range(br.n_h)))
    letters = generator_letters(br, [dense])
    reports = [check_coassociativity(br, letters)]
    for ch in battery.channels:
        if isinstance(ch, Representation) and ch.v.size <= ctx.x.size:
            reports.append(check_coassociativity_through(ch, letters))
    for ch in battery.channels:
        reports.append(check_counit_axioms(ch, letters))
    return reports
