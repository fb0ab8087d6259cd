"""Command-line front end.  Every command prints one JSON report on stdout.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for unusable
input (bad arguments, malformed or unreadable files).
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Callable

from . import __version__, acceptance, carriers, dybm, io
from .frt.algebra import Brackets, validate_letters
from .frt.certify import (EvaluationBattery, certify_counit_kills_ideal,
                          certify_channel_kills_ideal, check_bialgebroid_axioms)
from .frt.channels import CounitChannel, g_functor
from .frt.demo import demo_nondirect_sum
from .linalg import format_fraction
from .lop import boxtimes, check_rll, check_yb_operator, sigma_loperator
from .report import CheckReport, StructureError
from .wgroup import DEFAULT_GROUP_CAP, GroupOverflow, generate_group


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Checks:
    """Collects named checks, timing each one."""

    def __init__(self, opts):
        self.opts = opts
        self.items: list[dict] = []

    def run(self, name: str, fn: Callable[[], CheckReport | tuple[bool, dict]]) -> bool:
        start = time.perf_counter()
        result = fn()
        ms = (time.perf_counter() - start) * 1000
        if isinstance(result, CheckReport):
            entry = result.to_json(with_witness=self.opts.witness)
            entry["name"] = name
        else:
            ok, extra = result
            entry = {"name": name, "pass": ok, **extra}
        if self.opts.timing:
            entry["timing_ms"] = round(ms, 1)
        self.items.append(entry)
        return entry["pass"]

    def add(self, entry: dict) -> None:
        self.items.append(entry)

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.items)


def _report(command: str, checks: Checks, extra: dict | None = None) -> dict:
    out = {"command": command, "pass": checks.passed, "checks": checks.items,
           "artifact_versions": {"dynfrt": __version__}}
    if extra:
        out.update(extra)
    return out


# validate / dybm / wgroup

def cmd_validate(opts) -> dict:
    s = io.structure_from_json(io.load(opts.file))
    checks = Checks(opts)
    if isinstance(s, carriers.Quasigroup):
        checks.run("quasigroup", lambda: carriers.validate_quasigroup(s))
    elif isinstance(s, carriers.FiniteAction):
        checks.run("action", lambda: carriers.validate_action(s))
    elif isinstance(s, carriers.TernarySystem):
        checks.run("ternary", lambda: (True, {"size": s.carrier.size}))
    else:
        checks.run("action", lambda: carriers.validate_action(s.action))
        checks.run("bijective", lambda: dybm.check_bijective(s))
    return _report("validate", checks)


def cmd_dybm_check(opts) -> dict:
    r = dybm.from_json(io.load(opts.file))
    selected = [k for k in ("qdybe", "weight_zero", "bijective", "unitary") if getattr(opts, k)]
    if not selected:
        selected = ["qdybe", "weight_zero", "bijective", "unitary"]
    fns = {"qdybe": dybm.check_qdybe, "weight_zero": dybm.check_weight_zero,
           "bijective": dybm.check_bijective, "unitary": dybm.check_unitarity}
    checks = Checks(opts)
    for k in selected:
        checks.run(k, lambda k=k: fns[k](r))
    return _report("dybm check", checks)


def cmd_dybm_q5(opts) -> dict:
    r = dybm.build_from_quasigroup(carriers.builtin_q5(), carriers.builtin_z5_ternary())
    io.save(dybm.to_json(r), opts.output)
    checks = Checks(opts)
    checks.run("written", lambda: (True, {"path": opts.output}))
    return _report("dybm q5", checks)


def _action_of(doc):
    s = io.structure_from_json(doc)
    if isinstance(s, carriers.Quasigroup):
        return s.as_action()
    if isinstance(s, carriers.FiniteAction):
        return s
    if isinstance(s, dybm.DynamicalMap):
        return s.action
    raise StructureError("wgroup needs an action, a quasigroup or a dynamical map file")


def cmd_wgroup_order(opts) -> dict:
    a = _action_of(io.load(opts.file))
    checks = Checks(opts)
    valid = carriers.validate_action(a)
    checks.run("action", lambda: valid)
    if not valid:
        return _report("wgroup order", checks)
    try:
        closure = generate_group(a, cap=opts.cap)
    except GroupOverflow as exc:
        checks.add({"name": "closure", "pass": False, "error": str(exc)})
        return _report("wgroup order", checks)
    checks.add({"name": "closure", "pass": True})
    sample = [{"element": list(g.perm), "word": [[x, s] for x, s in closure.witnesses[g]]}
              for g in closure.elements[:8]]
    return _report("wgroup order", checks, {
        "order": closure.order,
        "generator_orders": [g.order() for g in closure.generators],
        "witness_sample": sample,
    })


# lop

def cmd_lop_check(opts) -> dict:
    ctx = io.sigma_from_json(io.load(opts.sigma))
    lop = io.loperator_from_json(io.load(opts.loperator), ctx)
    checks = Checks(opts)
    checks.run("rll", lambda: check_rll(ctx, lop))
    return _report("lop check", checks)


def cmd_lop_tensor(opts) -> dict:
    ctx = io.sigma_from_json(io.load(opts.sigma))
    a = io.loperator_from_json(io.load(opts.a), ctx)
    b = io.loperator_from_json(io.load(opts.b), ctx)
    out = boxtimes(ctx, a, b)
    io.save(io.loperator_to_json(out), opts.output)
    checks = Checks(opts)
    checks.run("rll", lambda: check_rll(ctx, out))
    return _report("lop tensor", checks, {"output": opts.output})


def cmd_lop_sigma(opts) -> dict:
    ctx = io.sigma_from_json(io.load(opts.sigma))
    io.save(io.loperator_to_json(sigma_loperator(ctx)), opts.output)
    checks = Checks(opts)
    checks.run("yang_baxter", lambda: check_yb_operator(ctx))
    return _report("lop sigma", checks, {"output": opts.output})


# frt

def cmd_frt_demo(opts) -> dict:
    d = demo_nondirect_sum()
    checks = Checks(opts)
    for name, ok in d["checks"].items():
        checks.add({"name": name, "pass": ok})
    steps = {
        "element": {"word": d["element"], "degree": d["degree"]},
        "counit_value_at_0": d["eps_value_at_0"],
        "rewriting": {"terms": d["rewritten_terms"], "channel_agreement": d["channel_agreement"]},
        "group_level": {"solutions_of_xy_eq_12": d["solutions_of_xy_eq_12"],
                        "bracket_12": d["bracket_12"], "bracket_34": d["bracket_34"]},
    }
    return _report("frt demo-q5", checks, {"steps": steps, "conclusion": d["conclusion"]})


def _loperators(opts, ctx):
    if opts.loperators:
        paths = [p for p in opts.loperators.split(",") if p]
        return [(p, io.loperator_from_json(io.load(p), ctx)) for p in paths]
    l = sigma_loperator(ctx)
    return [("pi_sigma", l), ("pi_sigma_square", boxtimes(ctx, l, l))]


def cmd_frt_verify(opts) -> dict:
    ctx = io.sigma_from_json(io.load(opts.sigma))
    br = Brackets.from_object(ctx.x)
    checks = Checks(opts)
    checks.run("yang_baxter", lambda: check_yb_operator(ctx))
    checks.run("counit_kills_ideal", lambda: certify_counit_kills_ideal(ctx, br))
    battery = EvaluationBattery.build(ctx, br, _loperators(opts, ctx), certify=False)
    for ch in battery.channels[1:]:
        checks.run(f"kills_ideal[{ch.name}]", lambda ch=ch: certify_channel_kills_ideal(ch, ctx))
    for rep in check_bialgebroid_axioms(ctx, br, battery):
        checks.add(rep.to_json(with_witness=opts.witness))
    return _report("frt verify", checks)


def _dhx_to_json(e) -> list:
    out = []
    for (alpha, beta), u in sorted(e.terms.items(), key=lambda kv: (kv[0][0].perm, kv[0][1].perm)):
        out.append({"degree": [list(alpha.perm), list(beta.perm)],
                    "mats": [[[format_fraction(x) for x in row] for row in m.to_dense()]
                             for m in u.mats]})
    return out


def cmd_frt_eval(opts) -> dict:
    ctx = io.sigma_from_json(io.load(opts.sigma))
    br = Brackets.from_object(ctx.x)
    e = io.element_from_json(io.load(opts.element))
    validate_letters(e, ctx.n_h, ctx.x.size)
    channels = [CounitChannel(br)] + [g_functor(l, ctx, br, name=name)
                                      for name, l in _loperators(opts, ctx)]
    checks = Checks(opts)
    images = {}
    for ch in channels:
        if not opts.no_certify:
            checks.run(f"kills_ideal[{ch.name}]", lambda ch=ch: certify_channel_kills_ideal(ch, ctx))
        images[ch.name] = _dhx_to_json(ch.evaluate(e))
    return _report("frt eval", checks, {"images": images})


# reproduce

def cmd_reproduce(opts) -> dict:
    checks = Checks(opts)
    for res in acceptance.run_all(seed=opts.seed, cap=opts.cap):
        entry = res.to_json(timing=opts.timing)
        entry["name"] = f"criterion_{res.number}"
        checks.add(entry)
        print(res.line(), file=sys.stderr)
    return _report("reproduce", checks, {"seed": opts.seed})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a JSON report (the default and only format)")
    common.add_argument("--witness", action="store_true", default=argparse.SUPPRESS,
                        help="include witnesses for passing checks too")
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="add wall-clock timings to the report")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help=f"seed for randomized checks (default {acceptance.DEFAULT_SEED})")
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                        help=f"group-closure cap (default {DEFAULT_GROUP_CAP})")

    p = _Parser(prog="dynfrt", parents=[common], description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def leaf(parent, name, fn, help_):
        q = parent.add_parser(name, parents=[common], help=help_)
        q.set_defaults(handler=fn)
        return q

    q = leaf(sub, "validate", cmd_validate, "validate a structure file")
    q.add_argument("file")

    d = sub.add_parser("dybm", help="dynamical Yang-Baxter maps").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    q = leaf(d, "check", cmd_dybm_check, "certify a dynamical map")
    q.add_argument("file")
    q.add_argument("--qdybe", action="store_true")
    q.add_argument("--weight-zero", dest="weight_zero", action="store_true")
    q.add_argument("--bijective", action="store_true")
    q.add_argument("--unitary", action="store_true")
    q = leaf(d, "q5", cmd_dybm_q5, "write the built-in Q5 map to a file")
    q.add_argument("-o", "--output", required=True)

    w = sub.add_parser("wgroup", help="the grading group").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    q = leaf(w, "order", cmd_wgroup_order, "order of the group generated by the translations")
    q.add_argument("file")

    lp = sub.add_parser("lop", help="L-operators").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    q = leaf(lp, "check", cmd_lop_check, "check RLL=LLR for an L-operator")
    q.add_argument("sigma")
    q.add_argument("loperator")
    q = leaf(lp, "tensor", cmd_lop_tensor, "box product of two L-operators")
    q.add_argument("a")
    q.add_argument("b")
    q.add_argument("--sigma", required=True, help="sigma or dybm file both operators refer to")
    q.add_argument("-o", "--output", required=True)
    q = leaf(lp, "sigma", cmd_lop_sigma, "write (X, sigma) as an L-operator file")
    q.add_argument("sigma")
    q.add_argument("-o", "--output", required=True)

    f = sub.add_parser("frt", help="the FRT-type bialgebroid").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    leaf(f, "demo-q5", cmd_frt_demo, "the Q5 non-direct-sum demonstration")
    q = leaf(f, "verify", cmd_frt_verify, "certify channels and the bialgebroid axioms")
    q.add_argument("sigma")
    q.add_argument("--loperators", default="", help="comma-separated L-operator files")
    q = leaf(f, "eval", cmd_frt_eval, "evaluate an element through every channel")
    q.add_argument("sigma")
    q.add_argument("element")
    q.add_argument("--loperators", default="", help="comma-separated L-operator files")
    q.add_argument("--no-certify", dest="no_certify", action="store_true",
                   help="skip certifying that each channel kills the ideal")

    leaf(sub, "reproduce", cmd_reproduce, "run every acceptance criterion")
    return p


def _command_name(argv) -> str:
    words = [a for a in argv if not a.startswith("-")]
    return " ".join(words[:2]) if words[:1] in (["dybm"], ["wgroup"], ["lop"], ["frt"]) else (
        words[0] if words else "")


def run(argv=None) -> tuple[int, dict]:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        opts = build_parser().parse_args(argv)
    except UsageError as exc:
        return 2, {"command": _command_name(argv), "pass": False, "error": str(exc),
                   "artifact_versions": {"dynfrt": __version__}}
    for name, default in (("json", True), ("witness", False), ("timing", False),
                          ("seed", acceptance.DEFAULT_SEED), ("cap", DEFAULT_GROUP_CAP)):
        if not hasattr(opts, name):
            setattr(opts, name, default)
    try:
        report = opts.handler(opts)
    except (StructureError, OSError) as exc:
        return 2, {"command": _command_name(argv), "pass": False, "error": str(exc),
                   "artifact_versions": {"dynfrt": __version__}}
    return (0 if report["pass"] else 1), report


def main(argv=None) -> int:
    code, report = run(argv)
    sys.stdout.write(io.dumps(report))
    if code == 2 and "error" in report:
        print(f"error: {report['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
