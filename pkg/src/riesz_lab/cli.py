"""Command-line front end.

Commands: ``check`` runs a named property suite (or probes one polynomial
file for the order-continuity dichotomy), ``demo`` builds the discontinuity
witness report, ``carrier``/``nakano`` expose the band descriptors and the
carrier criterion, and ``localize`` restricts a serialised object along a
generator.  Exit codes: 0 all checks passed, 1 a property failed, 2 usage
or input error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .carriers import carrier, nakano_verify
from .errors import ConfigError, MalformedInstanceError, NoWitnessError, RieszLabError
from .jsonio import (
    dumps_canonical,
    element_to_obj,
    parse_instance_file,
    rational_str,
    to_obj,
)
from .lattice import Element
from .order_continuity import (
    Functional,
    ProductFunctionalPolynomial,
    dichotomy_agrees,
    discontinuity_witness,
    oa_order_continuity,
)
from .polynomials import Polynomial
from .report import Report, PropertyResult, emit_report
from .restriction import restrict
from .suites import EXHAUSTIVE, SUITES, SuiteConfig, run_suite

_ENV_SEED = "RIESZ_LAB_SEED"


def _default_seed() -> str:
    return os.environ.get(_ENV_SEED, "0")


def _parse_trials(raw: str) -> int | str:
    if raw == EXHAUSTIVE:
        return EXHAUSTIVE
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"trials must be a positive integer or {EXHAUSTIVE!r}, got {raw!r}") from None


def _write(payload: bytes, out: str | None) -> None:
    if out:
        with open(out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()


def _emit_json(obj: dict, out: str | None) -> None:
    _write(dumps_canonical(obj).encode("utf-8"), out)


def _load(path: str, want: type | tuple[type, ...], what: str):
    instance = parse_instance_file(path)
    if not isinstance(instance, want):
        raise MalformedInstanceError(path, f"expected {what}, found {type(instance).__name__}")
    return instance


# -- check ----------------------------------------------------------------------


def _cmd_check(args) -> int:
    suite = args.suite_flag or args.suite
    if not suite:
        raise ConfigError("pick a suite: " + ", ".join(SUITES))
    if args.poly:
        return _check_single_poly(suite, args)
    config = SuiteConfig(
        suite=suite,
        m=args.m,
        n=args.n,
        space=args.space,
        trials=_parse_trials(args.trials),
        seed=args.seed if args.seed is not None else _default_seed(),
        probe_depth=args.depth,
        fmt=args.format,
    )
    report = run_suite(config)
    _write(emit_report(report, config.fmt), args.out)
    return 0 if report.passed else 1


def _check_single_poly(suite: str, args) -> int:
    if suite != "order-continuity":
        raise ConfigError("--poly targets the order-continuity suite")
    poly = _load(args.poly, Polynomial, "a polynomial instance")
    if poly.space.is_finite:
        raise ConfigError("the dichotomy probe runs on the sequence backend")
    structural = oa_order_continuity(poly)
    agrees = dichotomy_agrees(poly, probe_depth=args.depth)
    results = (
        PropertyResult(
            "normality-dichotomy",
            agrees,
            samples=args.depth,
            detail=f"structural verdict: order continuous = {structural}",
        ),
    )
    report = Report(suite, {"poly": args.poly, "probeDepth": args.depth}, results)
    _write(emit_report(report, args.format), args.out)
    return 0 if report.passed else 1


# -- demo -----------------------------------------------------------------------


def _cmd_demo(args) -> int:
    if args.name != "counterexample":
        raise ConfigError("available demos: counterexample")
    if args.m < 2:
        raise ConfigError("the demo polynomial starts at degree 2")
    poly = ProductFunctionalPolynomial(args.m, Functional.coordinate(1), Functional.limit())
    try:
        witness = discontinuity_witness(poly, probe_depth=args.depth)
    except NoWitnessError as exc:
        print(f"demo failed: {exc}", file=sys.stderr)
        return 1
    net = witness.net.sequence
    payload = {
        "basePoint": element_to_obj(witness.base_point),
        "netSamples": [element_to_obj(net.member(k)) for k in range(1, args.depth + 1)],
        "values": [rational_str(v) for v in witness.values],
        "gap": rational_str(witness.gap),
    }
    _emit_json(payload, args.out)
    return 0


# -- carrier / nakano / localize ---------------------------------------------------


def _cmd_carrier(args) -> int:
    poly = _load(args.poly, Polynomial, "a polynomial instance")
    _emit_json(to_obj(carrier(poly)), args.out)
    return 0


def _cmd_nakano(args) -> int:
    p = _load(args.p, Polynomial, "a polynomial instance")
    q = _load(args.q, Polynomial, "a polynomial instance")
    try:
        report = nakano_verify(p, q)
    except AssertionError as exc:
        print(f"carrier criterion violated: {exc}", file=sys.stderr)
        return 1
    payload = {
        "orderContinuousP": report.order_continuous_p,
        "orderContinuousQ": report.order_continuous_q,
        "polysDisjoint": report.polys_disjoint,
        "carriersDisjoint": report.carriers_disjoint,
        "hypothesisMet": report.hypothesis_met,
        "equivalenceHolds": report.equivalence_holds,
    }
    _emit_json(payload, args.out)
    return 0


def _cmd_localize(args) -> int:
    obj = parse_instance_file(args.obj)
    generator = _load(args.gen, Element, "a generator element")
    restricted = restrict(obj, generator)
    _emit_json(to_obj(restricted.induced), args.out)
    return 0


# -- argument plumbing ---------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=int, default=2, help="polynomial degree")
    parser.add_argument("--n", type=int, default=3, help="finite space size")
    parser.add_argument("--space", default="", help="space spec: finite:N or omega1")
    parser.add_argument("--trials", default="100", help="trial count, or 'exhaustive'")
    parser.add_argument("--seed", default=None, help=f"RNG seed (default ${_ENV_SEED} or 0)")
    parser.add_argument("--depth", type=int, default=50, help="net probe depth")
    parser.add_argument("--format", choices=("human", "json"), default="human")
    parser.add_argument("--out", default=None, help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riesz-lab",
        description="Exact checks for lattices of orthogonally additive polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run a property suite")
    check.add_argument("suite", nargs="?", default=None, help="suite name")
    check.add_argument("--suite", dest="suite_flag", default=None, help="suite name")
    check.add_argument("--poly", default=None, help="probe one polynomial file instead")
    _add_common(check)
    check.set_defaults(handler=_cmd_check)

    demo = sub.add_parser("demo", help="build the discontinuity witness report")
    demo.add_argument("name", nargs="?", default="counterexample")
    _add_common(demo)
    demo.set_defaults(handler=_cmd_demo)

    car = sub.add_parser("carrier", help="carrier descriptor of a polynomial file")
    car.add_argument("--poly", required=True)
    _add_common(car)
    car.set_defaults(handler=_cmd_carrier)

    nak = sub.add_parser("nakano", help="carrier criterion report for two polynomials")
    nak.add_argument("--p", required=True)
    nak.add_argument("--q", required=True)
    _add_common(nak)
    nak.set_defaults(handler=_cmd_nakano)

    loc = sub.add_parser("localize", help="restrict an object along a generator")
    loc.add_argument("--obj", required=True)
    loc.add_argument("--gen", required=True)
    _add_common(loc)
    loc.set_defaults(handler=_cmd_localize)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ConfigError, MalformedInstanceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RieszLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
