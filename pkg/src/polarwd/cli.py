"""Command-line surface: parse code specs, run computations, emit exact JSON.

All counts serialize as decimal strings; JSON numbers cannot faithfully hold
values past 2^53 and code weight counts get much larger.  Exit codes: 0
success, 1 usage error, 2 budget or guard refusal, 3 internal invariant
failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .codespec import CodeSpec, dual_spec, profile, spec_from_json, spec_to_json
from .coset import CosetCache
from .engine import DEFAULT_BUDGET, BudgetExceeded, estimate_cost, wef_auto
from .monomials import (
    Monomial,
    compare,
    is_decreasing,
    max_mixing_factor,
    max_mixing_factor_rate_half,
)
from .oracle import GuardExceeded, brute_force_wef
from .wef import WeightEnumerator

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_INTERNAL = 3


class CliError(Exception):
    def __init__(self, code: str, message: str, exit_code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code
        self.exit_code = exit_code


def _load_spec(path: str) -> CodeSpec:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise CliError("spec_unreadable", f"cannot read spec file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError("spec_malformed_json", f"malformed JSON in {path}: {exc}") from exc
    try:
        return spec_from_json(obj)
    except (KeyError, ValueError, TypeError) as exc:
        raise CliError("spec_invalid", f"invalid spec: {exc}") from exc


def _emit(payload: dict, out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _progress_printer(enabled: bool):
    if not enabled:
        return None

    def report(done: int, total: int) -> None:
        print(f"PROGRESS {done}/{total}", file=sys.stderr, flush=True)

    return report


def _wef_payload(spec: CodeSpec, wef: WeightEnumerator, route: str, cosets: int) -> dict:
    return {
        "n": spec.n,
        "k": spec.k,
        "route": route,
        "cosets_evaluated": str(cosets),
        "wef": wef.to_pairs(),
    }


def _cmd_wef(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec)
    cache = CosetCache() if args.cache else None
    progress = _progress_printer(args.progress)
    nthreads = args.threads if args.threads > 0 else (os.cpu_count() or 1)
    try:
        wef, report = wef_auto(
            spec,
            strategy=args.strategy,
            allow_dual=args.allow_dual,
            budget=args.budget,
            threads=nthreads,
            cache=cache,
            progress=progress,
        )
    except BudgetExceeded as exc:
        raise CliError("budget_exceeded", str(exc), EXIT_BUDGET) from exc
    except ValueError as exc:
        raise CliError("strategy_inadmissible", str(exc)) from exc
    if wef.eval_at_one() != 1 << spec.k:
        raise CliError(
            "cardinality_mismatch",
            f"enumerator sums to {wef.eval_at_one()}, expected 2^{spec.k}",
            EXIT_INTERNAL,
        )
    _emit(_wef_payload(spec, wef, report.route, report.cosets_evaluated), args.out)
    return EXIT_OK


def _cmd_cost(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec)
    cost = estimate_cost(spec)
    payload = {
        "n": spec.n,
        "k": spec.k,
        "direct_cosets": str(cost.direct_cosets),
        "lta_cosets": None if cost.lta_cosets is None else str(cost.lta_cosets),
        "dual_direct_cosets": (
            None if cost.dual_direct_cosets is None else str(cost.dual_direct_cosets)
        ),
        "dual_lta_cosets": (
            None if cost.dual_lta_cosets is None else str(cost.dual_lta_cosets)
        ),
    }
    _emit(payload, args.out)
    return EXIT_OK


def _cmd_mixing_factor(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec)
    print(profile(spec).gamma)
    return EXIT_OK


def _cmd_max_mixing_factor(args: argparse.Namespace) -> int:
    if args.m < 1:
        raise CliError("bad_m", "m must be at least 1")
    if args.rate_half:
        print(max_mixing_factor_rate_half(args.m))
    else:
        print(max_mixing_factor(args.m)[0])
    return EXIT_OK


def _cmd_compare(args: argparse.Namespace) -> int:
    try:
        f = Monomial.parse(args.f, args.m)
        g = Monomial.parse(args.g, args.m)
    except ValueError as exc:
        raise CliError("bad_monomial", str(exc)) from exc
    print(compare(f, g).value)
    return EXIT_OK


def _cmd_is_decreasing(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec)
    ok, witness = is_decreasing(spec.unfrozen_monomials())
    payload: dict = {"decreasing": ok}
    if witness is not None:
        payload["counterexample"] = [str(witness[0]), str(witness[1])]
    _emit(payload, None)
    return EXIT_OK


def _cmd_brute_force(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec)
    try:
        wef = brute_force_wef(spec)
    except GuardExceeded as exc:
        raise CliError("guard_exceeded", str(exc), EXIT_BUDGET) from exc
    _emit(_wef_payload(spec, wef, "brute-force", 0), args.out)
    return EXIT_OK


def _cmd_dual(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec)
    try:
        dual = dual_spec(spec)
    except ValueError as exc:
        raise CliError("spec_invalid", str(exc)) from exc
    _emit(spec_to_json(dual), args.out)
    return EXIT_OK


def _add_spec_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--spec", required=True, help="path to a JSON code spec")


def _add_out_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default=None, help="write the result here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarwd",
        description="Exact weight distributions of polar and decreasing monomial codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wef", help="compute the full weight enumerator")
    _add_spec_arg(p)
    p.add_argument("--strategy", choices=["auto", "direct", "lta"], default="auto")
    p.add_argument("--allow-dual", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--threads", type=int, default=1, help="0 means all available")
    p.add_argument("--progress", action="store_true")
    p.add_argument(
        "--no-cache", dest="cache", action="store_false",
        help="disable the shared sub-coset memo table",
    )
    _add_out_arg(p)
    p.set_defaults(func=_cmd_wef)

    p = sub.add_parser("cost", help="predicted coset counts per strategy")
    _add_spec_arg(p)
    _add_out_arg(p)
    p.set_defaults(func=_cmd_cost)

    p = sub.add_parser("mixing-factor", help="mixing factor of a spec")
    _add_spec_arg(p)
    p.set_defaults(func=_cmd_mixing_factor)

    p = sub.add_parser("max-mixing-factor", help="largest mixing factor at length 2^m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--rate-half", action="store_true", help="cap the rate at 1/2")
    p.set_defaults(func=_cmd_max_mixing_factor)

    p = sub.add_parser("compare", help="compare two monomials under the partial order")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("is-decreasing", help="check the unfrozen monomial set")
    _add_spec_arg(p)
    p.set_defaults(func=_cmd_is_decreasing)

    p = sub.add_parser("brute-force", help="oracle enumeration of all codewords")
    _add_spec_arg(p)
    _add_out_arg(p)
    p.set_defaults(func=_cmd_brute_force)

    p = sub.add_parser("dual", help="emit the dual of a plain spec as JSON")
    _add_spec_arg(p)
    _add_out_arg(p)
    p.set_defaults(func=_cmd_dual)

    return parser


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"ERROR[{exc.code}] {exc}", file=sys.stderr)
        return exc.exit_code
    except AssertionError as exc:
        print(f"ERROR[internal_invariant] {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
