"""Command-line interface.

Exit codes: 0 success, 1 usage error (bad flags, missing file, ill-formed
query), 2 parse error (formula or model JSON), 3 model validation failure,
4 a check did not come out as expected.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .enumeration import Bounds
from .forcing import EvaluationError, forces
from .interpolation import (
    NAMED_FORMULAS,
    check_gamma_implies_theta,
    check_theta_implies_delta,
    find_cd_countermodel_gamma_theta,
    verify_lemma,
)
from .model import ModelError, is_linear, load_model, model_to_dict, validate
from .search import SearchReport, check_validity
from .syntax import ParseError, format_formula, parse

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INVALID, EXIT_FAILED = range(5)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _csv(text: str) -> list[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _add_formula(p):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--formula", metavar="TEXT|NAME",
                       help=f"formula text, or one of: {', '.join(NAMED_FORMULAS)}")
    group.add_argument("--formula-file", metavar="PATH")


def _add_bounds(p, worlds: int, domain: int):
    shape = p.add_mutually_exclusive_group()
    shape.add_argument("--linear", dest="shape", action="store_const", const="linear")
    shape.add_argument("--all-posets", dest="shape", action="store_const", const="all_posets")
    p.set_defaults(shape="all_posets")
    p.add_argument("--max-worlds", type=_positive, default=worlds)
    p.add_argument("--max-domain", type=_positive, default=domain)


def _add_common(p, jobs: bool = True):
    p.add_argument("--json", action="store_true", help="print machine-readable JSON")
    if jobs:
        p.add_argument("--jobs", type=_positive, default=os.cpu_count() or 1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kripkecheck", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate a formula at a world of a model file")
    p.add_argument("--model", required=True, metavar="PATH")
    _add_formula(p)
    p.add_argument("--world", help="defaults to the base world")
    p.add_argument("--bind", action="append", default=[], metavar="VAR=ELEM")
    _add_common(p, jobs=False)

    for name, text in (
        ("check-validity", "count countermodels to a sentence within bounds"),
        ("search-countermodel", "find the first countermodels to a sentence within bounds"),
    ):
        p = sub.add_parser(name, help=text)
        _add_formula(p)
        _add_bounds(p, 3, 2)
        p.add_argument("--language", type=_csv, metavar="P,Q,...")
        p.add_argument("--constant-predicates", type=_csv, default=[], metavar="S,...",
                       help="restrict these predicates to domain-constant valuations")
        if name == "search-countermodel":
            p.add_argument("--limit", type=_positive, default=1)
        _add_common(p)

    p = sub.add_parser("verify-lemma", help="compare the first-order characterizations with brute force")
    _add_bounds(p, 3, 2)
    _add_common(p, jobs=False)

    p = sub.add_parser("reproduce-paper", help="run all four interpolant checks")
    p.add_argument("--max-worlds", type=_positive, default=4, help="worlds for the poset checks")
    p.add_argument("--max-domain", type=_positive, default=3, help="elements for the poset checks")
    p.add_argument("--linear-bounds", type=_pair, default=(3, 3), metavar="N,M")
    p.add_argument("--delta-bounds", type=_pair, metavar="N,M", help="defaults to the poset bounds")
    p.add_argument("--lemma-bounds", type=_pair, default=(3, 2), metavar="N,M")
    _add_common(p)
    return parser


def _pair(text: str) -> tuple[int, int]:
    parts = _csv(text)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected N,M")
    return _positive(parts[0]), _positive(parts[1])


def _read_formula(args):
    if args.formula_file is not None:
        try:
            with open(args.formula_file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read formula file: {exc}") from exc
    elif args.formula in NAMED_FORMULAS:
        return NAMED_FORMULAS[args.formula]
    else:
        text = args.formula
    return parse(text)


def _print_report(report: SearchReport, as_json: bool, out, **extra) -> None:
    if as_json:
        print(json.dumps(report.to_dict() | extra, indent=2), file=out)
        return
    print(f"formula:             {report.formula}", file=out)
    bounds = report.bounds
    print(f"bounds:              worlds <= {bounds.max_worlds}, domain <= {bounds.max_domain}, {bounds.shape}",
          file=out)
    print(f"models checked:      {report.models_checked}", file=out)
    print(f"counterexamples:     {report.counterexamples}", file=out)
    for key, value in extra.items():
        print(f"{key.replace('_', ' ') + ':':<21}{value}", file=out)
    if report.first_counterexample is not None:
        print(f"first counterexample (stream index {report.first_index}):", file=out)
        print(json.dumps(model_to_dict(report.first_counterexample), indent=2), file=out)
    print(f"elapsed:             {report.elapsed_ms} ms", file=out)


def _cmd_eval(args, out) -> int:
    try:
        model = load_model(args.model)
    except OSError as exc:
        raise UsageError(f"cannot read model file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    problems = validate(model)
    if problems:
        raise ModelError("; ".join(problems))
    phi = _read_formula(args)
    env = {}
    for item in args.bind:
        var, sep, elem = item.partition("=")
        if not sep or not var or not elem:
            raise UsageError(f"--bind expects VAR=ELEM, got {item!r}")
        env[var.strip()] = elem.strip()
    world = args.world if args.world is not None else model.base
    result = forces(model, world, phi, env)
    if args.json:
        print(json.dumps({"world": world, "bindings": env, "formula": format_formula(phi), "forced": result}),
              file=out)
    else:
        print("true" if result else "false", file=out)
    return EXIT_OK


def _cmd_search(args, out) -> int:
    phi = _read_formula(args)
    bounds = Bounds(args.max_worlds, args.max_domain, args.shape)
    limit = getattr(args, "limit", None)
    report = check_validity(phi, bounds, args.language, constant=args.constant_predicates,
                            limit=limit, jobs=args.jobs)
    _print_report(report, args.json, out)
    if args.command == "check-validity":
        return EXIT_OK if report.counterexamples == 0 else EXIT_FAILED
    return EXIT_OK if report.counterexamples else EXIT_FAILED


def _lemma_summary(bounds: Bounds) -> dict:
    verdicts = verify_lemma(bounds)
    bad = [v for v in verdicts if not v.consistent]
    return {
        "bounds": bounds.to_dict(),
        "models_checked": len(verdicts),
        "gamma_characterization_true": sum(v.fo_gamma for v in verdicts),
        "delta_characterization_true": sum(v.fo_delta for v in verdicts),
        "mismatches": len(bad),
        "first_mismatch": None if not bad else bad[0].model_index,
    }


def _print_lemma(summary: dict, out) -> None:
    b = summary["bounds"]
    print(f"bounds:              worlds <= {b['max_worlds']}, domain <= {b['max_domain']}, {b['shape']}", file=out)
    print(f"models checked:      {summary['models_checked']}", file=out)
    print(f"gamma side holds on: {summary['gamma_characterization_true']}", file=out)
    print(f"delta side holds on: {summary['delta_characterization_true']}", file=out)
    print(f"mismatches:          {summary['mismatches']}", file=out)
    if summary["first_mismatch"] is not None:
        print(f"first mismatch:      model {summary['first_mismatch']}", file=out)


def _cmd_lemma(args, out) -> int:
    summary = _lemma_summary(Bounds(args.max_worlds, args.max_domain, args.shape))
    if args.json:
        print(json.dumps(summary, indent=2), file=out)
    else:
        _print_lemma(summary, out)
    return EXIT_OK if summary["mismatches"] == 0 else EXIT_FAILED


def _cmd_reproduce(args, out) -> int:
    linear = check_gamma_implies_theta(Bounds(*args.linear_bounds, "linear"), jobs=args.jobs)
    poset = (args.max_worlds, args.max_domain)
    delta = check_theta_implies_delta(Bounds(*(args.delta_bounds or poset)), jobs=args.jobs)
    lemma = _lemma_summary(Bounds(*args.lemma_bounds))
    search = find_cd_countermodel_gamma_theta(Bounds(*poset), jobs=args.jobs)
    found_nonlinear = search.counterexamples > 0 and not is_linear(search.first_counterexample)
    outcomes = {
        "gamma_implies_theta_linear": linear.counterexamples == 0,
        "theta_implies_delta": delta.counterexamples == 0,
        "lemma": lemma["mismatches"] == 0,
        "cd_countermodel": found_nonlinear,
    }
    ok = all(outcomes.values())
    if args.json:
        doc = {
            "gamma_implies_theta_linear": linear.to_dict(),
            "theta_implies_delta": delta.to_dict(),
            "lemma": lemma,
            "cd_countermodel": search.to_dict() | {"nonlinear": found_nonlinear},
            "outcomes": outcomes,
            "ok": ok,
        }
        print(json.dumps(doc, indent=2), file=out)
        return EXIT_OK if ok else EXIT_FAILED
    sections = [
        ("1. Gamma -> Theta on linear models (expect 0 counterexamples)", lambda: _print_report(linear, False, out)),
        ("2. Theta -> Delta on all posets, S domain-constant (expect 0)", lambda: _print_report(delta, False, out)),
        ("3. First-order characterizations vs. brute force (expect 0 mismatches)", lambda: _print_lemma(lemma, out)),
        ("4. Countermodel to Gamma -> Theta on posets (expect one, non-linear)",
         lambda: _print_report(search, False, out, nonlinear=found_nonlinear)),
    ]
    for (title, show), passed in zip(sections, outcomes.values()):
        print(f"== {title}: {'PASS' if passed else 'FAIL'}", file=out)
        show()
        print(file=out)
    print("all checks match" if ok else "some checks FAILED", file=out)
    return EXIT_OK if ok else EXIT_FAILED


_COMMANDS = {
    "eval": _cmd_eval,
    "check-validity": _cmd_search,
    "search-countermodel": _cmd_search,
    "verify-lemma": _cmd_lemma,
    "reproduce-paper": _cmd_reproduce,
}


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args, out)
    except (UsageError, EvaluationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ModelError as exc:
        print(f"invalid model: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
