"""Command-line driver.

Subcommands: ``parse``, ``ground``, ``stratify``, ``solve``, ``check-wsm``,
``rank``.  Reports go to standard output as text (one literal set per line,
in braces) or JSON.  Exit status: 0 when at least one model was produced or
the check passed, 1 when none was or it failed, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional

from .answersets import BruteForceBoundError, enumerate_answer_sets
from .ast import Dialect, Program, guard_satisfied
from .grounding import UnsafeRuleError, ground
from .hypotheses import HypothesisError, HypothesisSet
from .interpretations import valuation_map
from .parser import (ProgramSyntaxError, parse_hypotheses, parse_literal_set,
                     parse_program)
from .reports import (RANK_CRITERIA, EngineStats, ModelReport, build_report,
                      format_model, rank_models)
from .stratification import find_stratification
from .wsm import (UnstratifiableError, check_well_supported,
                  enumerate_4sp_models, generate_wsm_4ql, generate_wsm_4sp)

EXIT_OK = 0
EXIT_NO_MODEL = 1
EXIT_USAGE = 2


class InputError(Exception):
    """Usage-level failure: bad file, bad syntax, mode mismatch."""


def _load_program(path: str) -> Program:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    try:
        return parse_program(text)
    except ProgramSyntaxError as exc:
        raise InputError(f"{path}: {exc}")


def _load_ground_program(path: str) -> Program:
    try:
        return ground(_load_program(path))
    except UnsafeRuleError as exc:
        raise InputError(f"{path}: {exc}")


def _report_json(program_path: str, mode: str, reports: List[ModelReport],
                 program: Program, iterations: int) -> str:
    models = []
    for report in reports:
        hypotheses: Optional[Dict[str, str]] = None
        if report.hypotheses_initial is not None:
            hypotheses = {
                str(literal): str(next(iter(values)))
                for literal, values in report.hypotheses_initial.canonical_items()}
        models.append({
            "literals": sorted(str(l) for l in report.model),
            "values": {str(a): str(v) for a, v in report.atom_values.items()},
            "hypotheses": hypotheses,
            "contradicted": [str(l) for l in report.contradicted],
            "scores": report.scores,
        })
    payload = {
        "program": program_path,
        "mode": mode,
        "models": models,
        "stats": {
            "atoms": len(program.atoms()),
            "rules": len(program.rules),
            "iterations": iterations,
        },
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def _emit_reports(args, program: Program, reports: List[ModelReport],
                  mode: str) -> None:
    iterations = sum(r.stats.iterations for r in reports)
    if args.score:
        reports = rank_models(reports, args.score)
    if args.json:
        print(_report_json(args.program, mode, reports, program, iterations))
    else:
        for report in reports:
            print(format_model(report.model))


# --- subcommands -----------------------------------------------------------

def _cmd_parse(args) -> int:
    program = _load_program(args.program)
    if args.json:
        print(json.dumps({
            "program": args.program,
            "dialect": str(program.dialect),
            "rules": [str(r) for r in program],
        }, indent=2, sort_keys=True))
    else:
        print(program)
    return EXIT_OK


def _cmd_ground(args) -> int:
    program = _load_ground_program(args.program)
    if args.json:
        print(json.dumps({
            "program": args.program,
            "dialect": str(program.dialect),
            "rules": [str(r) for r in program],
        }, indent=2, sort_keys=True))
    else:
        print(program)
    return EXIT_OK


def _cmd_stratify(args) -> int:
    program = _load_ground_program(args.program)
    strat = find_stratification(program, args.kind)
    if strat is None:
        print("not stratifiable")
        return EXIT_NO_MODEL
    strata = []
    for index, stratum in enumerate(strat.strata, start=1):
        rules = sorted(stratum)
        defines = sorted({str(program.rules[i].head.atom) for i in rules})
        strata.append({"stratum": index, "rules": rules, "defines": defines})
    if args.json:
        print(json.dumps(
            {"program": args.program, "kind": args.kind, "strata": strata},
            indent=2, sort_keys=True))
    else:
        for entry in strata:
            rules = ", ".join(str(i) for i in entry["rules"])
            print(f"stratum {entry['stratum']}: rules [{rules}] "
                  f"defining {', '.join(entry['defines'])}")
    return EXIT_OK


def _solve_asp(args, program: Program) -> List[ModelReport]:
    if program.inspected_literals():
        raise InputError("asp mode does not accept inspection tests; use --mode 4ql or 4sp")
    if program.dialect is Dialect.MIXED:
        raise InputError("asp mode does not accept mixed programs")
    try:
        cap = None if args.enumerate == "all" else int(args.enumerate or 1)
        models = enumerate_answer_sets(program, cap=cap)
    except BruteForceBoundError as exc:
        raise InputError(str(exc))
    except ValueError as exc:
        raise InputError(str(exc))
    return [build_report(program, m) for m in models]


def _solve_4ql(args, program: Program) -> List[ModelReport]:
    if program.default_literals():
        raise InputError("4ql mode does not accept default negation; use --mode 4sp")
    stats = EngineStats()
    model = generate_wsm_4ql(program, stats)
    return [build_report(program, model, stats=stats)]


def _solve_4sp(args, program: Program) -> List[ModelReport]:
    for rule in program:
        if not guard_satisfied(rule):
            print(f"warning: unguarded default literal in '{rule}'", file=sys.stderr)
            break
    if args.hypotheses:
        try:
            with open(args.hypotheses, "r", encoding="utf-8") as handle:
                hypothesis_text = handle.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.hypotheses}: {exc}")
        try:
            hset = parse_hypotheses(hypothesis_text, program)
        except (ProgramSyntaxError, HypothesisError, ValueError) as exc:
            raise InputError(f"{args.hypotheses}: {exc}")
        return [generate_wsm_4sp(program, hset)]
    cap = None if args.enumerate == "all" else int(args.enumerate or 1)
    return enumerate_4sp_models(program, strategy=args.strategy, cap=cap,
                                seed=args.seed)


def _cmd_solve(args) -> int:
    program = _load_ground_program(args.program)
    if args.hypotheses and args.mode != "4sp":
        raise InputError("--hypotheses is only meaningful with --mode 4sp")
    try:
        if args.mode == "asp":
            reports = _solve_asp(args, program)
        elif args.mode == "4ql":
            reports = _solve_4ql(args, program)
        else:
            reports = _solve_4sp(args, program)
    except UnstratifiableError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NO_MODEL
    except (HypothesisError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(str(exc))
    _emit_reports(args, program, reports, args.mode)
    return EXIT_OK if reports else EXIT_NO_MODEL


def _cmd_check_wsm(args) -> int:
    program = _load_ground_program(args.program)
    if program.default_literals() or program.inspected_literals():
        raise InputError("check-wsm expects a pure program")
    if args.model:
        try:
            with open(args.model, "r", encoding="utf-8") as handle:
                model = parse_literal_set(handle.read())
        except OSError as exc:
            raise InputError(f"cannot read {args.model}: {exc}")
        except ProgramSyntaxError as exc:
            raise InputError(f"{args.model}: {exc}")
    else:
        model = generate_wsm_4ql(program)
    verdict = check_well_supported(program, model)
    rendered = {True: "well-supported", False: "not well-supported",
                None: "unknown"}[verdict]
    if args.json:
        print(json.dumps({
            "program": args.program,
            "model": sorted(str(l) for l in model),
            "verdict": rendered,
        }, indent=2, sort_keys=True))
    else:
        print(rendered)
    return EXIT_OK if verdict is True else EXIT_NO_MODEL


def _cmd_rank(args) -> int:
    try:
        with open(args.report, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {args.report}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.report}: not a JSON report ({exc})")
    try:
        models = payload["models"]
        key = (lambda m: tuple(sorted(m["literals"]))) \
            if args.score == "lexicographic" else \
            (lambda m: (m["scores"][args.score], tuple(sorted(m["literals"]))))
        payload["models"] = sorted(models, key=key)
    except KeyError as exc:
        raise InputError(f"{args.report}: malformed report, missing {exc}")
    if args.score not in RANK_CRITERIA:
        raise InputError(f"unknown ranking criterion {args.score!r}")
    print(json.dumps(payload, indent=2, sort_keys=True))
    return EXIT_OK if payload["models"] else EXIT_NO_MODEL


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paralog",
        description="Four-valued paraconsistent rule-program interpreter")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("program", help="program file")
        p.add_argument("--json", action="store_true", help="emit JSON")

    p_parse = sub.add_parser("parse", help="parse and pretty-print a program")
    add_common(p_parse)
    p_parse.set_defaults(func=_cmd_parse)

    p_ground = sub.add_parser("ground", help="parse and ground a program")
    add_common(p_ground)
    p_ground.set_defaults(func=_cmd_ground)

    p_strat = sub.add_parser("stratify", help="compute a stratification")
    p_strat.add_argument("--kind", choices=("D", "I"), required=True,
                         help="D: over default literals; I: over inspection tests")
    add_common(p_strat)
    p_strat.set_defaults(func=_cmd_stratify)

    p_solve = sub.add_parser("solve", help="generate models")
    p_solve.add_argument("--mode", choices=("asp", "4ql", "4sp"), required=True)
    p_solve.add_argument("--hypotheses", metavar="FILE",
                         help="hypothesis file for 4sp mode")
    p_solve.add_argument("--enumerate", metavar="N|all", default=None,
                         help="number of models to produce (default 1)")
    p_solve.add_argument("--strategy", choices=("lex", "random", "exhaustive"),
                         default="lex", help="hypothesis enumeration strategy")
    p_solve.add_argument("--seed", type=int, default=None,
                         help="seed for the random strategy")
    p_solve.add_argument("--score", choices=RANK_CRITERIA, default=None,
                         help="rank emitted models by this criterion")
    add_common(p_solve)
    p_solve.set_defaults(func=_cmd_solve)

    p_check = sub.add_parser("check-wsm",
                             help="check well-supportedness of a model")
    p_check.add_argument("--model", metavar="FILE",
                         help="literal set in braces; defaults to the engine's model")
    add_common(p_check)
    p_check.set_defaults(func=_cmd_check_wsm)

    p_rank = sub.add_parser("rank", help="re-rank a JSON report")
    p_rank.add_argument("--score", required=True,
                        help="criterion: " + ", ".join(RANK_CRITERIA))
    p_rank.add_argument("report", help="JSON report produced by solve --json")
    p_rank.set_defaults(func=_cmd_rank)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
