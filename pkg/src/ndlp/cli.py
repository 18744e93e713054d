"""Command-line front end: load, ground, solve, expand.

Commands:
    ndlp solve  [--semantics least|stable|wf] [options] FILE...
    ndlp ground [--horizon N] FILE...
    ndlp expand [--semantics ...] FILE...      (solve plus answer sets)

Exit codes: 0 with at least one model, 1 with none (unsatisfiable under the
stable semantics), 2 on usage, parse, or grounding errors. Reports are
deterministic for a fixed input and flag set; the JSON form is byte-stable,
with timing kept off it and on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .answersets import AnswerSet, expand
from .errors import NdlpError
from .grounder import GroundProgram, ground
from .parser import parse_program
from .positive import least_model
from .stable import enumerate_stable
from .syntax import NdAtom, Program, sort_nd_atoms
from .wf import well_founded_model


@dataclass
class SolveReport:
    semantics: str
    models: list[list[NdAtom]] = field(default_factory=list)
    negatives: list[NdAtom] | None = None  # wf only
    undefined: list[NdAtom] | None = None  # wf only
    total: bool | None = None  # wf only
    answer_sets: list[list[AnswerSet]] | None = None
    truncated: bool = False
    rule_count: int = 0
    base_size: int = 0
    timing_s: float = 0.0

    def to_json(self) -> str:
        def nd(atom: NdAtom) -> list[str]:
            return [str(a) for a in atom]

        payload: dict = {
            "semantics": self.semantics,
            "models": [[nd(a) for a in model] for model in self.models],
            "answer_sets": [
                [s.entries() for s in per_model] for per_model in (self.answer_sets or [])
            ],
            "truncated": self.truncated,
            "stats": {"rules": self.rule_count, "base_size": self.base_size},
        }
        if self.semantics == "wf":
            payload["total"] = bool(self.total)
            payload["negatives"] = [nd(a) for a in (self.negatives or [])]
            payload["undefined"] = [nd(a) for a in (self.undefined or [])]
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [f"semantics: {self.semantics}"]
        lines.append(f"ground rules: {self.rule_count}, base size: {self.base_size}")
        if not self.models:
            lines.append("no models")
        for i, model in enumerate(self.models, start=1):
            lines.append(f"model {i}:")
            for atom in model:
                lines.append(f"  {atom}")
            if self.semantics == "wf":
                for atom in self.negatives or []:
                    lines.append(f"  not {atom}")
                if self.undefined:
                    lines.append("  undefined:")
                    for atom in self.undefined:
                        lines.append(f"    {atom}")
                lines.append(f"  total: {'yes' if self.total else 'no'}")
            if self.answer_sets is not None:
                for j, answer_set in enumerate(self.answer_sets[i - 1], start=1):
                    lines.append(f"  answer set {i}.{j}: {answer_set}")
        if self.truncated:
            lines.append("truncated: yes")
        return "\n".join(lines) + "\n"


def _load(paths: list[str], horizon: int | None) -> tuple[Program, GroundProgram]:
    text = "".join(open(p, encoding="utf-8").read() for p in paths)
    program = parse_program(text)
    return program, ground(program, horizon=horizon)


def _solve(args: argparse.Namespace, want_answer_sets: bool) -> int:
    started = time.perf_counter()
    program, gp = _load(args.files, args.horizon)
    if args.dump_ground:
        sys.stdout.write(str(gp))

    report = SolveReport(
        semantics=args.semantics,
        rule_count=len(gp.rules),
        base_size=len(gp.base),
    )
    models: list = []
    if args.semantics == "least":
        if not program.is_positive():
            raise NdlpError(
                "least-model semantics is defined for negation-free programs; "
                "use --semantics stable or wf"
            )
        models = [least_model(gp)]
        report.models = [list(sort_nd_atoms(m)) for m in models]
    elif args.semantics == "stable":
        result = enumerate_stable(gp, max_models=args.max_models)
        models = list(result.models)
        report.models = [list(sort_nd_atoms(m)) for m in models]
        report.truncated |= result.truncated
        if result.truncated:
            print("model enumeration truncated by --max-models", file=sys.stderr)
    else:  # wf
        wf_model = well_founded_model(gp)
        models = [wf_model]
        report.models = [list(sort_nd_atoms(wf_model.pos))]
        report.negatives = list(sort_nd_atoms(wf_model.neg))
        report.undefined = list(
            sort_nd_atoms(gp.base_set - wf_model.pos - wf_model.neg)
        )
        report.total = wf_model.is_total(gp.base)

    if want_answer_sets:
        report.answer_sets = []
        for model in models:
            expansion = expand(
                model, cap=args.max_answer_sets, subset_minimal=args.subset_minimal
            )
            report.answer_sets.append(list(expansion.answer_sets))
            report.truncated |= expansion.truncated
            if expansion.truncated:
                print("answer-set expansion truncated by --max-answer-sets", file=sys.stderr)

    report.timing_s = time.perf_counter() - started
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    print(f"solved in {report.timing_s:.3f}s", file=sys.stderr)
    return 0 if report.models else 1


def _ground_cmd(args: argparse.Namespace) -> int:
    _, gp = _load(args.files, args.horizon)
    sys.stdout.write(str(gp))
    return 0


def _add_solve_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("files", nargs="+", metavar="FILE", help="input .ndlp file(s)")
    sub.add_argument(
        "--semantics", choices=("least", "stable", "wf"), default="stable"
    )
    sub.add_argument("--horizon", type=int, default=None, help="override #horizon")
    sub.add_argument("--max-models", type=int, default=None)
    sub.add_argument("--max-answer-sets", type=int, default=None)
    sub.add_argument("--subset-minimal", action="store_true")
    sub.add_argument("--dump-ground", action="store_true")
    sub.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ndlp", description="solver for non-deterministic logic programs"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="compute models under a semantics")
    _add_solve_flags(solve)
    solve.add_argument(
        "--answer-sets", action="store_true", help="also expand each model"
    )

    grounder = commands.add_parser("ground", help="print the ground program")
    grounder.add_argument("files", nargs="+", metavar="FILE")
    grounder.add_argument("--horizon", type=int, default=None)

    expander = commands.add_parser("expand", help="solve and expand answer sets")
    _add_solve_flags(expander)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "ground":
            return _ground_cmd(args)
        if args.command == "solve":
            return _solve(args, want_answer_sets=args.answer_sets)
        return _solve(args, want_answer_sets=True)
    except (NdlpError, OSError) as err:
        print(f"ndlp: error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
