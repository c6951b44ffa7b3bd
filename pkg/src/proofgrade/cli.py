"""``proofgrade`` command line: grade, verify, bench, stats.

Exit status is 0 on success, 1 when any submission or problem produced a
diagnostic, and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import bench, kernels
from .core import format_score, validate_submission
from .corpus import load_problem, load_submissions, write_grade_reports
from .dag import DEFAULT_CAP, count_linear_extensions
from .errors import CapExceeded, NoData, ProofGradeError
from .grader import grade_baseline, grade_mvc

OUTPUT_DIR_ENV = "PROOFGRADE_OUTPUT_DIR"

EXIT_OK, EXIT_DIAGNOSTICS, EXIT_USAGE = 0, 1, 2


def _default_out_dir() -> Path:
    return Path(os.environ.get(OUTPUT_DIR_ENV, "."))


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load_graded_inputs(args):
    problem = load_problem(args.problem)
    batch = load_submissions(args.submissions)
    for diag in batch.diagnostics:
        _err(f"error: {diag}")
    return problem, batch


def cmd_grade(args) -> int:
    problem, batch = _load_graded_inputs(args)
    failed = len(batch.diagnostics)
    graded_records, reports = [], []
    for record in batch.records:
        try:
            s = validate_submission(problem, record.sequence)
            if args.algorithm == "baseline":
                report = grade_baseline(s, problem, args.cap)
            else:
                report = grade_mvc(s, problem)
        except ProofGradeError as exc:
            _err(f"error: submission {record.submission_id}: {type(exc).__name__}: {exc}")
            failed += 1
            continue
        graded_records.append(record)
        reports.append(report)

    out = Path(args.out) if args.out else _default_out_dir() / "grades.jsonl"
    out.parent.mkdir(parents=True, exist_ok=True)
    write_grade_reports(graded_records, reports, out)
    mean = format_score(sum((r.score_percent for r in reports), Fraction(0)) / len(reports)) if reports else "n/a"
    print(f"graded {len(reports)} submission(s) with {args.algorithm}; mean score {mean}; failed {failed}")
    print(f"wrote {out}")
    return EXIT_DIAGNOSTICS if failed else EXIT_OK


def cmd_verify(args) -> int:
    problem, batch = _load_graded_inputs(args)
    problems = len(batch.diagnostics)
    agreed = skipped = mismatched = 0
    for record in batch.records:
        try:
            s = validate_submission(problem, record.sequence)
        except ProofGradeError as exc:
            _err(f"error: submission {record.submission_id}: {type(exc).__name__}: {exc}")
            problems += 1
            continue
        try:
            base = grade_baseline(s, problem, args.cap)
        except CapExceeded:
            skipped += 1
            continue
        fast = grade_mvc(s, problem)
        if base.d_star == fast.d_star:
            agreed += 1
        else:
            mismatched += 1
            print(
                f"MISMATCH problem={args.problem} submission_id={record.submission_id} "
                f"sequence={list(s.sequence)} baseline_d_star={base.d_star} mvc_d_star={fast.d_star}"
            )
    print(f"agreed {agreed}, mismatched {mismatched}, skipped (cap) {skipped}, invalid {problems}")
    return EXIT_DIAGNOSTICS if mismatched or problems else EXIT_OK


def _bench_corpus(args) -> list[bench.SyntheticProblem]:
    if not args.problem:
        per = None if args.per_problem == 0 else args.per_problem
        return [bench.generate_synthetic_corpus(spec) for spec in bench.reference_specs(args.seed, per)]
    if len(args.submissions) != len(args.problem):
        raise SystemExit(_usage_error("bench needs one --submissions file per --problem"))
    corpus = []
    for prob_path, sub_path in zip(args.problem, args.submissions):
        problem = load_problem(prob_path)
        batch = load_submissions(sub_path)
        for diag in batch.diagnostics:
            _err(f"error: {diag}")
        corpus.append(bench.SyntheticProblem(Path(prob_path).stem, problem, tuple(batch.records)))
    return corpus


def cmd_bench(args) -> int:
    if args.backend:
        kernels.set_backend(args.backend)
    corpus = _bench_corpus(args)
    if not corpus or not any(item.records for item in corpus):
        raise NoData("no submissions to benchmark")
    records, _ = bench.run_benchmark(corpus, args.repetitions, args.cap)
    out_dir = Path(args.out) if args.out else _default_out_dir()
    out_dir.mkdir(parents=True, exist_ok=True)
    bench.emit_table(records, out_dir / "bench_table.csv")
    bench.emit_scaling_data(records, out_dir / "bench_scaling.csv")
    print(f"kernels: {kernels.backend()}")
    print(f"{'problem':>8} {'len':>4} {'solutions':>10} {'baseline ms':>12} {'mvc ms':>9} {'speedup':>8}")
    for r in records:
        print(
            f"{r.problem_id:>8} {r.proof_length:>4} {r.possible_solutions:>10} "
            f"{r.baseline_mean_ms:>12.3f} {r.mvc_mean_ms:>9.3f} {r.speedup_factor:>8.1f}"
        )
    print(f"wrote {out_dir / 'bench_table.csv'} and {out_dir / 'bench_scaling.csv'}")
    return EXIT_OK


def cmd_stats(args) -> int:
    if not args.problem:
        raise NoData("no problems given")
    print("problem,proof_length,possible_solutions,distractors")
    for path in args.problem:
        p = load_problem(path)
        print(f"{path},{len(p)},{count_linear_extensions(p.graph)},{len(p.distractors)}")
    return EXIT_OK


def _usage_error(msg: str) -> int:
    _err(f"usage error: {msg}")
    return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="proofgrade", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, many=False):
        if many:
            p.add_argument("--problem", action="append", default=[], help="problem JSON file (repeatable)")
            p.add_argument("--submissions", action="append", default=[], help="submissions JSONL (repeatable)")
        else:
            p.add_argument("--problem", required=True, help="problem JSON file")
            p.add_argument("--submissions", required=True, help="submissions JSONL file")
        p.add_argument("--cap", type=_positive_int, default=DEFAULT_CAP, help="max orderings the baseline enumerates")

    g = sub.add_parser("grade", help="grade a submissions file")
    common(g)
    g.add_argument("--algorithm", choices=("mvc", "baseline"), default="mvc")
    g.add_argument("--out", help=f"grade report JSONL (default ${OUTPUT_DIR_ENV}/grades.jsonl)")
    g.set_defaults(func=cmd_grade)

    v = sub.add_parser("verify", help="check that both graders agree on every submission")
    common(v)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time both graders; synthetic corpus unless --problem is given")
    common(b, many=True)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--repetitions", type=_positive_int, default=bench.DEFAULT_REPETITIONS)
    b.add_argument("--per-problem", type=int, default=30, help="synthetic submissions per problem (0: reference counts)")
    b.add_argument("--backend", choices=("python", "cython"), help="force a kernel backend")
    b.add_argument("--out", help=f"output directory (default ${OUTPUT_DIR_ENV} or .)")
    b.set_defaults(func=cmd_bench)

    s = sub.add_parser("stats", help="proof length, possible solutions, distractors")
    s.add_argument("--problem", action="append", default=[], help="problem JSON file (repeatable)")
    s.set_defaults(func=cmd_stats)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ProofGradeError, OSError) as exc:
        _err(f"error: {type(exc).__name__}: {exc}")
        return EXIT_DIAGNOSTICS
    except RuntimeError as exc:  # unavailable backend
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
