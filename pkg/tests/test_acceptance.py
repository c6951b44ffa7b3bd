"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary. Run just this module with ``pytest tests/test_acceptance.py``.
"""

import csv
import io
import random
import statistics
import time
from fractions import Fraction

import pytest

from proofgrade import (
    apply_edit_script,
    build_problematic_graph,
    cli,
    grade_baseline,
    grade_mvc,
    validate_problem,
    validate_submission,
)
from proofgrade.bench import TIMING_COLUMNS, CorpusSpec, chains, generate_synthetic_corpus, run_benchmark
from proofgrade.core import is_topological_ordering
from proofgrade.dag import all_topological_orderings, count_linear_extensions, minimum_vertex_cover

from conftest import ACCEPTANCE_RESULTS, SAMPLE_RAW
from oracles import brute_orderings, min_edits_bfs, mutated_submissions, random_problem_raw

EQUIVALENCE_PROBLEMS = 1000
SUBMISSIONS_PER_PROBLEM = 6
EQUIVALENCE_BUDGET_S = 60.0
WORKED_EXAMPLE_BUDGET_MS = 10.0
MINIMALITY_CASES = 200
SPEEDUP_FLOOR = 10.0
MVC_MEAN_CEILING_MS = 50.0


def record(number: int, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    ACCEPTANCE_RESULTS.append(line)
    print(line)
    assert ok, line


def _median_ms(fn, runs=5):
    times = []
    for _ in range(runs):
        start = time.perf_counter()
        fn()
        times.append((time.perf_counter() - start) * 1e3)
    return statistics.median(times)


def test_criterion_1_worked_example():
    p = validate_problem(SAMPLE_RAW)
    s = validate_submission(p, ["1", "3", "4", "5", "2", "7"])
    base, fast = grade_baseline(s, p), grade_mvc(s, p)
    pg = build_problematic_graph(s, p)
    cover = minimum_vertex_cover(pg.graph)
    base_ms = _median_ms(lambda: grade_baseline(s, p))
    mvc_ms = _median_ms(lambda: grade_mvc(s, p))
    ok = (
        base.d_star == fast.d_star == 4
        and base.score_text == fast.score_text == "33.3"
        and pg.nodes == {"2", "3", "4", "5"}
        and pg.edges == {("2", "3"), ("2", "4"), ("2", "5")}
        and cover == {"2"}
        and max(base_ms, mvc_ms) < WORKED_EXAMPLE_BUDGET_MS
    )
    record(
        1,
        ok,
        f"d*={base.d_star}/{fast.d_star}, score {fast.score_text}, cover {sorted(cover)}, "
        f"baseline {base_ms:.3f} ms, mvc {mvc_ms:.3f} ms (< {WORKED_EXAMPLE_BUDGET_MS} ms)",
    )


def test_criterion_2_sample_enumeration():
    p = validate_problem(SAMPLE_RAW)
    orderings = all_topological_orderings(p.graph)
    expected = {tuple("123456"), tuple("124356"), tuple("123546")}
    count = count_linear_extensions(p.graph)
    ok = len(orderings) == 3 and set(orderings) == expected and count == 3
    record(2, ok, f"{len(orderings)} orderings, linear-extension count {count}")


@pytest.fixture(scope="module")
def equivalence_run():
    rng = random.Random(2024)
    cases = []
    start = time.perf_counter()
    for _ in range(EQUIVALENCE_PROBLEMS):
        raw = random_problem_raw(rng, max_nodes=7, max_distractors=2, max_density=0.6)
        p = validate_problem(raw)
        for seq in mutated_submissions(rng, raw, SUBMISSIONS_PER_PROBLEM):
            s = validate_submission(p, seq)
            cases.append((p, s, grade_baseline(s, p), grade_mvc(s, p)))
    elapsed = time.perf_counter() - start
    return cases, elapsed


def test_criterion_3_oracle_equivalence(equivalence_run):
    cases, elapsed = equivalence_run
    mismatches = [(p, s) for p, s, base, fast in cases if base.d_star != fast.d_star]
    ok = not mismatches and len(cases) >= EQUIVALENCE_PROBLEMS * 5 and elapsed < EQUIVALENCE_BUDGET_S
    record(
        3,
        ok,
        f"{len(cases)} cases over {EQUIVALENCE_PROBLEMS} problems, {len(mismatches)} mismatches, "
        f"{elapsed:.1f} s (< {EQUIVALENCE_BUDGET_S:.0f} s)",
    )


def test_criterion_4_feasibility(equivalence_run):
    cases, _ = equivalence_run
    bad = 0
    for p, s, _, fast in cases:
        result = apply_edit_script(s.sequence, fast.edit_script)
        if not is_topological_ordering(p, result) or len(fast.edit_script) != fast.d_star:
            bad += 1
    record(4, bad == 0, f"{len(cases) - bad}/{len(cases)} scripts reach a solution in exactly d* edits")


def test_criterion_5_minimality():
    rng = random.Random(77)
    checked = 0
    failures = []
    while checked < MINIMALITY_CASES:
        raw = random_problem_raw(rng, max_nodes=5, max_distractors=2, max_density=0.6)
        p = validate_problem(raw)
        targets = brute_orderings(p.solution_nodes, p.edges)
        for seq in mutated_submissions(rng, raw, 4):
            s = validate_submission(p, seq)
            d = grade_mvc(s, p).d_star
            found = min_edits_bfs(s.sequence, targets, sorted(p.blocks), d)
            if found != d:
                failures.append((s.sequence, d, found))
            checked += 1
    record(5, not failures, f"{checked} cases, exhaustive search shortest edit == d* in all but {len(failures)}")


def test_criterion_6_scaling():
    item = generate_synthetic_corpus(CorpusSpec("chains-8x8", 16, edges=chains(8, 8), n_submissions=100, seed=6))
    records, _ = run_benchmark([item], repetitions=3)
    rec = records[0]
    ok = (
        rec.possible_solutions >= 10_000
        and rec.submissions == 100
        and rec.speedup_factor >= SPEEDUP_FLOOR
        and rec.mvc_mean_ms < MVC_MEAN_CEILING_MS
    )
    record(
        6,
        ok,
        f"{rec.possible_solutions} solutions, baseline {rec.baseline_mean_ms:.3f} ms, mvc {rec.mvc_mean_ms:.3f} ms, "
        f"speedup {rec.speedup_factor:.1f}x (>= {SPEEDUP_FLOOR:.0f}x), mvc < {MVC_MEAN_CEILING_MS:.0f} ms",
    )


def test_criterion_7_score_properties(equivalence_run):
    cases, _ = equivalence_run
    bad = 0
    for p, s, _, fast in cases:
        sc = fast.score_percent
        in_range = Fraction(0) <= sc <= 100
        perfect_iff_solution = (sc == 100) == is_topological_ordering(p, s.sequence)
        zero_when_far = fast.d_star < len(p) or sc == 0
        bad += not (in_range and perfect_iff_solution and zero_when_far)
    record(7, bad == 0, f"{len(cases) - bad}/{len(cases)} cases satisfy range, perfect-iff-solution, zero-clamp")


def _strip_timing(text: str) -> list[list[str]]:
    rows = list(csv.reader(io.StringIO(text)))
    keep = [i for i, name in enumerate(rows[0]) if name not in TIMING_COLUMNS]
    return [[row[i] for i in keep] for row in rows]


def test_criterion_8_determinism(tmp_path, sample_path, sample_submissions_path, capsys):
    grade_outputs = []
    bench_outputs = []
    for run in range(2):
        out = tmp_path / f"grade{run}.jsonl"
        assert cli.main(["grade", "--problem", str(sample_path), "--submissions", str(sample_submissions_path),
                         "--out", str(out)]) == 0
        grade_outputs.append(out.read_bytes())
        bench_dir = tmp_path / f"bench{run}"
        assert cli.main(["bench", "--seed", "5", "--per-problem", "4", "--repetitions", "1",
                         "--out", str(bench_dir)]) == 0
        bench_outputs.append(
            (
                _strip_timing((bench_dir / "bench_table.csv").read_text()),
                _strip_timing((bench_dir / "bench_scaling.csv").read_text()),
            )
        )
    capsys.readouterr()
    ok = grade_outputs[0] == grade_outputs[1] and bench_outputs[0] == bench_outputs[1]
    record(8, ok, "grade reports byte-identical; bench tables identical outside timing columns")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
