"""Timing harness comparing the enumeration and vertex-cover graders.

Produces one :class:`BenchRecord` per problem and scaling data for plotting
grading time against the number of possible solutions and against proof length. Real student data is not
available, so :func:`generate_synthetic_corpus` builds seeded stand-ins.
"""

from __future__ import annotations

import csv
import math
import random
import statistics
import time
from collections.abc import Mapping, Sequence
from dataclasses import asdict, dataclass, field, fields

from .core import ProofBlocksProblem, Submission, validate_problem, validate_submission
from .corpus import SubmissionRecord
from .dag import DEFAULT_CAP, count_linear_extensions, minimum_vertex_cover
from .errors import NoData, ProofGradeError
from .grader import build_problematic_graph, grade_baseline, grade_mvc

ALGORITHMS = ("baseline", "mvc")
DEFAULT_REPETITIONS = 5


class GraderDisagreement(ProofGradeError, AssertionError):
    pass


class InfeasibleSpec(ProofGradeError, ValueError):
    pass


@dataclass(frozen=True)
class TimingRow:
    submission_id: str
    times_ms: tuple[float, ...] = ()
    d_star: int | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None

    @property
    def mean_ms(self) -> float:
        return statistics.fmean(self.times_ms)


@dataclass(frozen=True)
class BenchRecord:
    problem_id: str
    proof_length: int
    possible_solutions: int
    distractors: int
    submissions: int
    mean_submission_size: float
    mean_problematic_graph_size: float
    mean_mvc_size: float
    baseline_mean_ms: float
    baseline_stderr_ms: float
    mvc_mean_ms: float
    mvc_stderr_ms: float
    speedup_factor: float
    baseline_timed: int
    mvc_timed: int

    @property
    def low_n(self) -> bool:
        return min(self.baseline_timed, self.mvc_timed) < 2


TIMING_COLUMNS = ("baseline_mean_ms", "baseline_stderr_ms", "mvc_mean_ms", "mvc_stderr_ms", "speedup_factor")


def _grade(algorithm: str, s: Submission, p: ProofBlocksProblem, cap: int):
    if algorithm == "baseline":
        return grade_baseline(s, p, cap)
    if algorithm == "mvc":
        return grade_mvc(s, p)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def time_grader(
    problem: ProofBlocksProblem,
    submissions: Sequence[tuple[str, Submission]],
    algorithm: str,
    repetitions: int = DEFAULT_REPETITIONS,
    cap: int = DEFAULT_CAP,
) -> list[TimingRow]:
    """Time one grader on every ``(submission_id, submission)`` pair, serially.

    Only the grading call is inside the timed region. A submission whose
    baseline run exceeds ``cap`` gets a failed row instead of aborting the run.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    problem.reachability  # keep the closure build out of the timings
    clock = time.perf_counter_ns
    rows = []
    for sid, s in submissions:
        times = []
        d_star = None
        try:
            for _ in range(repetitions):
                start = clock()
                report = _grade(algorithm, s, problem, cap)
                times.append((clock() - start) / 1e6)
                d_star = report.d_star
        except ProofGradeError as exc:
            rows.append(TimingRow(sid, error=f"{type(exc).__name__}: {exc}"))
            continue
        rows.append(TimingRow(sid, tuple(times), d_star))
    return rows


def cross_check(timings: Mapping[str, Sequence[TimingRow]]) -> int:
    """Raise if the graders disagree on any submission both graded; return the count compared."""
    base = {r.submission_id: r.d_star for r in timings["baseline"] if r.ok}
    compared = 0
    for row in timings["mvc"]:
        if row.ok and row.submission_id in base:
            compared += 1
            if base[row.submission_id] != row.d_star:
                raise GraderDisagreement(
                    f"submission {row.submission_id}: baseline d*={base[row.submission_id]}, mvc d*={row.d_star}"
                )
    return compared


def _mean_stderr(values: Sequence[float]) -> tuple[float, float]:
    mean = statistics.fmean(values)
    if len(values) < 2:
        return mean, 0.0
    return mean, statistics.stdev(values) / math.sqrt(len(values))


def summarize(
    timings: Mapping[str, Sequence[TimingRow]],
    problem: ProofBlocksProblem,
    submissions: Sequence[tuple[str, Submission]],
    problem_id: str = "",
) -> BenchRecord:
    per_alg = {}
    for alg in ALGORITHMS:
        means = [r.mean_ms for r in timings.get(alg, ()) if r.ok]
        if not means:
            raise NoData(f"no successful {alg} timings for problem {problem_id!r}")
        per_alg[alg] = (*_mean_stderr(means), len(means))
    if not submissions:
        raise NoData(f"no submissions for problem {problem_id!r}")

    subs = [s for _, s in submissions]
    pgs = [build_problematic_graph(s, problem) for s in subs]
    b_mean, b_err, b_n = per_alg["baseline"]
    m_mean, m_err, m_n = per_alg["mvc"]
    return BenchRecord(
        problem_id=problem_id,
        proof_length=len(problem),
        possible_solutions=count_linear_extensions(problem.graph),
        distractors=len(problem.distractors),
        submissions=len(subs),
        mean_submission_size=statistics.fmean(len(s) for s in subs),
        mean_problematic_graph_size=statistics.fmean(len(pg.nodes) for pg in pgs),
        mean_mvc_size=statistics.fmean(len(minimum_vertex_cover(pg.graph)) for pg in pgs),
        baseline_mean_ms=b_mean,
        baseline_stderr_ms=b_err,
        mvc_mean_ms=m_mean,
        mvc_stderr_ms=m_err,
        speedup_factor=b_mean / m_mean if m_mean > 0 else math.inf,
        baseline_timed=b_n,
        mvc_timed=m_n,
    )


def _cell(value) -> str:
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def emit_table(records: Sequence[BenchRecord], path) -> None:
    if not records:
        raise NoData("no benchmark records to write")
    names = [f.name for f in fields(BenchRecord)]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(names)
        for rec in records:
            row = asdict(rec)
            writer.writerow([_cell(row[n]) for n in names])


SCALING_COLUMNS = ("problem_id", "possible_solutions", "baseline_mean_ms", "proof_length", "mvc_mean_ms")


def emit_scaling_data(records: Sequence[BenchRecord], path) -> None:
    """Write the two plotting series side by side.

    ``possible_solutions`` vs ``baseline_mean_ms`` is the log-log series;
    ``proof_length`` vs ``mvc_mean_ms`` is the log-linear one.
    """
    if not records:
        raise NoData("no benchmark records to write")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(SCALING_COLUMNS)
        for rec in records:
            writer.writerow([_cell(getattr(rec, c)) for c in SCALING_COLUMNS])


# -- synthetic corpora -------------------------------------------------------


@dataclass(frozen=True)
class CorpusSpec:
    """Recipe for one synthetic problem and its submissions.

    ``edges`` (1-based node numbers) fixes the graph; otherwise a random DAG is
    drawn with ``edge_density`` as the probability of each forward pair.
    ``mutations`` weights the kinds of damage applied to correct solutions.
    """

    problem_id: str
    n_nodes: int
    n_distractors: int = 0
    n_submissions: int = 20
    edge_density: float = 0.3
    edges: tuple[tuple[int, int], ...] | None = None
    mutations: Mapping[str, float] = field(
        default_factory=lambda: {"swap": 3.0, "drop": 1.0, "distractor": 1.0}
    )
    max_mutations: int = 3
    mean_submission_size: float | None = None
    seed: int = 0


@dataclass(frozen=True)
class SyntheticProblem:
    problem_id: str
    problem: ProofBlocksProblem
    records: tuple[SubmissionRecord, ...]

    def submissions(self) -> list[tuple[str, Submission]]:
        return [(r.submission_id, validate_submission(self.problem, r.sequence)) for r in self.records]


MUTATION_KINDS = ("swap", "drop", "distractor")


def chains(*lengths: int) -> tuple[tuple[int, int], ...]:
    """Edges for disjoint chains over consecutive node numbers starting at 1."""
    edges = []
    start = 1
    for length in lengths:
        edges.extend((start + i, start + i + 1) for i in range(length - 1))
        start += length
    return tuple(edges)


def _node_id(k: int, width: int) -> str:
    return str(k).zfill(width)


def _random_extension(rng: random.Random, nodes: Sequence[str], preds: Mapping[str, set[str]]) -> list[str]:
    placed: list[str] = []
    done: set[str] = set()
    while len(placed) < len(nodes):
        ready = [v for v in nodes if v not in done and preds[v] <= done]
        v = rng.choice(ready)
        placed.append(v)
        done.add(v)
    return placed


def generate_synthetic_corpus(spec: CorpusSpec) -> SyntheticProblem:
    if spec.n_nodes < 1:
        raise InfeasibleSpec("a problem needs at least one solution node")
    if spec.n_distractors < 0 or spec.n_submissions < 0 or spec.max_mutations < 0:
        raise InfeasibleSpec("counts must be non-negative")
    if not 0.0 <= spec.edge_density <= 1.0:
        raise InfeasibleSpec("edge_density must be within [0, 1]")
    unknown = set(spec.mutations) - set(MUTATION_KINDS)
    if unknown or any(w < 0 for w in spec.mutations.values()):
        raise InfeasibleSpec(f"bad mutation weights {dict(spec.mutations)}")

    rng = random.Random(spec.seed)
    width = max(2, len(str(spec.n_nodes)))
    nodes = [_node_id(k, width) for k in range(1, spec.n_nodes + 1)]
    distractors = [f"d{k}" for k in range(1, spec.n_distractors + 1)]

    if spec.edges is not None:
        for u, v in spec.edges:
            if not (1 <= u <= spec.n_nodes and 1 <= v <= spec.n_nodes):
                raise InfeasibleSpec(f"edge ({u}, {v}) is outside 1..{spec.n_nodes}")
        edges = [(nodes[u - 1], nodes[v - 1]) for u, v in spec.edges]
    else:
        perm = nodes[:]
        rng.shuffle(perm)
        edges = [
            (perm[i], perm[j])
            for i in range(len(perm))
            for j in range(i + 1, len(perm))
            if rng.random() < spec.edge_density
        ]

    problem = validate_problem({"blocks": nodes + distractors, "solution_nodes": nodes, "edges": edges})
    preds: dict[str, set[str]] = {v: set() for v in nodes}
    for u, v in edges:
        preds[v].add(u)

    kinds = [k for k in MUTATION_KINDS if spec.mutations.get(k, 0) > 0]
    weights = [spec.mutations[k] for k in kinds]
    records = []
    for k in range(spec.n_submissions):
        seq = _random_extension(rng, nodes, preds)
        if spec.mean_submission_size is not None:
            size = round(rng.gauss(spec.mean_submission_size, 1.5))
            seq = seq[: min(len(seq), max(1, size))]
        for _ in range(rng.randint(0, spec.max_mutations) if kinds else 0):
            kind = rng.choices(kinds, weights)[0]
            if kind == "swap" and len(seq) >= 2:
                i, j = rng.sample(range(len(seq)), 2)
                seq[i], seq[j] = seq[j], seq[i]
            elif kind == "drop" and seq:
                seq.pop(rng.randrange(len(seq)))
            elif kind == "distractor":
                unused = [d for d in distractors if d not in seq]
                if unused:
                    seq.insert(rng.randint(0, len(seq)), rng.choice(unused))
        records.append(SubmissionRecord(f"{spec.problem_id}-{k:04d}", tuple(seq)))
    return SyntheticProblem(spec.problem_id, problem, tuple(records))


# Reference problem shapes. Each graph fixes a proof length and a number of
# possible solutions (found by seeded edge search, then transitively reduced).
# Columns: proof length, possible solutions, distractors, submissions, mean
# submission size, edges.
REFERENCE_SHAPES: tuple[tuple[int, int, int, int, float, tuple[tuple[int, int], ...]], ...] = (
    (9, 24, 0, 529, 8.9, ((1, 2), (1, 5), (2, 3), (2, 6), (3, 9), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9))),
    (9, 35, 5, 376, 8.5, ((1, 2), (2, 3), (3, 4), (3, 5), (4, 6), (4, 8), (5, 7), (5, 8), (6, 9))),
    (9, 42, 0, 13, 8.8, ((1, 6), (2, 4), (3, 4), (4, 5), (5, 6), (5, 7), (6, 8), (8, 9))),
    (15, 55, 0, 29, 6.9, (
        (1, 3), (1, 4), (2, 3), (3, 5), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 10), (10, 11), (10, 12),
        (11, 15), (12, 13), (12, 14), (14, 15),
    )),
    (14, 56, 0, 324, 6.4, (
        (1, 5), (1, 7), (2, 3), (2, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 8), (6, 7), (7, 8), (8, 9), (8, 10),
        (9, 11), (10, 11), (11, 12), (12, 13), (13, 14),
    )),
    (15, 72, 0, 260, 7.4, (
        (1, 3), (1, 4), (2, 4), (3, 7), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 10), (10, 11), (11, 12),
        (11, 13), (11, 15), (12, 14), (13, 14),
    )),
    (10, 96, 0, 145, 8.3, (
        (1, 4), (2, 5), (2, 6), (3, 5), (3, 6), (4, 5), (4, 6), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9), (8, 10),
        (9, 10),
    )),
    (10, 1100, 0, 616, 9.4, ((1, 2), (2, 3), (2, 4), (4, 9), (5, 6), (6, 8), (8, 9), (9, 10))),
    (18, 3003, 0, 253, 8.2, (
        (1, 2), (2, 4), (3, 6), (4, 5), (4, 6), (5, 8), (5, 9), (6, 7), (7, 8), (7, 9), (8, 11), (9, 10), (9, 11),
        (10, 13), (10, 15), (11, 12), (11, 13), (11, 15), (12, 14), (12, 16), (13, 17), (14, 17), (15, 16),
        (15, 17), (16, 18), (17, 18),
    )),
    (16, 33264, 0, 97, 4.9, (
        (1, 5), (1, 6), (2, 3), (2, 4), (3, 6), (3, 7), (4, 7), (5, 7), (6, 8), (7, 9), (7, 10), (7, 11), (8, 9),
        (8, 10), (8, 11), (9, 12), (9, 14), (9, 15), (10, 12), (10, 13), (10, 14), (11, 14), (13, 15), (13, 16),
        (14, 16),
    )),
)


def reference_specs(seed: int = 0, submissions_per_problem: int | None = 30) -> list[CorpusSpec]:
    """Corpus recipes for the ten reference shapes.

    ``submissions_per_problem=None`` uses each shape's reference submission count.
    """
    specs = []
    for q, (length, _, n_distractors, n_subs, mean_size, edges) in enumerate(REFERENCE_SHAPES, start=1):
        specs.append(
            CorpusSpec(
                problem_id=f"q{q:02d}",
                n_nodes=length,
                n_distractors=n_distractors,
                n_submissions=n_subs if submissions_per_problem is None else submissions_per_problem,
                edges=edges,
                mean_submission_size=mean_size,
                max_mutations=2,
                seed=seed * 1000 + q,
            )
        )
    return specs


def run_benchmark(
    corpus: Sequence[SyntheticProblem],
    repetitions: int = DEFAULT_REPETITIONS,
    cap: int = DEFAULT_CAP,
) -> tuple[list[BenchRecord], dict[str, dict[str, list[TimingRow]]]]:
    """Time both graders on every problem, cross-checking d* as it goes."""
    if not corpus:
        raise NoData("empty corpus")
    records = []
    all_timings = {}
    for item in corpus:
        subs = item.submissions()
        timings = {alg: time_grader(item.problem, subs, alg, repetitions, cap) for alg in ALGORITHMS}
        cross_check(timings)
        records.append(summarize(timings, item.problem, subs, item.problem_id))
        all_timings[item.problem_id] = timings
    return records, all_timings
