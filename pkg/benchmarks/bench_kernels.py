"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--csv out.csv]

Each workload is timed with ``timeit`` under both backends (best of several
repeats) and the ratio is reported. Workloads mirror what the graders do:
raw LCS, the baseline grader on problems with growing solution counts, and the
vertex-cover grader on a tangled submission.
"""

import argparse
import csv
import sys
import timeit

from proofgrade import grade_baseline, grade_mvc, kernels, validate_problem, validate_submission
from proofgrade.bench import CorpusSpec, chains, generate_synthetic_corpus


def format_dt(dt):
    if dt >= 1e-3:
        return "%.2f ms" % (dt * 1e3)
    return "%.1f us" % (dt * 1e6)


def bench(fn, repeat=5):
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat=repeat, number=number)) / number


def workloads():
    a = list(range(40))
    b = list(range(39, -1, -1))
    yield "lcs 40x40", lambda: kernels.lcs_length(a, b)

    for shape in [(9,), (5, 4), (4, 4, 4), (8, 8)]:
        item = generate_synthetic_corpus(CorpusSpec("k", sum(shape), edges=chains(*shape), n_submissions=1, seed=1))
        (_, s), = item.submissions()
        p = item.problem
        yield f"baseline chains{shape}", lambda s=s, p=p: grade_baseline(s, p)

    nodes = [f"{i:02d}" for i in range(14)]
    p = validate_problem({"blocks": nodes, "solution_nodes": nodes, "edges": list(zip(nodes, nodes[1:]))})
    tangled = validate_submission(p, nodes[7:] + nodes[:7])
    yield "mvc 7+7 crossed chain", lambda: grade_mvc(tangled, p)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--csv", help="also write results to this file")
    args = parser.parse_args(argv)

    if "cython" not in kernels.available_backends():
        print("compiled kernels are not built; nothing to compare", file=sys.stderr)
        return 1

    rows = []
    for name, fn in workloads():
        times = {}
        for backend in ("python", "cython"):
            kernels.set_backend(backend)
            times[backend] = bench(fn)
        ratio = times["python"] / times["cython"]
        rows.append((name, times["python"], times["cython"], ratio))
        print(f"{name:<28} python {format_dt(times['python']):>11}  cython {format_dt(times['cython']):>11}  {ratio:6.1f}x")

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["workload", "python_s", "cython_s", "ratio"])
            writer.writerows(rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
