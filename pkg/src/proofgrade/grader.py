"""The two graders and the feedback they produce.

``grade_baseline`` scores a submission against every topological ordering of the
dependency graph. ``grade_mvc`` never enumerates orderings: it finds the pairs of
submitted blocks that appear in an order the graph forbids, deletes a minimum
vertex cover of those pairs plus every distractor, and reinserts what is missing.
Both return the same ``d_star``; only ``grade_mvc`` returns an edit script.
"""

from __future__ import annotations

from collections.abc import Collection
from dataclasses import dataclass

from . import kernels
from .core import GradeReport, ProofBlocksProblem, Submission, score
from .dag import DEFAULT_CAP, Digraph, minimum_vertex_cover, topological_order
from .editdist import EditOp, EditScript
from .errors import CapExceeded, NotACover, SubmissionTooTangled

MAX_PROBLEMATIC_NODES = 25


@dataclass(frozen=True)
class ProblematicGraph:
    """Pairs ``(later, earlier)`` of submitted blocks where ``later`` must precede ``earlier``."""

    graph: Digraph

    @property
    def nodes(self) -> frozenset[str]:
        return self.graph.nodes

    @property
    def edges(self) -> frozenset[tuple[str, str]]:
        return self.graph.edges

    def __bool__(self) -> bool:
        return bool(self.graph.edges)


def build_problematic_graph(s: Submission, p: ProofBlocksProblem) -> ProblematicGraph:
    reach = p.reachability
    seq = s.sequence
    edges = [(seq[i], seq[j]) for i in range(len(seq)) for j in range(i) if reach.exists_path(seq[i], seq[j])]
    nodes = {x for e in edges for x in e}
    return ProblematicGraph(Digraph.from_edges(nodes, edges))


def grade_baseline(s: Submission, p: ProofBlocksProblem, cap: int = DEFAULT_CAP) -> GradeReport:
    """Exhaustive oracle: best LCS over all topological orderings of the graph."""
    g = p.graph
    index = g.index
    encoded = [index.get(b, -1) for b in s.sequence]
    best, count = kernels.best_lcs_over_extensions(g.predecessor_masks, encoded, cap)
    if count > cap:
        raise CapExceeded(cap)
    deletions = len(s) - best
    insertions = len(g) - best
    d_star = deletions + insertions
    return GradeReport(d_star, deletions, insertions, score(d_star, len(g)))


def construct_edit_script(s: Submission, p: ProofBlocksProblem, mvc: Collection[str]) -> EditScript:
    """Delete ``mvc`` and distractors, then insert missing blocks to reach a solution.

    The target solution is the smallest-id-first topological ordering of the
    dependency graph extended with chain edges through the retained blocks, so
    the retained blocks keep their relative order.
    """
    mvc = frozenset(mvc)
    if not mvc <= set(s.sequence):
        raise NotACover(f"cover mentions blocks not in the submission: {sorted(mvc - set(s.sequence))}")
    uncovered = [e for e in build_problematic_graph(s, p).edges if e[0] not in mvc and e[1] not in mvc]
    if uncovered:
        raise NotACover(f"problematic pairs left uncovered: {sorted(uncovered)}")

    ops = []
    for i in reversed(range(len(s))):
        block = s.sequence[i]
        if block in mvc or block not in p.solution_nodes:
            ops.append(EditOp.delete(block, i))
    removed = {op.block for op in ops}
    retained = [b for b in s.sequence if b not in removed]

    chain = zip(retained, retained[1:])
    target = topological_order(Digraph.from_edges(p.solution_nodes, [*p.edges, *chain]))
    kept = set(retained)
    ops.extend(EditOp.insert(b, k) for k, b in enumerate(target) if b not in kept)
    return EditScript(tuple(ops))


def grade_mvc(s: Submission, p: ProofBlocksProblem, *, feedback: bool = True) -> GradeReport:
    pg = build_problematic_graph(s, p)
    if len(pg.nodes) > MAX_PROBLEMATIC_NODES:
        raise SubmissionTooTangled(
            f"problematic graph has {len(pg.nodes)} nodes (limit {MAX_PROBLEMATIC_NODES})"
        )
    cover = minimum_vertex_cover(pg.graph)
    num_distractors = sum(1 for b in s.sequence if b not in p.solution_nodes)
    deletions = num_distractors + len(cover)
    insertions = len(p) - (len(s) - deletions)
    d_star = deletions + insertions
    script = None
    if feedback:
        script = construct_edit_script(s, p, cover)
        assert len(script) == d_star
    return GradeReport(d_star, deletions, insertions, score(d_star, len(p)), script)


def first_unsupported_line(s: Submission, p: ProofBlocksProblem) -> int | None:
    """Index of the first distractor or block placed before one of its direct prerequisites."""
    seen: set[str] = set()
    for i, block in enumerate(s.sequence):
        if block not in p.solution_nodes or not p.predecessors[block] <= seen:
            return i
        seen.add(block)
    return None
