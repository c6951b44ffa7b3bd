"""Problem and submission types, validation, and the partial-credit formula."""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING

from .dag import Digraph, Reachability, find_cycle, transitive_closure
from .errors import (
    CycleDetected,
    DuplicateBlockId,
    DuplicateBlockInSubmission,
    EdgeEndpointNotInSolutionNodes,
    EmptySolution,
    SolutionNodeNotABlock,
    UnknownBlockId,
    ValidationError,
)

if TYPE_CHECKING:
    from .editdist import EditScript

BlockId = str


def _as_block_id(value, what: str) -> BlockId:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ValidationError(f"{what} must be a string id, got {value!r}")
    value = str(value)
    if not value:
        raise ValidationError(f"{what} must be a non-empty id")
    return value


@dataclass(frozen=True)
class ProofBlocksProblem:
    """An instructor-authored problem: blocks plus a dependency DAG over a subset of them.

    Build instances with :func:`validate_problem`; the constructor does not check
    invariants. ``blocks`` keeps the authoring order, which only matters for
    serialization.
    """

    blocks: tuple[BlockId, ...]
    solution_nodes: frozenset[BlockId]
    edges: frozenset[tuple[BlockId, BlockId]]
    text: Mapping[BlockId, str] = field(default_factory=dict, compare=False)

    @cached_property
    def distractors(self) -> frozenset[BlockId]:
        return frozenset(self.blocks) - self.solution_nodes

    @cached_property
    def block_set(self) -> frozenset[BlockId]:
        return frozenset(self.blocks)

    @cached_property
    def graph(self) -> Digraph:
        return Digraph.from_edges(self.solution_nodes, self.edges)

    @cached_property
    def reachability(self) -> Reachability:
        return transitive_closure(self.graph)

    @cached_property
    def predecessors(self) -> Mapping[BlockId, frozenset[BlockId]]:
        preds: dict[BlockId, set[BlockId]] = {v: set() for v in self.solution_nodes}
        for u, v in self.edges:
            preds[v].add(u)
        return {v: frozenset(p) for v, p in preds.items()}

    def __len__(self) -> int:
        return len(self.solution_nodes)


@dataclass(frozen=True)
class Submission:
    sequence: tuple[BlockId, ...]

    def __len__(self) -> int:
        return len(self.sequence)

    def __iter__(self):
        return iter(self.sequence)


@dataclass(frozen=True)
class GradeReport:
    d_star: int
    deletions: int
    insertions: int
    score_percent: Fraction
    edit_script: EditScript | None = None

    @property
    def score_text(self) -> str:
        return format_score(self.score_percent)


def _block_entries(raw_blocks) -> tuple[list[BlockId], dict[BlockId, str]]:
    ids: list[BlockId] = []
    text: dict[BlockId, str] = {}
    seen: set[BlockId] = set()
    for i, entry in enumerate(raw_blocks):
        if isinstance(entry, Mapping):
            if "id" not in entry:
                raise ValidationError(f"blocks[{i}] has no 'id'")
            block = _as_block_id(entry["id"], f"blocks[{i}].id")
            if entry.get("text") is not None:
                text[block] = str(entry["text"])
        else:
            block = _as_block_id(entry, f"blocks[{i}]")
        if block in seen:
            raise DuplicateBlockId(f"block id {block!r} appears more than once")
        seen.add(block)
        ids.append(block)
    return ids, text


def validate_problem(raw: Mapping) -> ProofBlocksProblem:
    """Validate a raw ``{"blocks", "solution_nodes", "edges"}`` mapping.

    Blocks may be plain ids or ``{"id": ..., "text": ...}`` objects. Integer ids
    are converted to strings. The reachability closure is computed eagerly so
    the returned problem can be shared read-only between graders.
    """
    try:
        raw_blocks = raw["blocks"]
        raw_nodes = raw["solution_nodes"]
        raw_edges = raw.get("edges", ())
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"problem is missing required key {exc}") from None

    blocks, text = _block_entries(raw_blocks)
    block_set = set(blocks)

    nodes: set[BlockId] = set()
    for i, node in enumerate(raw_nodes):
        node = _as_block_id(node, f"solution_nodes[{i}]")
        if node in nodes:
            raise DuplicateBlockId(f"solution node {node!r} listed more than once")
        if node not in block_set:
            raise SolutionNodeNotABlock(f"solution node {node!r} is not a block")
        nodes.add(node)
    if not nodes:
        raise EmptySolution("a problem needs at least one solution node")

    edges: set[tuple[BlockId, BlockId]] = set()
    for i, edge in enumerate(raw_edges):
        if isinstance(edge, (str, bytes)) or len(edge) != 2:
            raise ValidationError(f"edges[{i}] must be a [from, to] pair")
        u = _as_block_id(edge[0], f"edges[{i}][0]")
        v = _as_block_id(edge[1], f"edges[{i}][1]")
        for end in (u, v):
            if end not in nodes:
                raise EdgeEndpointNotInSolutionNodes(f"edge ({u!r}, {v!r}): {end!r} is not a solution node")
        edges.add((u, v))

    cycle = find_cycle(Digraph.from_edges(nodes, edges))
    if cycle is not None:
        raise CycleDetected(cycle)

    problem = ProofBlocksProblem(tuple(blocks), frozenset(nodes), frozenset(edges), text)
    # derived data is built here so graders only ever read a shared problem
    problem.reachability
    problem.predecessors
    problem.distractors
    problem.block_set
    problem.graph.predecessor_masks
    return problem


def validate_submission(problem: ProofBlocksProblem, raw: Iterable) -> Submission:
    sequence: list[BlockId] = []
    seen: set[BlockId] = set()
    for i, item in enumerate(raw):
        block = _as_block_id(item, f"submission[{i}]")
        if block in seen:
            raise DuplicateBlockInSubmission(f"block {block!r} appears more than once")
        if block not in problem.block_set:
            raise UnknownBlockId(f"block {block!r} is not part of the problem")
        seen.add(block)
        sequence.append(block)
    return Submission(tuple(sequence))


def score(d_star: int, solution_len: int) -> Fraction:
    """Partial credit in percent, exact: ``100 * max(0, n - d) / n``."""
    if solution_len < 1:
        raise ValueError("solution_len must be at least 1")
    if d_star < 0:
        raise ValueError("d_star must be non-negative")
    return Fraction(100 * max(0, solution_len - d_star), solution_len)


def format_score(value: Fraction) -> str:
    """Render a percentage with one decimal, rounding halves up."""
    tenths = math.floor(Fraction(value) * 10 + Fraction(1, 2))
    return f"{tenths // 10}.{tenths % 10}"


def is_topological_ordering(problem: ProofBlocksProblem, sequence: Sequence[BlockId]) -> bool:
    if len(sequence) != len(problem.solution_nodes) or set(sequence) != problem.solution_nodes:
        return False
    position = {b: i for i, b in enumerate(sequence)}
    return all(position[u] < position[v] for u, v in problem.edges)
