"""Directed-graph algorithms used by the graders.

Node ids are strings. Whenever an algorithm needs a canonical order it uses the
ids' natural ordering (code point order, identical to byte order for UTF-8), and
the integer kernels index nodes by their rank in that order.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import cached_property

from . import kernels
from ._pykernels import iter_extensions
from .errors import CapExceeded, TooLarge

DEFAULT_CAP = 10**6
MAX_COUNT_NODES = 24


@dataclass(frozen=True)
class Digraph:
    nodes: frozenset[str]
    adjacency: Mapping[str, frozenset[str]]

    def __post_init__(self):
        for u, succs in self.adjacency.items():
            if u not in self.nodes or not succs <= self.nodes:
                raise ValueError(f"adjacency of {u!r} mentions a node outside the graph")

    @classmethod
    def from_edges(cls, nodes: Iterable[str], edges: Iterable[tuple[str, str]]) -> Digraph:
        nodes = frozenset(nodes)
        adj: dict[str, set[str]] = {v: set() for v in nodes}
        for u, v in edges:
            adj[u].add(v)
        return cls(nodes, {u: frozenset(s) for u, s in adj.items()})

    @cached_property
    def order(self) -> tuple[str, ...]:
        return tuple(sorted(self.nodes))

    @cached_property
    def index(self) -> Mapping[str, int]:
        return {v: i for i, v in enumerate(self.order)}

    @cached_property
    def edges(self) -> frozenset[tuple[str, str]]:
        return frozenset((u, v) for u, succs in self.adjacency.items() for v in succs)

    def successors(self, u: str) -> frozenset[str]:
        return self.adjacency.get(u, frozenset())

    @cached_property
    def predecessor_masks(self) -> tuple[int, ...]:
        """Bit ``j`` of entry ``i`` is set when ``order[j] -> order[i]`` is an edge."""
        masks = [0] * len(self.order)
        for u, v in self.edges:
            masks[self.index[v]] |= 1 << self.index[u]
        return tuple(masks)

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class Reachability:
    """Reflexive-transitive reachability stored as one bitmask per node."""

    order: tuple[str, ...]
    masks: tuple[int, ...]

    @cached_property
    def index(self) -> Mapping[str, int]:
        return {v: i for i, v in enumerate(self.order)}

    def exists_path(self, u: str, v: str) -> bool:
        iu = self.index.get(u)
        iv = self.index.get(v)
        if iu is None or iv is None:
            return False
        return bool(self.masks[iu] >> iv & 1)

    __call__ = exists_path

    def reachable_from(self, u: str) -> frozenset[str]:
        mask = self.masks[self.index[u]]
        return frozenset(v for i, v in enumerate(self.order) if mask >> i & 1)


def find_cycle(g: Digraph) -> list[str] | None:
    """Return the nodes of one directed cycle, or None if ``g`` is acyclic."""
    WHITE, GREY, BLACK = 0, 1, 2
    colour = dict.fromkeys(g.order, WHITE)
    for root in g.order:
        if colour[root] != WHITE:
            continue
        path = [root]
        stack = [iter(sorted(g.successors(root)))]
        colour[root] = GREY
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                colour[path.pop()] = BLACK
                stack.pop()
            elif colour[nxt] == GREY:
                return path[path.index(nxt):]
            elif colour[nxt] == WHITE:
                colour[nxt] = GREY
                path.append(nxt)
                stack.append(iter(sorted(g.successors(nxt))))
    return None


def topological_order(g: Digraph) -> list[str]:
    """One topological ordering, choosing the smallest ready id at every step."""
    indeg = {v: 0 for v in g.nodes}
    for _, v in g.edges:
        indeg[v] += 1
    ready = [v for v, d in indeg.items() if d == 0]
    heapq.heapify(ready)
    out = []
    while ready:
        u = heapq.heappop(ready)
        out.append(u)
        for v in g.successors(u):
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(ready, v)
    if len(out) != len(g.nodes):
        raise ValueError("graph is not acyclic")
    return out


def transitive_closure(g: Digraph) -> Reachability:
    """Reachability for an acyclic ``g``; every node reaches itself."""
    index = g.index
    masks = [1 << i for i in range(len(g.order))]
    for u in reversed(topological_order(g)):
        i = index[u]
        for v in g.successors(u):
            masks[i] |= masks[index[v]]
    return Reachability(g.order, tuple(masks))


def iter_topological_orderings(g: Digraph) -> Iterator[tuple[str, ...]]:
    """Lazily yield every topological ordering in lexicographic order of ids."""
    order = g.order
    for ext in iter_extensions(g.predecessor_masks):
        yield tuple(order[i] for i in ext)


def all_topological_orderings(g: Digraph, cap: int = DEFAULT_CAP) -> list[tuple[str, ...]]:
    if cap < 1:
        raise ValueError("cap must be positive")
    out = []
    for ordering in iter_topological_orderings(g):
        if len(out) == cap:
            raise CapExceeded(cap)
        out.append(ordering)
    return out


def count_linear_extensions(g: Digraph, limit: int = MAX_COUNT_NODES) -> int:
    """Count topological orderings with a DP over downward-closed node sets."""
    n = len(g.order)
    if n > limit:
        raise TooLarge(f"{n} nodes exceeds the counting limit of {limit}")
    preds = g.predecessor_masks
    layer = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for placed, ways in layer.items():
            for v in range(n):
                if not placed >> v & 1 and preds[v] & ~placed == 0:
                    key = placed | 1 << v
                    nxt[key] = nxt.get(key, 0) + ways
        layer = nxt
    return layer[(1 << n) - 1]


def minimum_vertex_cover(g: Digraph) -> frozenset[str]:
    """Exact minimum vertex cover of the underlying undirected graph.

    Subsets are tried by increasing size and, within a size, in lexicographic
    order of ids, so the lexicographically smallest minimum cover is returned.
    """
    edges = sorted(g.edges)
    if not edges:
        return frozenset()
    order = sorted({x for e in edges for x in e})
    index = {v: i for i, v in enumerate(order)}
    mask = kernels.mvc_mask(len(order), [(index[u], index[v]) for u, v in edges])
    return frozenset(v for i, v in enumerate(order) if mask >> i & 1)
