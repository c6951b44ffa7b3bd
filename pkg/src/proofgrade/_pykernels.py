"""Pure-Python integer kernels; the reference and fallback for ``_ckernels``.

Nodes are ``0..n-1``. Predecessor sets are bitmasks. Submission entries that are
not graph nodes (distractors) are encoded as ``-1`` and match nothing.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from itertools import combinations


def lcs_length(a: Sequence[int], b: Sequence[int]) -> int:
    row = [0] * (len(b) + 1)
    for x in a:
        prev = 0
        for j, y in enumerate(b):
            cur = row[j + 1]
            if x == y:
                row[j + 1] = prev + 1
            elif row[j] > cur:
                row[j + 1] = row[j]
            prev = cur
    return row[-1]


def iter_extensions(pred_masks: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield every linear extension, lexicographically by node index."""
    n = len(pred_masks)
    full = (1 << n) - 1
    order: list[int] = []

    def extend(placed: int):
        if placed == full:
            yield tuple(order)
            return
        for v in range(n):
            if not placed >> v & 1 and pred_masks[v] & ~placed == 0:
                order.append(v)
                yield from extend(placed | 1 << v)
                order.pop()

    return extend(0)


def best_lcs_over_extensions(pred_masks: Sequence[int], seq: Sequence[int], cap: int) -> tuple[int, int]:
    """Largest LCS between ``seq`` and any linear extension.

    Returns ``(best, count)``. When more than ``cap`` extensions exist the scan
    stops and ``count`` is ``cap + 1``.
    """
    best = -1
    count = 0
    for ext in iter_extensions(pred_masks):
        count += 1
        if count > cap:
            return best, count
        length = lcs_length(seq, ext)
        if length > best:
            best = length
    return best, count


def mvc_mask(n: int, edges: Sequence[tuple[int, int]]) -> int:
    """Lexicographically first minimum vertex cover, as a bitmask."""
    edge_masks = [1 << u | 1 << v for u, v in edges]
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if all(mask & e for e in edge_masks):
                return mask
    raise AssertionError("the full node set always covers")
