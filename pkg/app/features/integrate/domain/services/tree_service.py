"""Labeled tree enumeration by Pruefer decoding, smallest leaf first."""

import heapq
from functools import lru_cache
from itertools import product
from typing import List, Sequence, Tuple

Edge = Tuple[int, int]


def decode_pruefer(sequence: Sequence[int], size: int) -> Tuple[Edge, ...]:
    """Decode a Pruefer sequence over {1..size} into edges (i, j) with i < j.

    Each step joins the smallest remaining leaf to the next sequence label.
    """
    degree = [1] * (size + 1)
    for label in sequence:
        degree[label] += 1
    leaves = [label for label in range(1, size + 1) if degree[label] == 1]
    heapq.heapify(leaves)

    edges = []
    for label in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, label), max(leaf, label)))
        degree[label] -= 1
        if degree[label] == 1:
            heapq.heappush(leaves, label)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return tuple(sorted(edges))


class TreeService:
    """Domain service enumerating trees for the tree-sum formula."""

    def labeled_trees(self, l: int) -> List[Tuple[Edge, ...]]:
        """All labeled trees on {1..l}, edges oriented from smaller to larger label."""
        return list(_trees(l))


@lru_cache(maxsize=None)
def _trees(l: int) -> Tuple[Tuple[Edge, ...], ...]:
    if l < 1:
        return ()
    if l == 1:
        return ((),)
    if l == 2:
        return (((1, 2),),)
    return tuple(decode_pruefer(seq, l) for seq in product(range(1, l + 1), repeat=l - 2))
