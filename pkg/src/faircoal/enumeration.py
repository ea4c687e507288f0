"""Exhaustive generators used as oracles: all small graphs and all cubic graphs."""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import combinations

from .graph import Graph, invariant_key, is_isomorphic


class IsoClassifier:
    """Collect graphs, keeping one representative per isomorphism class."""

    def __init__(self) -> None:
        self._buckets: dict[tuple, list[Graph]] = defaultdict(list)
        self.graphs: list[Graph] = []

    def add(self, g: Graph) -> bool:
        bucket = self._buckets[invariant_key(g)]
        if any(is_isomorphic(g, h) for h in bucket):
            return False
        bucket.append(g)
        self.graphs.append(g)
        return True


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """One representative of every isomorphism class of simple graphs of order ``n``.

    Built by adding a vertex with every possible neighbourhood to each graph on
    ``n - 1`` vertices; every graph arises this way by deleting its last vertex.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (Graph(1, (0,)),)
    seen = IsoClassifier()
    for base in all_graphs(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = list(base.adj) + [nbrs]
            for u in range(n - 1):
                if nbrs >> u & 1:
                    rows[u] |= 1 << (n - 1)
            seen.add(Graph(n, tuple(rows)))
    return tuple(seen.graphs)


def all_graphs_upto(n: int) -> list[Graph]:
    return [g for k in range(1, n + 1) for g in all_graphs(k)]


def _connected_cubic_labelled(n: int):
    """Yield connected cubic graphs on ``n`` vertices in breadth-first labellings.

    Vertices are processed in label order; a processed vertex takes its missing
    neighbours from already discovered vertices or from the next unused labels.
    Every connected cubic graph has such a labelling, so no class is missed.
    """
    rows = [0] * n
    deg = [0] * n

    def rec(v: int, next_label: int):
        if v == n:
            if next_label == n:
                yield Graph(n, tuple(rows))
            return
        if v >= next_label:
            return
        need = 3 - deg[v]
        old = [u for u in range(v + 1, next_label) if deg[u] < 3 and not rows[v] >> u & 1]
        for k_new in range(need + 1):
            if next_label + k_new > n:
                break
            new = list(range(next_label, next_label + k_new))
            for chosen in combinations(old, need - k_new):
                partners = list(chosen) + new
                for u in partners:
                    rows[v] |= 1 << u
                    rows[u] |= 1 << v
                    deg[u] += 1
                deg[v] = 3
                yield from rec(v + 1, next_label + k_new)
                for u in partners:
                    rows[v] &= ~(1 << u)
                    rows[u] &= ~(1 << v)
                    deg[u] -= 1
                deg[v] = 3 - need

    # vertex 0 always sits at the root with neighbours 1, 2, 3
    for u in (1, 2, 3):
        rows[0] |= 1 << u
        rows[u] |= 1
        deg[u] = 1
    deg[0] = 3
    yield from rec(1, 4)


@lru_cache(maxsize=None)
def connected_cubic_graphs(n: int) -> tuple[Graph, ...]:
    if n < 4 or n % 2:
        return ()
    seen = IsoClassifier()
    for g in _connected_cubic_labelled(n):
        seen.add(g)
    return tuple(seen.graphs)


def _even_partitions(n: int, largest: int):
    """Partitions of ``n`` into even parts >= 4, parts non-increasing and <= ``largest``."""
    if n == 0:
        yield []
        return
    for part in range(min(n, largest), 3, -1):
        if part % 2:
            continue
        for rest in _even_partitions(n - part, part):
            yield [part] + rest


@lru_cache(maxsize=None)
def cubic_graphs(n: int) -> tuple[Graph, ...]:
    """All cubic graphs of order ``n`` up to isomorphism, disconnected ones included.

    Connected graphs come first; then disjoint unions of connected ones, taken as
    multisets so each union appears once.
    """
    out = list(connected_cubic_graphs(n))
    for parts in _even_partitions(n, n - 4):
        if len(parts) < 2:
            continue
        out.extend(_unions(parts))
    return tuple(out)


def _unions(parts: list[int]) -> list[Graph]:
    # Choose components as non-decreasing index sequences within equal part sizes.
    results: list[Graph] = []

    def rec(i: int, prev: tuple[int, int], acc: Graph | None):
        if i == len(parts):
            results.append(acc)
            return
        comps = connected_cubic_graphs(parts[i])
        start = prev[1] if prev[0] == parts[i] else 0
        for j in range(start, len(comps)):
            nxt = comps[j] if acc is None else acc.disjoint_union(comps[j])
            rec(i + 1, (parts[i], j), nxt)

    rec(0, (0, 0), None)
    return results
