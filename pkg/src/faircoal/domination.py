"""Fair dominating sets: recognition, minimum sizes, and fair domatic partitions.

A set ``D`` is a k-fair dominating set when every vertex outside ``D`` has
exactly ``k >= 1`` neighbours in ``D``. The whole vertex set counts as fair
dominating (there is no outside vertex to check).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .graph import Graph, GraphError, bits, mask_of, popcount

VACUOUS = -1  # fd_code value for D = V


class FdKind(enum.Enum):
    NOT_DOMINATING = "not_dominating"
    NOT_FAIR = "not_fair"
    FAIR = "fair"
    VACUOUS = "vacuous"


@dataclass(frozen=True)
class FdStatus:
    kind: FdKind
    k: int | None = None
    witnesses: tuple[int, ...] = ()

    @property
    def is_fd(self) -> bool:
        return self.kind in (FdKind.FAIR, FdKind.VACUOUS)

    def __str__(self) -> str:
        if self.kind is FdKind.FAIR:
            return f"Fair({self.k})"
        if self.kind is FdKind.VACUOUS:
            return "FairVacuous"
        if self.kind is FdKind.NOT_DOMINATING:
            return f"NotDominating(v={self.witnesses[0]})"
        return f"NotFair(v={self.witnesses[0]}, w={self.witnesses[1]})"


@dataclass(frozen=True)
class FairDomaticResult:
    value: int
    witness: tuple[int, ...] = field(default=())


def domination_count(g: Graph, d: int, v: int) -> int:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for order {g.n}")
    return popcount(g.adj[v] & d)


def fd_code(g: Graph, d: int) -> int:
    """0 if ``d`` is not fair dominating, else its constant ``k``, or ``VACUOUS``."""
    outside = g.vertex_mask & ~d
    if not outside:
        return VACUOUS
    k = -1
    adj = g.adj
    while outside:
        low = outside & -outside
        c = (adj[low.bit_length() - 1] & d).bit_count()
        if c == 0 or (k != -1 and c != k):
            return 0
        k = c
        outside ^= low
    return k


def fd_status(g: Graph, d: int) -> FdStatus:
    outside = [v for v in range(g.n) if not d >> v & 1]
    if not outside:
        return FdStatus(FdKind.VACUOUS)
    counts = [(v, popcount(g.adj[v] & d)) for v in outside]
    for v, c in counts:
        if c == 0:
            return FdStatus(FdKind.NOT_DOMINATING, witnesses=(v,))
    v0, k = counts[0]
    for v, c in counts[1:]:
        if c != k:
            return FdStatus(FdKind.NOT_FAIR, witnesses=(v0, v))
    return FdStatus(FdKind.FAIR, k=k)


def is_fd(g: Graph, d: int) -> bool:
    return fd_code(g, d) != 0


class FdTable:
    """Memoised ``fd_code`` lookups for one graph.

    For small orders every subset is tabulated up front; otherwise codes are
    computed on first use.
    """

    DENSE_LIMIT = 16

    def __init__(self, g: Graph) -> None:
        self.g = g
        self._dense: list[int] | None = None
        self._sparse: dict[int, int] = {}
        if g.n <= self.DENSE_LIMIT:
            self._dense = [fd_code(g, m) for m in range(1 << g.n)]

    def __call__(self, d: int) -> int:
        if self._dense is not None:
            return self._dense[d]
        code = self._sparse.get(d)
        if code is None:
            code = self._sparse[d] = fd_code(self.g, d)
        return code

    @property
    def fd_sets(self) -> list[int]:
        """Every fair dominating set, ascending by mask value."""
        if self._dense is not None:
            return [m for m, c in enumerate(self._dense) if c]
        return [m for m in range(1, 1 << self.g.n) if self(m)]


@lru_cache(maxsize=256)
def fd_table(g: Graph) -> FdTable:
    return FdTable(g)


def _subsets_by_size(pool: list[int]):
    for r in range(1, len(pool) + 1):
        for combo in combinations(pool, r):
            yield mask_of(combo)


def gamma(g: Graph) -> int:
    """Domination number, by ascending-cardinality search."""
    closed = [row | 1 << v for v, row in enumerate(g.adj)]
    for d in _subsets_by_size(list(range(g.n))):
        cover = 0
        for v in bits(d):
            cover |= closed[v]
        if cover == g.vertex_mask:
            return popcount(d)
    raise AssertionError("V always dominates")


def min_fd_set(g: Graph) -> int:
    table = fd_table(g)
    for d in _subsets_by_size(list(range(g.n))):
        if table(d):
            return d
    raise AssertionError("V is always fair dominating")


def gamma_f(g: Graph) -> int:
    """Fair domination number. Edgeless graphs give ``n`` since only ``V`` qualifies."""
    return popcount(min_fd_set(g))


def fd_i(g: Graph, i: int) -> int:
    """Minimum size of an ``i``-fair dominating set; ``V`` counts for every ``i``."""
    if i < 1:
        raise ValueError("i must be >= 1")
    table = fd_table(g)
    for d in _subsets_by_size(list(range(g.n))):
        code = table(d)
        if code == i or code == VACUOUS:
            return popcount(d)
    raise AssertionError("unreachable")


def min_fd_subset(g: Graph, s: int) -> int | None:
    """A minimum-cardinality fair dominating set inside ``s``, or ``None``.

    Minimum cardinality inside ``s`` implies no proper subset is fair
    dominating, which single-vertex deletion checks would not guarantee.
    """
    if not s:
        raise ValueError("s must be nonempty")
    table = fd_table(g)
    for d in _subsets_by_size(list(bits(s))):
        if table(d):
            return d
    return None


def fair_domatic_number(g: Graph) -> FairDomaticResult:
    """Maximum partition of ``V`` into fair dominating sets.

    Exact search: the class holding the lowest uncovered vertex is chosen among
    the fair dominating subsets of what remains, with memoisation on the
    uncovered set and a cardinality bound from ``gamma_f``.
    """
    table = fd_table(g)
    by_low: dict[int, list[int]] = {}
    for s in sorted(table.fd_sets, key=lambda m: (popcount(m), sorted(bits(m)))):
        by_low.setdefault((s & -s).bit_length() - 1, []).append(s)
    min_size = popcount(min_fd_set(g))
    memo: dict[int, tuple[int, tuple[int, ...]] | None] = {0: (0, ())}

    def best(rem: int):
        if rem in memo:
            return memo[rem]
        low = (rem & -rem).bit_length() - 1
        result = None
        cap = popcount(rem) // min_size
        for s in by_low.get(low, ()):
            if s & ~rem:
                continue
            sub = best(rem & ~s)
            if sub is not None and (result is None or sub[0] + 1 > result[0]):
                result = (sub[0] + 1, (s,) + sub[1])
                if result[0] == cap:
                    break
        memo[rem] = result
        return result

    value, witness = best(g.vertex_mask)
    return FairDomaticResult(value, witness)
