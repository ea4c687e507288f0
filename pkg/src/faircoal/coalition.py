"""Fair coalitions, fc-partition certificates, and exact fair coalition numbers.

An fc-partition is a vertex partition in which every class is either a
singleton fair dominating set, or a non-fair-dominating set that has a partner
class (also non-fair-dominating) such that their union is fair dominating.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence, Union

import numpy as np

from .domination import (
    VACUOUS,
    FdTable,
    fair_domatic_number,
    fd_status,
    fd_table,
    gamma_f,
    min_fd_subset,
)
from .graph import CapExceeded, Graph, bits, mask_of, popcount

BRUTEFORCE_MAX_ORDER = 11
SOLVE_MAX_ORDER = 24

Partition = tuple[int, ...]


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class Justification:
    """Why one class is allowed. ``partner is None`` means singleton FD."""

    cls: int
    partner: int | None = None
    k: int | None = None  # None with a partner means the union is V

    def to_json(self) -> dict:
        if self.partner is None:
            return {"class": self.cls, "justification": "singleton_fd"}
        return {"class": self.cls, "partner": self.partner,
                "k": "vacuous" if self.k is None else self.k}


@dataclass(frozen=True)
class FcCertificate:
    entries: tuple[Justification, ...]

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self.entries]


@dataclass(frozen=True)
class Violation:
    reason: str
    cls: int | None = None

    def to_json(self) -> dict:
        return {"violation": self.reason, "class": self.cls}


@dataclass
class SolveReport:
    value: int
    witness: Partition
    certificate: FcCertificate | None
    upper: int
    lower: int
    nodes: int = 0
    elapsed: float = 0.0
    method: str = ""

    def to_json(self) -> dict:
        return {
            "cf": self.value,
            "witness": partition_to_lists(self.witness),
            "certificate": self.certificate.to_json() if self.certificate else None,
            "upper_bound": self.upper,
            "lower_bound": self.lower,
            "nodes": self.nodes,
            "elapsed": round(self.elapsed, 6),
            "method": self.method,
        }


def partition_to_lists(p: Sequence[int]) -> list[list[int]]:
    return [list(bits(c)) for c in p]


def partition_from_lists(classes: Sequence[Sequence[int]]) -> Partition:
    return tuple(mask_of(c) for c in classes)


def parse_partition(text: str) -> list[list[int]]:
    """One class per line, whitespace-separated vertex ids; ``#`` starts a comment."""
    classes = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            classes.append([int(tok) for tok in line.split()])
        except ValueError:
            raise ValueError(f"line {lineno}: non-numeric vertex id") from None
    return classes


def format_partition(p: Sequence[int]) -> str:
    return "".join(" ".join(map(str, c)) + "\n" for c in partition_to_lists(p))


# ---------------------------------------------------------------------------
# recognition


def is_fair_coalition(g: Graph, a: int, b: int) -> tuple[bool, str]:
    if not a or not b:
        raise ValueError("coalition sides must be nonempty")
    if a & b:
        raise ValueError("coalition sides must be disjoint")
    sa = fd_status(g, a)
    if sa.is_fd:
        return False, f"first set is already fair dominating ({sa})"
    sb = fd_status(g, b)
    if sb.is_fd:
        return False, f"second set is already fair dominating ({sb})"
    su = fd_status(g, a | b)
    if not su.is_fd:
        return False, f"union is not fair dominating ({su})"
    return True, f"union is {su}"


def _structure_violation(g: Graph, classes: Sequence[int]) -> Violation | None:
    seen = 0
    for i, c in enumerate(classes):
        if not c:
            return Violation("empty class", i)
        if c & ~g.vertex_mask:
            return Violation("class contains a vertex outside the graph", i)
        if c & seen:
            return Violation("class overlaps an earlier class", i)
        seen |= c
    if seen != g.vertex_mask:
        missing = list(bits(g.vertex_mask & ~seen))
        return Violation(f"classes do not cover vertices {missing}")
    return None


def verify_fc_partition(g: Graph, p: Sequence, table: FdTable | None = None
                        ) -> Union[FcCertificate, Violation]:
    """Check ``p`` (masks or vertex lists) and justify every class.

    Structural problems are reported as a :class:`Violation`, not raised. The
    certificate records the lowest-index valid partner of each class.
    """
    for i, c in enumerate(p):
        if not isinstance(c, int) and any(not 0 <= v < g.n for v in c):
            return Violation("vertex id out of range", i)
        if not isinstance(c, int) and len(set(c)) != len(c):
            return Violation("vertex repeated within a class", i)
    classes = [c if isinstance(c, int) else mask_of(c) for c in p]
    bad = _structure_violation(g, classes)
    if bad is not None:
        return bad
    table = table or fd_table(g)
    codes = [table(c) for c in classes]
    entries = []
    for i, c in enumerate(classes):
        if codes[i]:
            if popcount(c) == 1:
                entries.append(Justification(i))
                continue
            return Violation("class is fair dominating but not a singleton", i)
        for j, other in enumerate(classes):
            if j == i or codes[j]:
                continue
            u = table(c | other)
            if u:
                entries.append(Justification(i, j, None if u == VACUOUS else u))
                break
        else:
            return Violation("non-fair-dominating class has no partner", i)
    return FcCertificate(tuple(entries))


def _is_fc(classes: Sequence[int], table: FdTable) -> bool:
    codes = [table(c) for c in classes]
    for i, c in enumerate(classes):
        if codes[i]:
            if c & (c - 1):
                return False
            continue
        for j, other in enumerate(classes):
            if j != i and not codes[j] and table(c | other):
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# bounds


def upper_bound(g: Graph) -> int:
    """``n - gamma_f + 2``, valid for every graph."""
    return g.n - gamma_f(g) + 2


def connected_upper_bound_claim(g: Graph) -> int:
    """``n - gamma_f``: the tighter bound claimed for connected graphs of order >= 3.

    It does not hold in general (the path on 4 vertices has fair coalition
    number 4 but this gives 2); only used for discrepancy reports.
    """
    return g.n - gamma_f(g)


def _split_first(s: int) -> tuple[int, int]:
    low = s & -s
    return low, s ^ low


class ConstructionError(RuntimeError):
    """The domatic-partition construction found no valid fc-partition."""


@dataclass(frozen=True)
class DomaticConstruction:
    bound: int
    witness: Partition
    d_f: int
    route: str  # "literal", "reordered" or "redistributed"


def lower_bound_from_domatic(g: Graph) -> tuple[int, Partition]:
    """Build an fc-partition of size at least ``2 * d_f`` from a fair domatic partition.

    Requires order >= 3 and no vertex adjacent to all others. See
    :func:`domatic_construction` for the steps and fallbacks.
    """
    c = domatic_construction(g)
    return c.bound, c.witness


def domatic_construction(g: Graph, max_assignments: int = 200_000) -> DomaticConstruction:
    """Split a maximum fair domatic partition into coalition pairs.

    Every class but the last is shrunk to a minimum fair dominating subset (the
    leftovers join the last class) and split into two halves; the last class is
    handled by splitting a minimum fair dominating subset of it and placing its
    remainder. Adding leftovers can stop the last class from being fair
    dominating, so when the literal order fails each class is tried as the last
    one, and after that every placement of the leftover vertices is tried.
    """
    if g.n < 3:
        raise ValueError("construction needs order >= 3")
    if g.full_vertices():
        raise ValueError("construction needs a graph without full vertices")
    table = fd_table(g)
    dom = list(fair_domatic_number(g).witness)
    k = len(dom)

    def valid(p: Partition) -> bool:
        return len(p) >= 2 * k and isinstance(verify_fc_partition(g, p, table), FcCertificate)

    orders = [dom[:i] + dom[i + 1:] + [dom[i]] for i in range(k - 1, -1, -1)]
    for idx, order in enumerate(orders):
        out: list[int] = []
        last = order[-1]
        for s in order[:-1]:
            core = min_fd_subset(g, s)
            last |= s & ~core
            out.extend(_split_first(core))
        core = min_fd_subset(g, last)
        for result in _last_class_options(out, core, last & ~core):
            if valid(result):
                return DomaticConstruction(len(result), result, k,
                                           "literal" if idx == 0 else "reordered")
    for order in orders:
        halves: list[int] = []
        for s in order:
            halves.extend(_split_first(min_fd_subset(g, s)))
        leftover = list(bits(g.vertex_mask & ~sum(halves)))
        if len(halves) ** len(leftover) > max_assignments:
            continue
        for choice in product(range(len(halves)), repeat=len(leftover)):
            classes = list(halves)
            for v, i in zip(leftover, choice):
                classes[i] |= 1 << v
            result = tuple(classes)
            if valid(result):
                return DomaticConstruction(len(result), result, k, "redistributed")
    raise ConstructionError(f"no fc-partition of size {2 * k} found from the domatic partition")


def _last_class_options(out: list[int], core: int, rest: int):
    """Candidate endings, in order: the plain split, the extra class, then merges.

    Merging the remainder into the second half can make that half fair
    dominating, so the other half, other splits of ``core``, and the earlier
    classes are tried as well; the caller keeps the first that verifies.
    """
    a, b = _split_first(core)
    if not rest:
        yield tuple(out) + (a, b)
        return
    yield tuple(out) + (a, b, rest)
    yield tuple(out) + (a, b | rest)
    yield tuple(out) + (a | rest, b)
    members = list(bits(core))
    for r in range(1, len(members)):
        for combo in combinations(members, r):
            x = mask_of(combo)
            yield tuple(out) + (x, (core ^ x) | rest)
    for i in range(len(out)):
        merged = list(out)
        merged[i] |= rest
        yield tuple(merged) + (a, b)


# ---------------------------------------------------------------------------
# exact solvers


def set_partitions(n: int):
    """All set partitions of ``range(n)`` as lists of masks, via restricted growth strings."""
    classes: list[int] = []

    def rec(v: int):
        if v == n:
            yield list(classes)
            return
        bit = 1 << v
        for i in range(len(classes)):
            classes[i] |= bit
            yield from rec(v + 1)
            classes[i] ^= bit
        classes.append(bit)
        yield from rec(v + 1)
        classes.pop()

    yield from rec(0)


def cf_bruteforce(g: Graph) -> SolveReport:
    """Fair coalition number by checking every set partition. Oracle for :func:`cf_solve`."""
    if g.n > BRUTEFORCE_MAX_ORDER:
        raise CapExceeded(f"brute force is limited to order {BRUTEFORCE_MAX_ORDER}")
    start = time.perf_counter()
    table = fd_table(g)
    best: list[int] | None = None
    count = 0
    for p in set_partitions(g.n):
        count += 1
        if (best is None or len(p) > len(best)) and _is_fc(p, table):
            best = p
    elapsed = time.perf_counter() - start
    return _report(g, best, table, count, elapsed, "bruteforce")


def _report(g, best, table, nodes, elapsed, method, lower=0) -> SolveReport:
    ub = upper_bound(g)
    if best is None:
        return SolveReport(0, (), None, ub, lower, nodes, elapsed, method)
    witness = tuple(best)
    cert = verify_fc_partition(g, witness, table)
    assert isinstance(cert, FcCertificate)
    return SolveReport(len(witness), witness, cert, ub, lower, nodes, elapsed, method)


class _ClassSearch:
    """Branch and bound over fc-partitions, one whole class at a time.

    Classes are generated in order of their lowest vertex, and each new class
    must contain the lowest unassigned vertex, which is the restricted growth
    canonical form and removes class-relabelling symmetry. A class is final once
    chosen, so fair domination of a class is known exactly: non-singleton FD
    classes are rejected immediately.

    With ``partner_pruning`` a class without a partner yet must still have one
    available among unassigned vertices, and the number of classes the
    unassigned vertices can still form is bounded (see :meth:`_future`).
    Without it only the count of unassigned vertices and ``upper_bound`` prune.
    """

    def __init__(self, g: Graph, partner_pruning: bool = True, best: int = 0,
                 witness: Sequence[int] = ()) -> None:
        self.g = g
        self.table = fd_table(g)
        self.partner_pruning = partner_pruning
        self.ub = upper_bound(g)
        self.best = best
        self.best_witness: list[int] | None = list(witness) if best else None
        self.nodes = 0
        self._partner_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}
        self._anchor_cache: dict[int, int] = {}
        self._fd_sets: np.ndarray | None = None
        table = self.table
        self._fd_singletons = mask_of(v for v in range(g.n) if table(1 << v))
        self._single_min = []
        for v in range(g.n):
            sizes = self._partners(1 << v)[1]
            self._single_min.append(int(sizes[0]) if len(sizes) else None)

    # candidate partners B of class a, as parallel arrays sorted by |B|
    def _partners(self, a: int) -> tuple[np.ndarray, np.ndarray]:
        cached = self._partner_cache.get(a)
        if cached is None:
            if self._fd_sets is None:
                self._fd_sets = np.array(self.table.fd_sets, dtype=np.int64)
            sets = self._fd_sets[(self._fd_sets & a) == a]
            table = self.table
            rows = sorted((int(b).bit_count(), int(b)) for b in (sets & ~a).tolist()
                          if b and not table(b))
            cached = (np.array([b for _, b in rows], dtype=np.int64),
                      np.array([k for k, _ in rows], dtype=np.int64))
            self._partner_cache[a] = cached
        return cached

    def _min_partner(self, a: int, rem: int) -> int | None:
        masks, sizes = self._partners(a)
        if not len(masks):
            return None
        fits = (masks & ~rem) == 0
        i = int(fits.argmax())
        return int(sizes[i]) if fits[i] else None

    def _anchored(self, a: int) -> int:
        """Vertices v for which {v} would partner the non-FD class ``a``."""
        m = self._anchor_cache.get(a)
        if m is None:
            table = self.table
            m = mask_of(v for v in range(self.g.n)
                        if not a >> v & 1 and not table(1 << v) and table(a | 1 << v))
            self._anchor_cache[a] = m
        return m

    def _future(self, rest: int, ok: int, worst: int) -> int:
        """Upper bound on the number of classes ``rest`` can still be split into.

        ``ok`` marks vertices that may form a singleton class without a new
        partner; ``worst`` is the size of the largest partner some pending class
        still needs. Any other singleton needs a partner of size at least its
        smallest possible partner, which forces one large class.
        """
        r = popcount(rest)
        g1 = popcount(rest & ok)
        if worst >= 2:
            s = min(g1, r - worst)
            bound = s + 1 + (r - s - worst) // 2
        else:
            bound = g1 + (r - g1) // 2
        bad = rest & ~ok
        if bad:
            sizes = [self._single_min[v] for v in bits(bad)]
            sizes = [x for x in sizes if x is not None]
            if sizes:
                big = max(min(sizes), worst, 1)
                bound = max(bound, r - big + 1)
        return bound

    def run(self) -> None:
        self._rec(self.g.vertex_mask, [], [], self._fd_singletons)

    def _rec(self, rem: int, classes: list[int], pending: list[int], ok: int) -> bool:
        """Returns True once the upper bound is reached (search can stop)."""
        self.nodes += 1
        if not rem:
            if not pending and len(classes) > self.best:
                self.best = len(classes)
                self.best_witness = list(classes)
                return self.best >= self.ub
            return False
        low = rem & -rem
        k = len(classes)
        if k + 1 > self.ub:
            return False
        n_rem = popcount(rem)
        # a class of size s leaves at most n_rem - s further classes
        max_size = min(n_rem, k + n_rem - self.best)
        for a in self._candidates(rem, low, classes, max_size):
            if self._try(rem, classes, pending, ok, a):
                return True
        return False

    def _candidates(self, rem: int, low: int, classes: list[int], max_size: int):
        """Classes containing ``low`` inside ``rem``, smallest first.

        Without pruning every subset qualifies. Otherwise a class is a fair
        dominating singleton, the complement of an existing class inside a fair
        dominating set, or lies inside a fair dominating subset of ``rem``.
        """
        if not self.partner_pruning:
            others = list(bits(rem ^ low))
            for size in range(1, max_size + 1):
                for extra in combinations(others, size - 1):
                    yield low | mask_of(extra)
            return
        table = self.table
        if self._fd_sets is None:
            self._fd_sets = np.array(self.table.fd_sets, dtype=np.int64)
        fd = self._fd_sets
        inside = fd[((fd & ~rem) == 0) & ((fd & low) != 0)]
        hull = int(np.bitwise_or.reduce(inside)) if len(inside) else 0
        direct = set()
        for c in classes:
            if table(c):
                continue
            masks = self._partners(c)[0]
            hits = masks[((masks & ~rem) == 0) & ((masks & low) != 0)]
            direct.update(int(m) for m in hits.tolist())
        by_size: dict[int, list[int]] = {}
        for m in direct:
            by_size.setdefault(popcount(m), []).append(m)
        others = list(bits(hull & ~low))
        for size in range(1, max_size + 1):
            emitted = set()
            if size == 1 and table(low):
                emitted.add(low)
                yield low
            if size - 1 <= len(others):
                for extra in combinations(others, size - 1):
                    a = low | mask_of(extra)
                    emitted.add(a)
                    yield a
            for a in sorted(by_size.get(size, ())):
                if a not in emitted:
                    yield a

    def _try(self, rem: int, classes: list[int], pending: list[int], ok: int,
             a: int) -> bool:
        table = self.table
        code = table(a)
        if code and a & (a - 1):
            return False
        rest = rem & ~a
        if code:
            new_pending = pending
        else:
            new_pending = [p for p in pending if not table(p | a)]
            if not any(not table(c) and table(c | a) for c in classes):
                new_pending.append(a)
        if new_pending and not rest:
            return False
        if self.partner_pruning:
            worst = 0
            for p in new_pending:
                m = self._min_partner(p, rest)
                if m is None:
                    return False
                worst = max(worst, m)
            if not code:
                ok |= self._anchored(a)
            future = self._future(rest, ok, worst)
        else:
            future = popcount(rest)
        if len(classes) + 1 + future <= self.best:
            return False
        classes.append(a)
        done = self._rec(rest, classes, new_pending, ok)
        classes.pop()
        return done


def cf_solve(g: Graph, partner_pruning: bool = True, seed_lower_bound: bool = True
             ) -> SolveReport:
    """Exact fair coalition number by branch and bound.

    With ``seed_lower_bound`` the search starts from the partition built by
    :func:`lower_bound_from_domatic` when that construction applies.
    """
    if g.n > SOLVE_MAX_ORDER:
        raise CapExceeded(f"cf_solve is limited to order {SOLVE_MAX_ORDER}")
    start = time.perf_counter()
    lower, seed = 0, ()
    if seed_lower_bound and g.n >= 3 and not g.full_vertices():
        try:
            lower, seed = lower_bound_from_domatic(g)
        except ConstructionError:
            pass
    search = _ClassSearch(g, partner_pruning, best=lower, witness=seed)
    if lower < search.ub:
        search.run()
    elapsed = time.perf_counter() - start
    return _report(g, search.best_witness, search.table, search.nodes, elapsed,
                   "branch_and_bound", lower)
