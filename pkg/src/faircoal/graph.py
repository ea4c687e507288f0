"""Simple undirected graphs on at most 64 vertices, stored as neighbor bit rows.

Vertex sets are plain ``int`` bit masks: bit ``v`` set means vertex ``v`` is in
the set. Vertex ids are 0-based everywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64
GRAPH6_MAX_ORDER = 62


class GraphError(ValueError):
    """A graph could not be built (bad order, loop, vertex out of range)."""


class CapExceeded(GraphError):
    """Requested order is above what a routine supports."""


class ParseError(ValueError):
    """Base class for text-format parse failures."""


class Graph6HeaderError(ParseError):
    pass


class Graph6ByteError(ParseError):
    pass


class Graph6TrailingError(ParseError):
    pass


class Graph6OrderError(ParseError):
    pass


class EdgeListError(ParseError):
    pass


# ---------------------------------------------------------------------------
# vertex-set helpers


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def full_mask(n: int) -> int:
    return (1 << n) - 1


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``adj[v]`` is the neighbor mask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise CapExceeded(f"order {self.n} outside 1..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency has wrong number of rows")
        allowed = full_mask(self.n)
        for v, row in enumerate(self.adj):
            if row & ~allowed:
                raise GraphError(f"row {v} references vertices >= n")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 1 <= n <= MAX_ORDER:
            raise CapExceeded(f"order {n} outside 1..{MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def vertex_mask(self) -> int:
        return full_mask(self.n)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def full_vertices(self) -> list[int]:
        return [v for v in range(self.n) if popcount(self.adj[v]) == self.n - 1]

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == self.vertex_mask

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        edges = self.edges() + [(u + shift, v + shift) for u, v in other.edges()]
        return Graph.from_edges(self.n + other.n, edges)

    def girth(self) -> float:
        """Length of a shortest cycle (``inf`` for forests), by BFS from every vertex."""
        best = float("inf")
        for s in range(self.n):
            dist = {s: 0}
            parent = {s: -1}
            queue = [s]
            for v in queue:
                for u in bits(self.adj[v]):
                    if u not in dist:
                        dist[u] = dist[v] + 1
                        parent[u] = v
                        queue.append(u)
                    elif parent[v] != u:
                        best = min(best, dist[u] + dist[v] + 1)
        return best


# ---------------------------------------------------------------------------
# graph6


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_ORDER:
        raise CapExceeded(f"graph6 short form supports order <= {GRAPH6_MAX_ORDER}")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6HeaderError("empty graph6 string")
    head = ord(s[0])
    if head == 126:
        raise Graph6OrderError("long-form graph6 (order > 62) is not supported")
    if not 63 <= head <= 125:
        raise Graph6HeaderError(f"bad header byte {s[0]!r}")
    n = head - 63
    if n == 0:
        raise Graph6HeaderError("order 0 graph is not allowed")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise Graph6HeaderError(f"header says order {n} but body is too short")
    if len(body) > nbytes:
        raise Graph6TrailingError(f"{len(body) - nbytes} trailing byte(s)")
    values = []
    for ch in body:
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise Graph6ByteError(f"byte {ch!r} outside graph6 range")
        values.append(c)
    pad = nbytes * 6 - nbits
    if pad and values[-1] & ((1 << pad) - 1):
        raise Graph6ByteError("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if values[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# edge lists


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line, then one ``u v`` pair per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise EdgeListError("empty edge list")
    try:
        n = int(lines[0])
    except ValueError:
        raise EdgeListError(f"bad order line {lines[0]!r}") from None
    if not 1 <= n <= MAX_ORDER:
        raise EdgeListError(f"order {n} outside 1..{MAX_ORDER}")
    edges = []
    for lineno, ln in enumerate(lines[1:], start=2):
        tok = ln.split()
        if len(tok) != 2:
            raise EdgeListError(f"line {lineno}: expected two vertex ids")
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: non-numeric token") from None
        if u == v:
            raise EdgeListError(f"line {lineno}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"line {lineno}: vertex id out of range")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


# ---------------------------------------------------------------------------
# generators


def gen_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def gen_empty(n: int) -> Graph:
    if n < 1:
        raise GraphError("empty graph needs n >= 1")
    return Graph(n, (0,) * n)


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def corona_k1(g: Graph) -> Graph:
    """Attach one pendant vertex ``v + n`` to every vertex ``v``."""
    n = g.n
    if 2 * n > MAX_ORDER:
        raise CapExceeded(f"corona of order {2 * n} exceeds {MAX_ORDER}")
    return Graph.from_edges(2 * n, g.edges() + [(v, v + n) for v in range(n)])


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via a random Pruefer sequence."""
    if n < 1:
        raise GraphError("tree needs n >= 1")
    if n <= 2:
        return gen_path(n)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [v for v in range(n) if degree[v] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def parse_family(spec: str) -> Graph:
    """Build a graph from a family spec such as ``path:9`` or ``corona:tree:4:seed=7``."""
    parts = spec.split(":")
    name = parts[0].lower()
    try:
        if name == "petersen" and len(parts) == 1:
            return gen_petersen()
        if name in ("path", "cycle", "complete", "empty") and len(parts) == 2:
            gen = {"path": gen_path, "cycle": gen_cycle,
                   "complete": gen_complete, "empty": gen_empty}[name]
            return gen(int(parts[1]))
        if name == "tree" and len(parts) in (2, 3):
            return gen_random_tree(int(parts[1]), _seed(parts[2:]))
        if name == "corona" and len(parts) >= 2:
            return corona_k1(parse_family(":".join(parts[1:])))
    except (GraphError, ValueError) as exc:
        raise ParseError(f"bad family spec {spec!r}: {exc}") from None
    raise ParseError(f"unknown family spec {spec!r}")


def _seed(rest: list[str]) -> int:
    if not rest:
        return 0
    tok = rest[0]
    if tok.startswith("seed="):
        tok = tok[5:]
    return int(tok)


# ---------------------------------------------------------------------------
# isomorphism


def _refine(g: Graph) -> list[int]:
    """Stable colour refinement, starting from degrees. Colours are canonical ints."""
    colors = g.degrees()
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in bits(g.adj[v]))))
                for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(palette) == len(set(colors)):
            return new
        colors = new


def _signature(g: Graph, colors: list[int]) -> tuple:
    # Joint refinement needs a shared palette, so compare the refined multiset of
    # (colour, neighbour colours) signatures rather than raw colour ids.
    return tuple(sorted((colors[v], tuple(sorted(colors[u] for u in bits(g.adj[v]))))
                        for v in range(g.n)))


def _joint_refine(g: Graph, h: Graph) -> tuple[list[int], list[int]] | None:
    cg, ch = g.degrees(), h.degrees()
    while True:
        sg = [(cg[v], tuple(sorted(cg[u] for u in bits(g.adj[v])))) for v in range(g.n)]
        sh = [(ch[v], tuple(sorted(ch[u] for u in bits(h.adj[v])))) for v in range(h.n)]
        if sorted(sg) != sorted(sh):
            return None
        palette = {s: i for i, s in enumerate(sorted(set(sg)))}
        ng = [palette[s] for s in sg]
        nh = [palette[s] for s in sh]
        if len(palette) == len(set(cg)):
            return ng, nh
        cg, ch = ng, nh


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Return ``perm`` with ``g.relabel(perm) == h``, or ``None``."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    refined = _joint_refine(g, h)
    if refined is None:
        return None
    cg, ch = refined
    n = g.n
    # Most constrained first: small colour classes, then adjacency to placed vertices.
    class_size = {c: cg.count(c) for c in cg}
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        v = min(remaining, key=lambda x: (-popcount(g.adj[x] & placed), class_size[cg[x]], x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    candidates = [[w for w in range(n) if ch[w] == cg[v]] for v in order]
    mapping = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in candidates[i]:
            if used >> w & 1:
                continue
            ok = True
            for u in order[:i]:
                if g.has_edge(v, u) != h.has_edge(w, mapping[u]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            used &= ~(1 << w)
            mapping[v] = -1
        return False

    return mapping if extend(0) else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def invariant_key(g: Graph) -> tuple:
    """Cheap isomorphism invariant for bucketing before calling :func:`is_isomorphic`."""
    return (g.n, g.num_edges, _signature(g, _refine(g)))
