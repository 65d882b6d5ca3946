"""Bitset graphs, the graph6 codec and a few structural helpers.

A :class:`Graph` stores one Python ``int`` per vertex; bit ``j`` of row
``i`` is set iff ``{i, j}`` is an edge.  Graphs are immutable and compare
bitwise, so two labelings of the same graph are different values.
Isomorphism lives in :mod:`signless.enumeration`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MAX_N = 64
MAX_GRAPH6_N = 62


class Graph6Error(ValueError):
    """Raised for malformed or unsupported graph6 input."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_N}")
        if len(self.adj) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        limit = 1 << self.n
        for i, row in enumerate(self.adj):
            if row < 0 or row >= limit:
                raise ValueError(f"row {i} has bits beyond vertex {self.n - 1}")
            if (row >> i) & 1:
                raise ValueError(f"self-loop at vertex {i}")
            r = row
            while r:
                low = r & -r
                j = low.bit_length() - 1
                if not (self.adj[j] >> i) & 1:
                    raise ValueError(f"asymmetric adjacency at ({i}, {j})")
                r ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        row = self.adj[v]
        return [j for j in range(self.n) if (row >> j) & 1]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for j in range(self.n) for i in range(j)
                if (self.adj[j] >> i) & 1]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` is renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        rows = [0] * self.n
        for u, v in self.edges():
            rows[perm[u]] |= 1 << perm[v]
            rows[perm[v]] |= 1 << perm[u]
        return Graph(self.n, tuple(rows))

    def rows(self) -> np.ndarray:
        """Adjacency rows as ``int64`` (valid for n <= 63, which covers every kernel)."""
        return np.array(self.adj, dtype=np.int64)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={count_edges(self)})"


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    k: int
    c_nm2: int
    min_deg: int
    max_deg: int


def _edge_bits(g: Graph):
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            yield (row >> i) & 1


def to_graph6(g: Graph) -> str:
    if g.n > MAX_GRAPH6_N:
        raise Graph6Error(f"n={g.n} needs the long graph6 header; only n <= 62 supported")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for b in _edge_bits(g):
        acc = (acc << 1) | b
        nbits += 1
        if nbits == 6:
            out.append(chr(acc + 63))
            acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise Graph6Error(f"byte {ch!r} outside the graph6 range 63..126")
        vals.append(v)
    n = vals[0]
    if n == 63:
        raise Graph6Error("long-form graph6 header (n > 62) not supported")
    if n < 1:
        raise Graph6Error("graph6 with zero vertices not supported")
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    body = vals[1:]
    if len(body) != nbytes:
        raise Graph6Error(f"n={n} needs {nbytes} body bytes, got {len(body)}")
    pad = nbytes * 6 - npairs
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    """Parse a newline-delimited graph6 stream, skipping blank lines."""
    return [from_graph6(line) for line in lines if line.strip()]


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ row ^ (1 << i) for i, row in enumerate(g.adj)))


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= g.adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def is_bipartite(g: Graph) -> bool:
    """Two-colouring by breadth-first search over every component."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            u = queue.pop()
            for v in g.neighbors(u):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def count_edges(g: Graph) -> int:
    return sum(row.bit_count() for row in g.adj) // 2


def degree_profile(g: Graph) -> DegreeProfile:
    degs = tuple(row.bit_count() for row in g.adj)
    return DegreeProfile(
        degrees=degs,
        k=sum(1 for d in degs if d == g.n - 1),
        c_nm2=sum(1 for d in degs if d == g.n - 2),
        min_deg=min(degs),
        max_deg=max(degs),
    )


def make_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("make_complete needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def make_complete_minus_edge(n: int) -> Graph:
    """K_n with the edge {0, 1} removed."""
    if n < 2:
        raise ValueError("make_complete_minus_edge needs n >= 2")
    rows = list(make_complete(n).adj)
    rows[0] &= ~(1 << 1)
    rows[1] &= ~(1 << 0)
    return Graph(n, tuple(rows))


def make_star_k2_complement(n: int) -> Graph:
    """Complement of K_{1,n-3} + K_2.

    Vertex 0 is the star centre, vertices 1 and 2 form the K_2 and
    vertices 3..n-1 are the star leaves (labels as used by the symmetry
    checks in :mod:`signless.spectral`).
    """
    if n < 5:
        raise ValueError("make_star_k2_complement needs n >= 5")
    edges = [(0, leaf) for leaf in range(3, n)] + [(1, 2)]
    return complement(Graph.from_edges(n, edges))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def make_star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
