"""Simple undirected graphs with exact integer degree-based indices.

Vertices are dense ids 0..n-1, adjacency is stored as sorted tuples, and
graphs are immutable after construction.  All index arithmetic is plain
Python int, so every value is exact regardless of size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Base class for graph construction and query errors."""


class VertexRangeError(GraphError):
    """A vertex id is outside 0..n-1."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """The same unordered edge was given twice."""


class NonEdgeError(GraphError):
    """A queried vertex pair is not an edge."""


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...]):
        # Internal constructor; callers go through make_graph which validates.
        self.n = n
        self.adj = adj

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v} out of range 0..{self.n - 1}")
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v} out of range 0..{self.n - 1}")
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise VertexRangeError(f"edge ({u},{v}) out of range 0..{self.n - 1}")
        return v in self.adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def make_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated simple graph from an edge list.

    Raises VertexRangeError, SelfLoopError or DuplicateEdgeError so callers
    can tell the rejection reasons apart.
    """
    if order < 1:
        raise VertexRangeError(f"order must be >= 1, got {order}")
    neighbor_sets: list[set[int]] = [set() for _ in range(order)]
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise VertexRangeError(f"edge ({u},{v}) out of range 0..{order - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if v in neighbor_sets[u]:
            raise DuplicateEdgeError(f"duplicate edge ({u},{v})")
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
    return Graph(order, tuple(tuple(sorted(s)) for s in neighbor_sets))


def from_adjacency(adj: list[list[int]]) -> Graph:
    """Trusted fast path for internally built adjacency lists (no validation)."""
    return Graph(len(adj), tuple(tuple(sorted(a)) for a in adj))


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def edge_contribution(g: Graph, x: int, y: int) -> int:
    """Squared endpoint-degree sum (d(x) + d(y))**2 of the edge xy."""
    if not g.has_edge(x, y):
        raise NonEdgeError(f"({x},{y}) is not an edge")
    return (len(g.adj[x]) + len(g.adj[y])) ** 2


def hyper_zagreb(g: Graph) -> int:
    """Sum of (d(u)+d(v))**2 over all edges uv; 0 for edgeless graphs."""
    adj = g.adj
    degs = [len(a) for a in adj]
    total = 0
    for u in range(g.n):
        du = degs[u]
        for v in adj[u]:
            if v > u:
                total += (du + degs[v]) ** 2
    return total


@dataclass(frozen=True)
class ZagrebIndices:
    """First Zagreb M1, second Zagreb M2 and forgotten index F."""

    m1: int
    m2: int
    f: int


def classical_indices(g: Graph) -> ZagrebIndices:
    """M1 = sum d(v)^2, M2 = sum_{uv} d(u)d(v), F = sum_{uv} d(u)^2 + d(v)^2.

    These satisfy hyper_zagreb(g) == F + 2*M2 for every graph.
    """
    degs = [len(a) for a in g.adj]
    m1 = sum(d * d for d in degs)
    m2 = 0
    f = 0
    for u in range(g.n):
        du = degs[u]
        for v in g.adj[u]:
            if v > u:
                dv = degs[v]
                m2 += du * dv
                f += du * du + dv * dv
    return ZagrebIndices(m1=m1, m2=m2, f=f)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == g.n


def is_tree(g: Graph) -> bool:
    """Connected with exactly n-1 edges."""
    return g.num_edges == g.n - 1 and is_connected(g)


def is_unicyclic(g: Graph) -> bool:
    """Connected with exactly n edges (exactly one cycle)."""
    return g.num_edges == g.n and is_connected(g)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, in id order."""
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = [start]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def induced_subgraph(g: Graph, vertices: list[int]) -> Graph:
    """Subgraph induced on the given vertices, relabeled to 0..k-1."""
    index = {v: i for i, v in enumerate(vertices)}
    adj: list[list[int]] = [[] for _ in vertices]
    for v in vertices:
        i = index[v]
        for w in g.adj[v]:
            j = index.get(w)
            if j is not None:
                adj[i].append(j)
    return from_adjacency(adj)
