"""Simple undirected graphs with dense 1-based vertex numbering.

Graphs are immutable values: every derived structure (embedding, orientation,
decomposition) references a graph without mutating it.  Vertex numbering of
each named constructor is documented on the constructor so that fixtures stay
stable.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .errors import ParameterError

INFINITY = float("inf")


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ParameterError(f"bad edge ({u},{v}) for n={self.n}")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            normalized.add(_normalize_edge(u, v))
        return Graph(n, frozenset(normalized))

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        nbrs: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

    @cached_property
    def adjacency_sets(self) -> dict[int, frozenset[int]]:
        return {v: frozenset(ns) for v, ns in self.adjacency.items()}

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in self.vertices()]

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {1}
        queue = deque([1])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def from_json_dict(data: Mapping) -> "Graph":
        return Graph.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])

    @staticmethod
    def from_json(text: str) -> "Graph":
        return Graph.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class WeightedGraph:
    """Graph with a nonnegative rational weight on every edge."""

    base: Graph
    weights: Mapping[tuple[int, int], Fraction] = field(hash=False)

    def __post_init__(self):
        keys = {_normalize_edge(u, v) for u, v in self.weights}
        if keys != set(self.base.edges):
            raise ParameterError("weights must be defined exactly on the edge set")
        if any(w < 0 for w in self.weights.values()):
            raise ParameterError("edge weights must be nonnegative")

    def weight(self, u: int, v: int) -> Fraction:
        return Fraction(self.weights[_normalize_edge(u, v)])

    def weighted_degree(self, v: int) -> Fraction:
        return sum((self.weight(v, u) for u in self.base.adjacency[v]), Fraction(0))

    def square_weighted_degree(self, v: int) -> Fraction:
        """Sum of squared incident weights (diagonal of the squared-skew Gram matrix)."""
        return sum((self.weight(v, u) ** 2 for u in self.base.adjacency[v]), Fraction(0))


def uniform_weights(g: Graph, value: int | Fraction = 1) -> WeightedGraph:
    return WeightedGraph(g, {e: Fraction(value) for e in g.edges})


# ---------------------------------------------------------------------------
# Named constructors
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    """K_n on vertices 1..n."""
    if n < 1:
        raise ParameterError("K_n needs n >= 1")
    return Graph.from_edges(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def cycle_graph(n: int) -> Graph:
    """C_n with edges 1-2-...-n-1."""
    if n < 3:
        raise ParameterError("C_n needs n >= 3")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph.from_edges(n, edges)


def path_graph(n: int) -> Graph:
    """P_n on n vertices, edges 1-2-...-n."""
    if n < 1:
        raise ParameterError("P_n needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def complete_bipartite(r: int, s: int | None = None) -> Graph:
    """K_{r,s} with parts {1..r} and {r+1..r+s}; defaults to the balanced K_{r,r}."""
    s = r if s is None else s
    if r < 1 or s < 1:
        raise ParameterError("K_{r,s} needs r,s >= 1")
    return Graph.from_edges(r + s, [(u, r + v) for u in range(1, r + 1) for v in range(1, s + 1)])


def octahedron() -> Graph:
    """K_6 minus the perfect matching {(1,2),(3,4),(5,6)}; 4-regular on 6 vertices."""
    removed = {(1, 2), (3, 4), (5, 6)}
    return Graph.from_edges(6, [e for e in complete_graph(6).edges if e not in removed])


# Dodecahedron numbering is ring-major, matching the three concentric rings of
# its standard planar drawing: 1..5 inner C_5, 6..15 middle C_10, 16..20 outer
# C_5.  Ring-1 vertex i hooks to middle vertex 4+2i; outer vertex 15+i hooks to
# middle vertex 5+2i.
def dodecahedron() -> Graph:
    edges: list[tuple[int, int]] = []
    edges += [(i, i % 5 + 1) for i in range(1, 6)]
    edges += [(5 + i, 5 + i % 10 + 1) for i in range(1, 11)]
    edges += [(15 + i, 15 + i % 5 + 1) for i in range(1, 6)]
    edges += [(i, 4 + 2 * i) for i in range(1, 6)]
    edges += [(15 + i, 5 + 2 * i) for i in range(1, 6)]
    return Graph.from_edges(20, edges)


CLASSIC_FAMILIES = ("K_n", "C_n", "P_n", "K_rr", "octahedron", "dodecahedron")


def make_classic(name: str, size: int | None = None) -> Graph:
    """Dispatch to a named constructor; `size` is n (or r for K_rr)."""
    if name == "K_n":
        return complete_graph(_require_size(name, size))
    if name == "C_n":
        return cycle_graph(_require_size(name, size))
    if name == "P_n":
        return path_graph(_require_size(name, size))
    if name == "K_rr":
        return complete_bipartite(_require_size(name, size))
    if name == "octahedron":
        return octahedron()
    if name == "dodecahedron":
        return dodecahedron()
    raise ParameterError(f"unknown family {name!r}; expected one of {CLASSIC_FAMILIES}")


def _require_size(name: str, size: int | None) -> int:
    if size is None:
        raise ParameterError(f"family {name} requires a size parameter")
    return size


# ---------------------------------------------------------------------------
# Structural operations
# ---------------------------------------------------------------------------

def product_vertex(u: int, v: int, n_h: int) -> int:
    """Number of the product vertex (u,v); pairs are laid out row-major."""
    return (u - 1) * n_h + v


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product: (u,u') ~ (v,v') iff u=v and u'~v', or u'=v' and u~v.

    Vertex (u,v) gets number (u-1)*|V(h)| + v.
    """
    if g.n == 0 or h.n == 0:
        raise ParameterError("cartesian product needs nonempty factors")
    edges = []
    for u in g.vertices():
        for (a, b) in h.edges:
            edges.append((product_vertex(u, a, h.n), product_vertex(u, b, h.n)))
    for a in h.vertices():
        for (u, v) in g.edges:
            edges.append((product_vertex(u, a, h.n), product_vertex(v, a, h.n)))
    return Graph.from_edges(g.n * h.n, edges)


def girth(g: Graph) -> int | float:
    """Length of the shortest cycle; INFINITY for forests.

    BFS from every vertex; O(n*m), fine at desk scale.
    """
    best: int | float = INFINITY
    adj = g.adjacency
    for s in g.vertices():
        dist = {s: 0}
        parent = {s: 0}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best - 1:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y and parent[y] != x:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def has_short_cycles(g: Graph) -> dict[str, bool]:
    """Flags for the existence of any 3-cycle and any 4-cycle."""
    adj = g.adjacency_sets
    has3 = any(adj[u] & adj[v] for u, v in g.edges)
    has4 = False
    for u in g.vertices():
        for v in range(u + 1, g.n + 1):
            if len(adj[u] & adj[v]) >= 2:
                has4 = True
                break
        if has4:
            break
    return {"has3": has3, "has4": has4}


def square_graph(g: Graph) -> Graph:
    """Graph on the same vertices with u~v iff u,v share a neighbor in g."""
    adj = g.adjacency_sets
    edges = []
    for u in g.vertices():
        for v in range(u + 1, g.n + 1):
            if adj[u] & adj[v]:
                edges.append((u, v))
    return Graph.from_edges(g.n, edges)


# ---------------------------------------------------------------------------
# graph6 interop (secondary format; JSON is the primary interchange)
# ---------------------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    """Standard graph6 line for n <= 62 (vertex 1 becomes vertex 0)."""
    if g.n > 62:
        raise ParameterError("graph6 export implemented for n <= 62 only")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i + 1, j + 1) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return "".join(chars)


def from_graph6(line: str) -> Graph:
    line = line.strip()
    if not line or not (63 <= ord(line[0]) <= 63 + 62):
        raise ParameterError("unsupported graph6 header (n <= 62 expected)")
    n = ord(line[0]) - 63
    bits = []
    for ch in line[1:]:
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise ParameterError(f"invalid graph6 character {ch!r}")
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if idx < len(bits) and bits[idx]:
                edges.append((i + 1, j + 1))
            idx += 1
    return Graph.from_edges(n, edges)
