"""Orientations, skew adjacency matrices, exact determinants, and the
Kasteleyn/FKT pfaffian orientation for embedded planar graphs.

Determinants are computed with fraction-free Bareiss elimination over Python
big integers (rational input is cleared to integers first), because the
counting pipeline must certify *exactly* that det S is a perfect square.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import ConsistencyError, ParameterError
from .graphs import Graph, WeightedGraph, _normalize_edge
from .embedding import PlanarEmbedding
from .matchings import enumerate_perfect_matchings, hafnian

Matrix = list[list[int]]


@dataclass(frozen=True)
class Orientation:
    """One direction per edge of a graph; (u,v) in `directed` means u -> v."""

    graph: Graph
    directed: frozenset[tuple[int, int]] = field(hash=False)

    def __post_init__(self):
        seen = {_normalize_edge(u, v) for u, v in self.directed}
        if seen != set(self.graph.edges) or len(self.directed) != self.graph.m:
            raise ParameterError("orientation must direct every edge exactly once")

    def sign(self, u: int, v: int) -> int:
        """+1 if the edge is oriented u -> v, -1 if v -> u, 0 if absent."""
        if (u, v) in self.directed:
            return 1
        if (v, u) in self.directed:
            return -1
        return 0

    def flip(self, u: int, v: int) -> "Orientation":
        if (u, v) in self.directed:
            return Orientation(self.graph, self.directed - {(u, v)} | {(v, u)})
        if (v, u) in self.directed:
            return Orientation(self.graph, self.directed - {(v, u)} | {(u, v)})
        raise ParameterError(f"({u},{v}) is not an edge")


def orientation_from_pairs(g: Graph, pairs: Sequence[tuple[int, int]]) -> Orientation:
    return Orientation(g, frozenset((int(u), int(v)) for u, v in pairs))


def skew_matrix(o: Orientation, weights: WeightedGraph | None = None) -> list[list]:
    """Skew adjacency matrix: entry (u,v) is +w(u,v) when the edge runs u -> v."""
    n = o.graph.n
    rows: list[list] = [[0] * n for _ in range(n)]
    for (u, v) in o.directed:
        w = weights.weight(u, v) if weights is not None else 1
        rows[u - 1][v - 1] = w
        rows[v - 1][u - 1] = -w
    return rows


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        row = a[i]
        acc = out[i]
        for t in range(k):
            x = row[t]
            if x:
                brow = b[t]
                for j in range(m):
                    acc[j] += x * brow[j]
    return out


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def exact_determinant(matrix: Sequence[Sequence[int | Fraction]]) -> int | Fraction:
    """Exact determinant via fraction-free Bareiss elimination.

    Fraction entries are cleared to a common integer scale first; the result
    is an int when all entries were ints, else a Fraction.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ParameterError("determinant needs a square matrix")
    if n == 0:
        return 1

    scale = 1
    has_fraction = any(isinstance(x, Fraction) for row in matrix for x in row)
    if has_fraction:
        for row in matrix:
            for x in row:
                scale = scale * Fraction(x).denominator // math.gcd(
                    scale, Fraction(x).denominator)
        rows = [[int(Fraction(x) * scale) for x in row] for row in matrix]
    else:
        rows = [list(row) for row in matrix]

    det = _bareiss(rows)
    if has_fraction:
        return Fraction(det, scale ** n)
    return det


def _bareiss(rows: Matrix) -> int:
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            ri = rows[i]
            rk = rows[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - rik * rk[j]) // prev
        prev = pivot
    return sign * rows[n - 1][n - 1]


def exact_integer_sqrt(value: int) -> int:
    """Integer square root with an exactness certificate."""
    if value < 0:
        raise ConsistencyError(f"expected a nonnegative square, got {value}")
    root = math.isqrt(value)
    if root * root != value:
        raise ConsistencyError(f"{value} is not a perfect square")
    return root


# ---------------------------------------------------------------------------
# Kasteleyn / FKT orientation
# ---------------------------------------------------------------------------

def _bfs_spanning_tree(g: Graph) -> list[tuple[int, int]]:
    """BFS tree edges from vertex 1, neighbors in ascending order (deterministic)."""
    tree: list[tuple[int, int]] = []
    seen = {1}
    queue = deque([1])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v not in seen:
                seen.add(v)
                tree.append((u, v))
                queue.append(v)
    if len(seen) != g.n:
        raise ParameterError("Kasteleyn orientation needs a connected graph")
    return tree


def kasteleyn_orient(emb: PlanarEmbedding) -> Orientation:
    """FKT orientation: every bounded face gets an odd number of boundary edges
    oriented along its traversal direction.

    A BFS spanning tree is oriented parent -> child; the remaining edges are
    fixed one face at a time, walking the dual spanning tree from the leaves
    toward the outer face.  The outer face parity is unconstrained.
    """
    emb.validate()
    g = emb.graph
    tree_pairs = _bfs_spanning_tree(g)
    tree_edges = {_normalize_edge(u, v) for u, v in tree_pairs}
    directed: dict[tuple[int, int], tuple[int, int]] = {
        _normalize_edge(u, v): (u, v) for u, v in tree_pairs
    }

    faces = emb.faces
    # Dual graph restricted to non-tree edges; these interdigitate, so it is a
    # spanning tree of the faces.
    dual_adj: dict[int, list[tuple[int, tuple[int, int]]]] = {i: [] for i in range(len(faces))}
    index_of = {f.key: i for i, f in enumerate(faces)}
    for (u, v) in g.edges:
        if (u, v) in tree_edges:
            continue
        fa = index_of[emb.face_of_directed_edge[(u, v)].key]
        fb = index_of[emb.face_of_directed_edge[(v, u)].key]
        dual_adj[fa].append((fb, (u, v)))
        dual_adj[fb].append((fa, (u, v)))

    root = index_of[emb.outer]
    order: list[int] = []
    parent_edge: dict[int, tuple[int, int]] = {}
    seen = {root}
    queue = deque([root])
    while queue:
        f = queue.popleft()
        order.append(f)
        for nf, edge in dual_adj[f]:
            if nf not in seen:
                seen.add(nf)
                parent_edge[nf] = edge
                queue.append(nf)
    if len(seen) != len(faces):
        raise ConsistencyError("dual of the non-tree edges is not connected")

    for f in reversed(order):          # leaves of the dual tree first
        if f == root:
            continue
        face = faces[f]
        fixing = parent_edge[f]
        aligned = 0
        for (a, b) in face.walk:
            key = _normalize_edge(a, b)
            if key == fixing:
                continue
            if directed[key] == (a, b):
                aligned += 1
        # Choose the undetermined edge so the aligned count becomes odd.
        walk_dir = fixing if fixing in face.walk else (fixing[1], fixing[0])
        directed[fixing] = walk_dir if aligned % 2 == 0 else (walk_dir[1], walk_dir[0])

    return Orientation(g, frozenset(directed.values()))


def check_face_parity(emb: PlanarEmbedding, o: Orientation) -> bool:
    """True when every bounded face has an odd count of walk-aligned edges."""
    for face in emb.bounded_faces():
        aligned = sum(1 for (a, b) in face.walk if o.sign(a, b) == 1)
        if aligned % 2 == 0:
            return False
    return True


def count_from_orientation(o: Orientation, weights: WeightedGraph | None = None):
    """Square root of det S for a pfaffian orientation; errors when det S is
    not a perfect square (which signals a non-pfaffian orientation)."""
    det = exact_determinant(skew_matrix(o, weights))
    if isinstance(det, Fraction):
        num = exact_integer_sqrt(det.numerator)
        den = exact_integer_sqrt(det.denominator)
        return Fraction(num, den)
    return exact_integer_sqrt(det)


def count_by_pfaffian(emb: PlanarEmbedding) -> int:
    """Exact perfect-matching count of an embedded planar graph via FKT."""
    if emb.graph.n % 2 == 1:
        return 0
    return count_from_orientation(kasteleyn_orient(emb))


# ---------------------------------------------------------------------------
# Gram matrix and the basic determinant inequality
# ---------------------------------------------------------------------------

def gram_matrix(o: Orientation, weights: WeightedGraph | None = None) -> list[list]:
    """B = -S^2, positive semidefinite with b_vv = sum of squared incident weights."""
    s = skew_matrix(o, weights)
    s2 = matmul(s, s)
    b = [[-x for x in row] for row in s2]
    for v in o.graph.vertices():
        expected = (weights.square_weighted_degree(v) if weights is not None
                    else o.graph.degree(v))
        if b[v - 1][v - 1] != expected:
            raise ConsistencyError(f"Gram diagonal at {v} is {b[v - 1][v - 1]}, "
                                   f"expected {expected}")
    return b


def principal_submatrix(matrix: Sequence[Sequence], vertices: Sequence[int]) -> list[list]:
    idx = [v - 1 for v in vertices]
    return [[matrix[i][j] for j in idx] for i in idx]


def verify_det_bound(g: Graph, o: Orientation,
                     weights: WeightedGraph | None = None,
                     *, max_vertices: int = 40) -> dict:
    """Exact check of det S <= (sum of weighted perfect matchings)^2.

    Also reports whether equality holds and whether all perfect matchings
    carry the same permutation sign (the equality criterion for positive
    weights).
    """
    det = exact_determinant(skew_matrix(o, weights))
    if weights is None:
        pm = enumerate_perfect_matchings(g, max_vertices=max_vertices)
    else:
        w = [[weights.weight(u, v) if g.has_edge(u, v) else Fraction(0)
              for v in g.vertices()] for u in g.vertices()]
        pm = hafnian(w, max_dim=max_vertices)
    rhs = pm * pm
    signs = pfaffian_term_signs(g, o, max_vertices=max_vertices)
    return {
        "lhs": det,
        "rhs": rhs,
        "holds": det <= rhs,
        "equality": det == rhs,
        "signs_uniform": len(set(signs)) <= 1,
    }


def pfaffian_term_signs(g: Graph, o: Orientation, *, max_vertices: int = 40) -> list[int]:
    """Sign of each perfect matching's pfaffian term: the permutation sign
    times the product of the orientation signs along the matched edges."""
    from .matchings import _matching_permutation_sign

    if g.n % 2 == 1:
        return []
    _, matchings = enumerate_perfect_matchings(g, max_vertices=max_vertices, collect=True)
    signs = []
    for m in matchings:
        s = _matching_permutation_sign(m.pairs)
        for u, v in sorted(m.pairs):
            s *= o.sign(u, v)
        signs.append(s)
    return signs


def all_orientations(g: Graph):
    """Yield every orientation of g (2^m of them); for small sweeps only."""
    edges = g.sorted_edges()
    for mask in range(1 << len(edges)):
        directed = frozenset(
            (u, v) if not (mask >> i) & 1 else (v, u)
            for i, (u, v) in enumerate(edges)
        )
        yield Orientation(g, directed)


def max_determinant_over_orientations(g: Graph) -> int:
    """Maximum of det S over all 2^m orientations (exhaustive)."""
    if g.m > 20:
        raise ParameterError("orientation sweep is exponential; refusing m > 20")
    best = 0
    for o in all_orientations(g):
        det = exact_determinant(skew_matrix(o))
        if det > best:
            best = det
    return best
