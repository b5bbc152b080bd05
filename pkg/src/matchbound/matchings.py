"""Ground-truth matching machinery.

Everything here is exact integer/rational arithmetic; these routines are the
oracles that the determinant-based counting is checked against, so they must
stay independent of any pfaffian code.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import OracleSizeError, ParameterError
from .graphs import Graph, _normalize_edge

DEFAULT_ORACLE_LIMIT = 40
DEFAULT_POLY_LIMIT = 30


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges."""

    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        seen: set[int] = set()
        for u, v in self.pairs:
            if u in seen or v in seen or u == v:
                raise ParameterError("matching edges must be pairwise vertex-disjoint")
            seen.update((u, v))

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.pairs for v in e)

    def size(self) -> int:
        return len(self.pairs)

    def is_perfect(self, n: int) -> bool:
        return len(self.covered) == n

    def is_matching_in(self, g: Graph) -> bool:
        return all(g.has_edge(u, v) for u, v in self.pairs)


def enumerate_perfect_matchings(
    g: Graph,
    *,
    max_vertices: int = DEFAULT_ORACLE_LIMIT,
    collect: bool = False,
) -> int | tuple[int, list[Matching]]:
    """Exact perfect-matching count by branching on the lowest uncovered vertex.

    Returns the count, or (count, list-of-matchings) when collect=True.
    Odd vertex count gives 0.  Refuses graphs above the size guard.
    """
    if g.n > max_vertices:
        raise OracleSizeError(g.n, max_vertices)
    if g.n % 2 == 1:
        return (0, []) if collect else 0

    adj = g.adjacency
    found: list[Matching] = []
    chosen: list[tuple[int, int]] = []

    def recurse(uncovered: frozenset[int]) -> int:
        if not uncovered:
            if collect:
                found.append(Matching(frozenset(chosen)))
            return 1
        v = min(uncovered)
        total = 0
        for u in adj[v]:
            if u in uncovered:
                chosen.append(_normalize_edge(v, u))
                total += recurse(uncovered - {v, u})
                chosen.pop()
        return total

    count = recurse(frozenset(g.vertices()))
    return (count, found) if collect else count


def perfect_matching_signs(g: Graph, *, max_vertices: int = DEFAULT_ORACLE_LIMIT) -> list[int]:
    """Permutation sign of every perfect matching.

    A matching {(i_1,j_1),...,(i_k,j_k)} with i_t < j_t and i_1 < ... < i_k is
    read as the permutation 1->i_1, 2->j_1, ..., and its parity is returned.
    """
    _, matchings = enumerate_perfect_matchings(g, max_vertices=max_vertices, collect=True)
    return [_matching_permutation_sign(m.pairs) for m in matchings]


def _matching_permutation_sign(pairs: frozenset[tuple[int, int]]) -> int:
    ordered = sorted(pairs)
    perm = [x for pair in ordered for x in pair]
    return _permutation_sign(perm)


def _permutation_sign(values: Sequence[int]) -> int:
    index = {v: i for i, v in enumerate(sorted(values))}
    perm = [index[v] for v in values]
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def hafnian(matrix: Sequence[Sequence[int | Fraction]], *, max_dim: int = DEFAULT_ORACLE_LIMIT):
    """Sum over all pairings of [n] of the products of matched entries.

    Requires a symmetric matrix with zero diagonal and even dimension; for a
    0/1 matrix this equals the perfect-matching count of the support graph.
    """
    n = len(matrix)
    if n > max_dim:
        raise OracleSizeError(n, max_dim)
    if any(len(row) != n for row in matrix):
        raise ParameterError("hafnian needs a square matrix")
    if n % 2 == 1:
        raise ParameterError("hafnian needs even dimension")
    for i in range(n):
        if matrix[i][i] != 0:
            raise ParameterError("hafnian needs zero diagonal")
        for j in range(i + 1, n):
            if matrix[i][j] != matrix[j][i]:
                raise ParameterError("hafnian needs a symmetric matrix")

    def recurse(free: tuple[int, ...]):
        if not free:
            return 1
        i, rest = free[0], free[1:]
        total = 0
        for pos, j in enumerate(rest):
            w = matrix[i][j]
            if w != 0:
                total += w * recurse(rest[:pos] + rest[pos + 1:])
        return total

    return recurse(tuple(range(n)))


# ---------------------------------------------------------------------------
# Matching polynomials
# ---------------------------------------------------------------------------
# Coefficient vectors [phi(0), phi(1), ..., phi(floor(n/2))] where phi(k) is
# the number of k-edge matchings.

def matching_polynomial(g: Graph, *, max_vertices: int = DEFAULT_POLY_LIMIT) -> tuple[int, ...]:
    """Matching-count polynomial by recursion on the lowest remaining vertex.

    At each step the minimum vertex is either left unmatched or matched to one
    of its remaining neighbors; memoized on the remaining vertex set.
    """
    if g.n > max_vertices:
        raise OracleSizeError(g.n, max_vertices)
    adj = g.adjacency
    top = g.n // 2

    @lru_cache(maxsize=None)
    def poly(remaining: frozenset[int]) -> tuple[int, ...]:
        if not remaining:
            return (1,)
        v = min(remaining)
        coeffs = list(poly(remaining - {v}))
        for u in adj[v]:
            if u in remaining:
                sub = poly(remaining - {v, u})
                if len(coeffs) < len(sub) + 1:
                    coeffs.extend([0] * (len(sub) + 1 - len(coeffs)))
                for k, c in enumerate(sub):
                    coeffs[k + 1] += c
        return tuple(coeffs)

    result = list(poly(frozenset(g.vertices())))
    poly.cache_clear()
    result.extend([0] * (top + 1 - len(result)))
    return tuple(result)


def path_matching_polynomial(n: int) -> tuple[int, ...]:
    """Matching polynomial of the n-vertex path via the two-term recursion."""
    if n < 0:
        raise ParameterError("path length must be nonnegative")
    prev2: list[int] = [1]          # P_0 (empty graph)
    prev1: list[int] = [1]          # P_1
    if n == 0:
        return tuple(prev2)
    for _ in range(2, n + 1):
        cur = list(prev1) + [0] * (len(prev2) + 1 - len(prev1))
        for k, c in enumerate(prev2):
            cur[k + 1] += c
        prev2, prev1 = prev1, cur
    return tuple(prev1)


def cycle_matching_polynomial(n: int) -> tuple[int, ...]:
    """Matching polynomial of C_n: phi(C_n) = phi(P_n) + t*phi(P_{n-2})."""
    if n < 3:
        raise ParameterError("C_n needs n >= 3")
    p_n = list(path_matching_polynomial(n))
    p_n2 = path_matching_polynomial(n - 2)
    coeffs = p_n + [0] * (len(p_n2) + 1 - len(p_n))
    for k, c in enumerate(p_n2):
        coeffs[k + 1] += c
    return tuple(coeffs)


def total_matchings_cycle(n: int) -> int:
    """Total number of matchings of C_n (the Lucas number L_n)."""
    return sum(cycle_matching_polynomial(n))


# ---------------------------------------------------------------------------
# Matchings used by the square-graph bound
# ---------------------------------------------------------------------------

def greedy_maximal_matching(g: Graph, order: Sequence[int] | None = None) -> Matching:
    """Maximal matching: scan vertices in `order` (default 1..n), matching each
    uncovered vertex to its smallest uncovered neighbor."""
    order = list(order) if order is not None else list(g.vertices())
    covered: set[int] = set()
    pairs: set[tuple[int, int]] = set()
    for v in order:
        if v in covered:
            continue
        for u in g.adjacency[v]:
            if u not in covered:
                pairs.add(_normalize_edge(v, u))
                covered.update((v, u))
                break
    return Matching(frozenset(pairs))


def promised_path_matching_size(num_vertices: int) -> int:
    """Guaranteed matching size in the square graph from a path on `num_vertices`
    vertices: 2*floor(l/4) for even l, floor(l/2) for odd l."""
    l = num_vertices
    return 2 * (l // 4) if l % 2 == 0 else l // 2


def matching_from_path(g: Graph, path: Sequence[int]) -> Matching:
    """Matching in square_graph(g) built from a simple path, pairing vertices
    two steps apart.

    The path is processed in blocks of four vertices, pairing (v_i,v_{i+2})
    and (v_{i+1},v_{i+3}); a trailing block of three yields one more pair.
    This achieves exactly the promised size for every path length.
    """
    if len(path) < 3:
        raise ParameterError("path must have at least 3 vertices")
    if len(set(path)) != len(path):
        raise ParameterError("path must be simple")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise ParameterError(f"({a},{b}) is not an edge of the graph")

    pairs: set[tuple[int, int]] = set()
    i = 0
    while i + 3 <= len(path):
        pairs.add(_normalize_edge(path[i], path[i + 2]))
        if i + 4 <= len(path):
            pairs.add(_normalize_edge(path[i + 1], path[i + 3]))
        i += 4
    matching = Matching(frozenset(pairs))
    assert matching.size() == promised_path_matching_size(len(path))
    return matching
