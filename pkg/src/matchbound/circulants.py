"""Skew circulant matrices of oriented cycles and their determinant identities.

The two canonical orientations of the n-cycle (path edges 1->2->...->n plus a
closing edge oriented 1->n or n->1) give skew matrices whose determinants have
Lucas-number closed forms.  Everything here is exact: Lucas recursion instead
of golden-ratio powers, cross-powered integer comparisons instead of n-th
roots, and polynomial Bareiss elimination for the matching-polynomial
determinant identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ConsistencyError, ParameterError
from .graphs import cycle_graph
from .matchings import cycle_matching_polynomial
from .pfaffian import Orientation, exact_determinant, matmul, skew_matrix

Matrix = list[list[int]]


def cycle_skew(n: int, sign: int) -> Matrix:
    """Skew matrix of the n-cycle with path edges oriented 1->2->...->n and the
    closing edge oriented 1->n (sign=+1) or n->1 (sign=-1)."""
    if n < 3:
        raise ParameterError("cycle skew matrix needs n >= 3")
    if sign not in (1, -1):
        raise ParameterError("sign must be +1 or -1")
    m = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        m[i][i + 1] = 1
        m[i + 1][i] = -1
    m[0][n - 1] = sign
    m[n - 1][0] = -sign
    return m


def cycle_orientation(n: int, sign: int) -> Orientation:
    """The orientation whose skew matrix is cycle_skew(n, sign)."""
    pairs = [(i, i + 1) for i in range(1, n)]
    pairs.append((1, n) if sign == 1 else (n, 1))
    return Orientation(cycle_graph(n), frozenset(pairs))


def gauge_reduce(o: Orientation) -> tuple[int, tuple[int, ...]]:
    """Diagonal +-1 gauge D with D S D equal to a canonical cycle skew matrix.

    The input graph must be the standard cycle 1-2-...-n-1.  Returns
    (sign, diagonal); verified by explicit multiplication.
    """
    g = o.graph
    n = g.n
    if g.edges != cycle_graph(n).edges:
        raise ParameterError("gauge reduction needs the standard cycle graph")
    d = [0] * (n + 1)
    d[1] = 1
    for i in range(1, n):
        d[i + 1] = d[i] * o.sign(i, i + 1)
    sign = d[1] * d[n] * o.sign(1, n)

    diag = tuple(d[1:])
    s = skew_matrix(o)
    conjugated = [[diag[i] * s[i][j] * diag[j] for j in range(n)] for i in range(n)]
    if conjugated != cycle_skew(n, sign):
        raise ConsistencyError("gauge reduction failed to reproduce the canonical matrix")
    return sign, diag


def lucas_number(n: int) -> int:
    """L_1 = 1, L_2 = 3, L_n = L_{n-1} + L_{n-2}; equals the total matching
    count of the n-cycle."""
    if n < 1:
        raise ParameterError("Lucas numbers start at n = 1")
    a, b = 1, 3
    if n == 1:
        return a
    for _ in range(n - 2):
        a, b = b, a + b
    return b


def lucas_det(n: int, sign: int) -> int:
    """Closed form for det(I - T^2) of the oriented n-cycle: L_n^2 for odd n,
    (L_n + 2)^2 / (L_n - 2)^2 for even n with closing edge 1->n / n->1."""
    if n < 3:
        raise ParameterError("needs n >= 3")
    ln = lucas_number(n)
    if n % 2 == 1:
        return ln * ln
    base = ln + 2 if sign == 1 else ln - 2
    return base * base


@dataclass(frozen=True)
class RingBlock:
    """One ring of a circular decomposition: cycle length, closing-edge sign,
    and the per-vertex degree diagonal (in ring order)."""

    n: int
    sign: int
    diagonal: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.n < 3:
            raise ParameterError("ring length must be >= 3")
        if self.sign not in (1, -1):
            raise ParameterError("sign must be +1 or -1")
        if self.diagonal is not None:
            if len(self.diagonal) != self.n:
                raise ParameterError("diagonal length must match the ring length")
            if any(d < 2 for d in self.diagonal):
                raise ParameterError("ring vertices have degree >= 2")


def ring_block_matrix(rb: RingBlock) -> Matrix:
    t = cycle_skew(rb.n, rb.sign)
    t2 = matmul(t, t)
    diag = rb.diagonal if rb.diagonal is not None else tuple([3] * rb.n)
    out = [[-x for x in row] for row in t2]
    for i in range(rb.n):
        out[i][i] += diag[i] - 2
    return out


def ring_block_det(rb: RingBlock) -> int:
    """det(D_c - 2I - T^2) for one ring; equals lucas_det for an all-3 diagonal."""
    return exact_determinant(ring_block_matrix(rb))


def best_ring_block_det(n: int, diagonal: Sequence[int] | None = None) -> int:
    """Maximum of the ring block determinant over the two closing-edge signs."""
    diag = tuple(diagonal) if diagonal is not None else None
    return max(
        ring_block_det(RingBlock(n, 1, diag)),
        ring_block_det(RingBlock(n, -1, diag)),
    )


# ---------------------------------------------------------------------------
# Integer polynomials in one variable (coefficient lists, low degree first)
# ---------------------------------------------------------------------------

Poly = tuple[int, ...]


def _ptrim(c: list[int]) -> Poly:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(a: Poly, b: Poly) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _ptrim(out)


def psub(a: Poly, b: Poly) -> Poly:
    return padd(a, tuple(-x for x in b))


def pmul(a: Poly, b: Poly) -> Poly:
    if a == (0,) or b == (0,):
        return (0,)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


def pdivexact(a: Poly, b: Poly) -> Poly:
    """Exact division in Z[t]; raises if the division leaves a remainder."""
    if b == (0,):
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    out = [0] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(rem) >= len(b) and any(rem):
        if rem[-1] == 0:
            rem.pop()
            continue
        q, r = divmod(rem[-1], lead)
        if r:
            raise ConsistencyError("polynomial division was not exact")
        shift = len(rem) - len(b)
        out[shift] = q
        for i, x in enumerate(b):
            rem[shift + i] -= q * x
        rem.pop()
    if any(rem):
        raise ConsistencyError("polynomial division was not exact")
    return _ptrim(out)


def poly_determinant(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Bareiss elimination over Z[t] (exact divisions stay in the ring)."""
    n = len(matrix)
    if n == 0:
        return (1,)
    rows = [[tuple(x) for x in row] for row in matrix]
    sign = 1
    prev: Poly = (1,)
    for k in range(n - 1):
        if rows[k][k] == (0,):
            for i in range(k + 1, n):
                if rows[i][k] != (0,):
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return (0,)
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = psub(pmul(rows[i][j], pivot), pmul(rows[i][k], rows[k][j]))
                rows[i][j] = pdivexact(num, prev)
        prev = pivot
    det = rows[n - 1][n - 1]
    return det if sign == 1 else tuple(-x for x in det)


def charlike_poly(n: int, sign: int) -> Poly:
    """det(I + t*T) as an integer polynomial for the oriented n-cycle."""
    t = cycle_skew(n, sign)
    rows = [
        [(1,) if i == j else ((0, t[i][j]) if t[i][j] else (0,)) for j in range(n)]
        for i in range(n)
    ]
    return poly_determinant(rows)


def matching_poly_identity_check(n: int) -> dict:
    """Compare det(I + t*T) against the cycle matching polynomial.

    Odd n: both orientations give exactly the matching polynomial.
    Even n: the 1->n closing edge adds 2t^n, the n->1 edge subtracts 2t^n.
    """
    if not 3 <= n <= 16:
        raise ParameterError("symbolic expansion supported for 3 <= n <= 16")
    phi = cycle_matching_polynomial(n)
    expanded = [0] * (n + 1)
    for k, c in enumerate(phi):
        expanded[2 * k] = c
    phi_poly = _ptrim(expanded)

    det_plus = charlike_poly(n, 1)
    det_minus = charlike_poly(n, -1)
    if n % 2 == 1:
        expected_plus = expected_minus = phi_poly
    else:
        bump = [0] * (n + 1)
        bump[n] = 2
        expected_plus = padd(phi_poly, tuple(bump))
        expected_minus = psub(phi_poly, tuple(bump))
    ok = det_plus == expected_plus and det_minus == expected_minus
    return {
        "n": n,
        "ok": ok,
        "det_plus": det_plus,
        "det_minus": det_minus,
        "matching_poly": phi_poly,
    }


# ---------------------------------------------------------------------------
# Monotonicity of det(I - T^2)^(1/n)
# ---------------------------------------------------------------------------

def _root_compare(n_a: int, det_a: int, n_b: int, det_b: int) -> int:
    """Compare det_a^(1/n_a) with det_b^(1/n_b) by cross-powering integers."""
    lhs = det_a ** n_b
    rhs = det_b ** n_a
    return (lhs > rhs) - (lhs < rhs)


def sequence_monotonicity_check(n_max: int) -> dict:
    """Exact check that a_n = det(I - T_{n,+}^2)^(1/n) increases along odd n,
    decreases along even n, stays within [a_3, a_4], and is at most 20^(1/3)
    for n >= 5 with equality only at n = 6."""
    if n_max < 8:
        raise ParameterError("needs n_max >= 8")
    dets = {n: lucas_det(n, 1) for n in range(3, n_max + 1)}

    odd = [n for n in range(3, n_max + 1, 2)]
    even = [n for n in range(4, n_max + 1, 2)]
    odd_increasing = all(
        _root_compare(a, dets[a], b, dets[b]) < 0 for a, b in zip(odd, odd[1:])
    )
    even_decreasing = all(
        _root_compare(a, dets[a], b, dets[b]) > 0 for a, b in zip(even, even[1:])
    )
    within_band = all(
        _root_compare(3, dets[3], n, dets[n]) <= 0
        and _root_compare(n, dets[n], 4, dets[4]) <= 0
        for n in range(3, n_max + 1)
    )
    # a_n <= 20^(1/3) for n >= 5, equality exactly at n = 6: det^3 <= 20^n.
    cap_ok = True
    for n in range(5, n_max + 1):
        cmp = (dets[n] ** 3 > 20 ** n) - (dets[n] ** 3 < 20 ** n)
        if cmp > 0 or (cmp == 0) != (n == 6):
            cap_ok = False
    ok = odd_increasing and even_decreasing and within_band and cap_ok
    return {
        "n_max": n_max,
        "ok": ok,
        "odd_increasing": odd_increasing,
        "even_decreasing": even_decreasing,
        "within_band": within_band,
        "max_at_6": cap_ok,
    }


def root_sequence_value(n: int) -> float:
    """Float display value of det(I - T_{n,+}^2)^(1/n); not used in any proof."""
    det = lucas_det(n, 1)
    return det ** (1.0 / n) if det.bit_length() < 1000 else 2.0 ** (det.bit_length() / n)


GOLDEN_SQUARED = ((1 + 5 ** 0.5) / 2) ** 2
