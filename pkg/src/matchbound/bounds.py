"""Upper-bound evaluators for perfect-matching counts, with applicability
checking and a per-graph comparison harness.

Every bound is carried as a log2 float for overflow-safe reporting; where the
bound is the fourth root of an integer, that integer is kept alongside so
equality cases can be certified exactly (count^4 compared as integers).
A bound function raises ParameterError when its hypotheses fail; compare_all
turns that into a "not applicable" entry with the reason.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from .circulants import best_ring_block_det
from .decomposition import CircularDecomposition, detect_semicircular
from .embedding import PlanarEmbedding, check_edge_bound, embedding_girth
from .errors import BoundViolationError, ConsistencyError, ParameterError
from .graphs import Graph, WeightedGraph, INFINITY, has_short_cycles, square_graph
from .fullerenes import validate_fullerene
from .matchings import (
    DEFAULT_ORACLE_LIMIT,
    Matching,
    enumerate_perfect_matchings,
    greedy_maximal_matching,
)
from .pfaffian import (
    Orientation,
    count_by_pfaffian,
    count_from_orientation,
    exact_determinant,
    gram_matrix,
    kasteleyn_orient,
    principal_submatrix,
)

LOG2_TOLERANCE = 1e-9


def log2_int(value: int) -> float:
    """log2 of a nonnegative big integer (-inf for zero)."""
    if value < 0:
        raise ParameterError("log2 of a negative value")
    if value == 0:
        return float("-inf")
    if value.bit_length() <= 900:
        return math.log2(value)
    shift = value.bit_length() - 53
    return math.log2(value >> shift) + shift


def log2_fraction(value: int | Fraction) -> float:
    if isinstance(value, Fraction):
        return log2_int(value.numerator) - log2_int(value.denominator)
    return log2_int(value)


# ---------------------------------------------------------------------------
# Individual bounds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FourthRootBound:
    """A bound of the form (exact_pow4)^(1/4); exact_pow4 may be a Fraction."""

    log2_value: float
    exact_pow4: int | Fraction

    @staticmethod
    def of(exact_pow4: int | Fraction) -> "FourthRootBound":
        return FourthRootBound(log2_fraction(exact_pow4) / 4.0, exact_pow4)


def hadamard_bound(g: Graph | WeightedGraph) -> FourthRootBound:
    """Product of (squared-weight) degrees to the 1/4.

    Valid for pfaffian (in particular planar) graphs; the caller asserts that
    hypothesis.  A degree-0 vertex drives the bound to zero.
    """
    if isinstance(g, WeightedGraph):
        prod: int | Fraction = Fraction(1)
        for v in g.base.vertices():
            prod *= g.square_weighted_degree(v)
    else:
        prod = 1
        for v in g.vertices():
            prod *= g.degree(v)
    return FourthRootBound.of(prod)


def bregman_bound(g: Graph) -> float:
    """log2 of prod (d(v)!)^(1/(2 d(v))); applies to every simple graph."""
    total = 0.0
    for v in g.vertices():
        d = g.degree(v)
        if d == 0:
            return float("-inf")
        total += log2_int(math.factorial(d)) / (2 * d)
    return total


@dataclass(frozen=True)
class GirthBound:
    log2_value: float          # (n/4) log2( 2g'(n-2) / ((g'-2) n) )
    simplified_log2: float     # (n/4) log2( 2g'/(g'-2) )
    half_n_log2: float | None  # n/2 when g' >= 4, else None
    face_girth: int

    def values(self) -> dict:
        return {
            "simplified_log2": self.simplified_log2,
            "half_n_log2": self.half_n_log2,
            "face_girth": self.face_girth,
        }


def girth_bound(emb: PlanarEmbedding) -> GirthBound:
    """Face-girth upper bound for an embedded planar graph."""
    g_prime = embedding_girth(emb)
    if g_prime == INFINITY:
        raise ParameterError("girth bound needs a graph with a cycle")
    if g_prime < 3:
        raise ParameterError("face girth below 3")
    n = emb.graph.n
    main = (n / 4.0) * math.log2(2 * g_prime * (n - 2) / ((g_prime - 2) * n))
    simplified = (n / 4.0) * math.log2(2 * g_prime / (g_prime - 2))
    half = n / 2.0 if g_prime >= 4 else None
    return GirthBound(main, simplified, half, g_prime)


def hf_square_bound(g: Graph, m_prime: Matching) -> FourthRootBound:
    """Block bound from a matching in the square graph: matched pairs
    contribute d(u)d(v)-1, uncovered vertices contribute d(v).

    Needs a pfaffian graph with no 4-cycles (caller asserts pfaffian-ness;
    the 4-cycle check runs here).
    """
    if has_short_cycles(g)["has4"]:
        raise ParameterError("square-graph bound needs a graph with no 4-cycles")
    sq = square_graph(g)
    if not m_prime.is_matching_in(sq):
        raise ParameterError("m_prime is not a matching in the square graph")
    prod = 1
    for u, v in m_prime.pairs:
        prod *= g.degree(u) * g.degree(v) - 1
    for v in g.vertices():
        if v not in m_prime.covered:
            prod *= g.degree(v)
    return FourthRootBound.of(prod)


def fullerene_hamiltonian_cases(n: int, has_hamiltonian: bool | None) -> list[dict]:
    """Closed-form fullerene bounds from long cycles in the square graph.

    The long-cycle case applies unconditionally; the two hamiltonian cases
    need the caller to certify a hamiltonian cycle exists.
    """
    if n < 20 or n % 2 == 1:
        raise ParameterError("fullerene bounds need even n >= 20")
    cases = []
    if has_hamiltonian:
        if n % 4 == 0:
            cases.append({
                "name": "fullerene_hamiltonian",
                "log2_value": 3.0 * n / 8.0,
                "exact_pow4": 8 ** (n // 4) if n % 8 == 0 else None,
            })
        else:
            cases.append({
                "name": "fullerene_hamiltonian",
                "log2_value": 3.0 * (n - 2) / 8.0 + 0.5 * math.log2(3.0),
                "exact_pow4": None,
            })
    q = (5 * n - 4) // 12
    cases.append({
        "name": "fullerene_long_cycle",
        "log2_value": 0.75 * q + ((n - 2 * q) / 4.0) * math.log2(3.0),
        "exact_pow4": 8 ** q * 3 ** (n - 2 * q),
    })
    return cases


def pentacap_lower_bound(n: int) -> FourthRootBound:
    """5^((n-20)/10), the known lower envelope for capped-ring fullerenes."""
    if n < 20:
        raise ParameterError("lower envelope defined for n >= 20")
    log2_value = (n - 20) / 10.0 * math.log2(5.0)
    if (n - 20) % 10 == 0:
        exact = 5 ** ((n - 20) // 10)
        return FourthRootBound(log2_value, exact ** 4)
    return FourthRootBound(log2_value, 0)


# ---------------------------------------------------------------------------
# Decomposition-based bounds
# ---------------------------------------------------------------------------

def hf_block_bound(emb_or_gram, cd: CircularDecomposition,
                   orientation: Orientation | None = None) -> FourthRootBound:
    """Hadamard-Fischer block bound: product over the decomposition blocks
    (V0 + ring 1, then each outer ring) of det(-S^2) restricted to the block."""
    if isinstance(emb_or_gram, PlanarEmbedding):
        o = orientation if orientation is not None else kasteleyn_orient(emb_or_gram)
        b = gram_matrix(o)
    else:
        b = emb_or_gram
    blocks: list[list[int]] = [sorted(cd.v0 | set(cd.rings[0]))]
    blocks += [sorted(ring) for ring in cd.rings[1:]]
    prod = 1
    for block in blocks:
        det = exact_determinant(principal_submatrix(b, block))
        if det < 0:
            raise BoundViolationError("Gram block determinant came out negative")
        prod *= det
    return FourthRootBound.of(prod)


def ring_conditions_ok(g: Graph, cd: CircularDecomposition) -> tuple[bool, str]:
    """Hypotheses for replacing ring blocks by cycle-skew determinants: no
    short cycles, and no vertex outside a ring may see that ring twice
    (applies to all rings when V0 is empty, to rings 2..k otherwise)."""
    short = has_short_cycles(g)
    if short["has3"] or short["has4"]:
        return False, "graph has 3- or 4-cycles"
    start = 0 if not cd.v0 else 1
    for idx in range(start, len(cd.rings)):
        ring_set = set(cd.rings[idx])
        for w in g.vertices():
            if w in ring_set:
                continue
            if len(g.adjacency_sets[w] & ring_set) > 1:
                return False, (f"vertex {w} has two neighbors on ring {idx + 1}; "
                               "ring block is not a pure cycle block")
    return True, ""


def ring_refined_bound(g: Graph, cd: CircularDecomposition) -> FourthRootBound:
    """Ring-by-ring refinement: each qualifying ring block contributes
    max over the two closing-edge signs of det(D_c - 2I - T^2); the inner
    block falls back to the plain degree product when V0 is nonempty."""
    ok, reason = ring_conditions_ok(g, cd)
    if not ok:
        raise ParameterError(reason)
    prod = 1
    if cd.v0:
        for v in sorted(cd.v0 | set(cd.rings[0])):
            prod *= g.degree(v)
        outer_rings = cd.rings[1:]
    else:
        outer_rings = cd.rings
    for ring in outer_rings:
        diag = tuple(g.degree(v) for v in ring)
        prod *= best_ring_block_det(len(ring), diag)
    return FourthRootBound.of(prod)


def semicircular_closed_form(g: Graph, cd: CircularDecomposition) -> dict:
    """Cubic-graph closed forms: 20^(n/12) for circular graphs, otherwise
    20^((n-n1)/12) * 3^(n1/4) where n1 counts ring 1 plus V0."""
    if any(g.degree(v) != 3 for v in g.vertices()):
        raise ParameterError("closed form needs a cubic graph")
    ok, reason = ring_conditions_ok(g, cd)
    if not ok:
        raise ParameterError(reason)
    n = g.n
    if cd.is_circular:
        return {
            "log2_value": (n / 12.0) * math.log2(20.0),
            "case": "circular",
            "n1": len(cd.rings[0]),
        }
    n1 = len(cd.rings[0]) + len(cd.v0)
    return {
        "log2_value": ((n - n1) / 12.0) * math.log2(20.0) + (n1 / 4.0) * math.log2(3.0),
        "case": "semi_circular",
        "n1": n1,
    }


# ---------------------------------------------------------------------------
# Report assembly
# ---------------------------------------------------------------------------

@dataclass
class BoundEntry:
    name: str
    kind: str = "upper"                 # "upper" or "lower"
    applicable: bool = False
    reason: str | None = None
    log2_value: float | None = None
    exact_pow4: int | Fraction | None = None
    tightness: float | None = None      # log2(bound) - log2(count)
    extra: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "applicable": self.applicable,
            "reason": self.reason,
            "log2_value": self.log2_value,
            "exact_pow4": str(self.exact_pow4) if self.exact_pow4 is not None else None,
            "tightness": self.tightness,
            "extra": {k: (str(v) if isinstance(v, (int, Fraction)) and not isinstance(v, bool)
                          else v) for k, v in self.extra.items()},
        }


@dataclass
class BoundReport:
    graph_id: str
    n: int
    m: int
    exact_count: int | None
    count_method: str | None
    count_log2: float | None
    entries: list[BoundEntry]

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def to_json_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "exact_count": str(self.exact_count) if self.exact_count is not None else None,
            "count_method": self.count_method,
            "count_log2": self.count_log2,
            "entries": [e.to_json_dict() for e in self.entries],
        }


CSV_HEADER = ["graph_id", "n", "m", "exact_count", "bound", "kind", "applicable",
              "reason", "log2_value", "tightness"]


def report_csv_rows(report: BoundReport) -> list[list[str]]:
    rows = []
    for e in report.entries:
        rows.append([
            report.graph_id,
            str(report.n),
            str(report.m),
            "" if report.exact_count is None else str(report.exact_count),
            e.name,
            e.kind,
            "yes" if e.applicable else "no",
            e.reason or "",
            "" if e.log2_value is None else f"{e.log2_value:.6f}",
            "" if e.tightness is None else f"{e.tightness:.6f}",
        ])
    return rows


def exact_count(g: Graph, embedding: PlanarEmbedding | None = None,
                orientation: Orientation | None = None,
                *, max_oracle: int = DEFAULT_ORACLE_LIMIT) -> tuple[int | None, str | None]:
    """Count perfect matchings by every available exact route and cross-check.

    Pfaffian route: FKT on the embedding, or an attested pfaffian orientation.
    Oracle route: exhaustive enumeration within the size guard.
    """
    pfaffian_count = None
    if embedding is not None:
        pfaffian_count = count_by_pfaffian(embedding)
    elif orientation is not None:
        pfaffian_count = 0 if g.n % 2 else count_from_orientation(orientation)
    oracle_count = None
    if g.n <= max_oracle:
        oracle_count = enumerate_perfect_matchings(g, max_vertices=max_oracle)
    if pfaffian_count is not None and oracle_count is not None:
        if pfaffian_count != oracle_count:
            raise ConsistencyError(
                f"pfaffian count {pfaffian_count} != oracle count {oracle_count}")
        return pfaffian_count, "both"
    if pfaffian_count is not None:
        return pfaffian_count, "pfaffian"
    if oracle_count is not None:
        return oracle_count, "oracle"
    return None, None


def compare_all(g: Graph, *, graph_id: str = "",
                embedding: PlanarEmbedding | None = None,
                pfaffian_orientation: Orientation | None = None,
                has_hamiltonian: bool | None = None,
                pentacap_lower: bool = False,
                max_oracle: int = DEFAULT_ORACLE_LIMIT,
                tolerance: float = LOG2_TOLERANCE) -> BoundReport:
    """Evaluate every applicable bound, the exact count, and soundness.

    Raises BoundViolationError when the exact count exceeds an applicable
    upper bound (within log2 tolerance): a proved inequality failing means a
    bug, never a property of the input.
    """
    count, method = exact_count(g, embedding, pfaffian_orientation, max_oracle=max_oracle)
    count_log2 = log2_int(count) if count is not None else None
    entries: list[BoundEntry] = []
    pfaffian_certified = embedding is not None or pfaffian_orientation is not None

    def add(name: str, kind: str = "upper", **kwargs) -> BoundEntry:
        e = BoundEntry(name=name, kind=kind, **kwargs)
        entries.append(e)
        return e

    # Hadamard degree bound (hypothesis: pfaffian orientation exists).
    if pfaffian_certified:
        hb = hadamard_bound(g)
        add("hadamard", applicable=True, log2_value=hb.log2_value, exact_pow4=hb.exact_pow4)
    else:
        add("hadamard", reason="no pfaffian certificate (embedding or attested orientation)")

    add("bregman", applicable=True, log2_value=bregman_bound(g))

    if embedding is not None:
        try:
            gb = girth_bound(embedding)
            edge_bound = check_edge_bound(embedding)
            add("girth", applicable=True, log2_value=gb.log2_value,
                extra={**gb.values(),
                       "edge_bound_holds": edge_bound["holds"],
                       "edge_bound_equality": edge_bound["equality"]})
        except ParameterError as exc:
            add("girth", reason=str(exc))
    else:
        add("girth", reason="no embedding")

    if pfaffian_certified and g.is_connected():
        try:
            m_prime = greedy_maximal_matching(square_graph(g))
            hsb = hf_square_bound(g, m_prime)
            add("hf_square", applicable=True, log2_value=hsb.log2_value,
                exact_pow4=hsb.exact_pow4, extra={"m_prime_size": m_prime.size()})
        except ParameterError as exc:
            add("hf_square", reason=str(exc))
    else:
        add("hf_square", reason="needs a connected pfaffian graph")

    is_fullerene = embedding is not None and validate_fullerene(embedding)["is_fullerene"]
    if is_fullerene:
        for case in fullerene_hamiltonian_cases(g.n, has_hamiltonian):
            add(case["name"], applicable=True, log2_value=case["log2_value"],
                exact_pow4=case["exact_pow4"])
    else:
        add("fullerene_long_cycle", reason="not a validated fullerene")

    cd = None
    if embedding is not None and g.is_connected():
        cd = detect_semicircular(embedding)
    if cd is not None:
        orientation = kasteleyn_orient(embedding)
        hfb = hf_block_bound(embedding, cd, orientation)
        add("hf_block", applicable=True, log2_value=hfb.log2_value,
            exact_pow4=hfb.exact_pow4,
            extra={"rings": cd.ring_sizes(), "v0_size": len(cd.v0)})
        try:
            rrb = ring_refined_bound(g, cd)
            add("ring_refined", applicable=True, log2_value=rrb.log2_value,
                exact_pow4=rrb.exact_pow4)
        except ParameterError as exc:
            add("ring_refined", reason=str(exc))
        try:
            closed = semicircular_closed_form(g, cd)
            add("semicircular_closed_form", applicable=True,
                log2_value=closed["log2_value"],
                extra={"case": closed["case"], "n1": closed["n1"]})
        except ParameterError as exc:
            add("semicircular_closed_form", reason=str(exc))
    else:
        reason = "no embedding" if embedding is None else "no ring structure detected"
        add("hf_block", reason=reason)
        add("ring_refined", reason=reason)
        add("semicircular_closed_form", reason=reason)

    if pentacap_lower:
        plb = pentacap_lower_bound(g.n)
        add("pentacap_lower", kind="lower", applicable=True,
            log2_value=plb.log2_value, exact_pow4=plb.exact_pow4 or None)

    # Soundness sweep plus tightness bookkeeping.
    if count is not None:
        for e in entries:
            if not e.applicable or e.log2_value is None:
                continue
            if e.kind == "upper":
                if count > 0 and count_log2 > e.log2_value + tolerance:
                    raise BoundViolationError(
                        f"{graph_id}: count 2^{count_log2:.6f} exceeds {e.name} "
                        f"bound 2^{e.log2_value:.6f}")
                e.tightness = (e.log2_value - count_log2) if count > 0 else None
            else:
                if count_log2 < e.log2_value - tolerance:
                    raise BoundViolationError(
                        f"{graph_id}: count 2^{count_log2} fell below lower bound "
                        f"{e.name} 2^{e.log2_value:.6f}")
                e.tightness = count_log2 - e.log2_value

    return BoundReport(graph_id, g.n, g.m, count, method, count_log2, entries)


def regular_sharpness(g: Graph, count: int) -> str | None:
    """For a d-regular graph, compare count^4 with d^n exactly.

    Returns "equal", "below", or "above"; None when the graph is irregular.
    """
    degs = set(g.degrees())
    if len(degs) != 1:
        return None
    d = degs.pop()
    lhs = count ** 4
    rhs = d ** g.n
    if lhs == rhs:
        return "equal"
    return "below" if lhs < rhs else "above"
