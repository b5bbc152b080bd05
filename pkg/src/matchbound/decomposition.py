"""Nested-ring (circular / semi-circular) structure of embedded planar graphs.

A decomposition splits the vertex set into concentric induced cycles
U_1..U_k (inner to outer) plus an inner remainder V_0.  Detection peels rings
greedily from the outer face inward.  A pendant edge on the outer boundary is
traversed twice by the face walk; such edges are treated as tucked inside the
ring (the subgraph can be re-realized with them in the disk), so a peel step
removes only the once-traversed boundary cycle.  Consequently V_0 may keep
edges into U_2 in such tucked cases; validation allows that, while ring-ring
contacts must stay between consecutive rings.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .embedding import Face, PlanarEmbedding, trace_faces
from .errors import ParameterError
from .graphs import Graph, _normalize_edge


@dataclass(frozen=True)
class CircularDecomposition:
    """Ordered rings (inner to outer) plus the inner vertex set V_0."""

    v0: frozenset[int]
    rings: tuple[tuple[int, ...], ...]

    @property
    def is_circular(self) -> bool:
        return not self.v0

    def ring_sizes(self) -> list[int]:
        return [len(r) for r in self.rings]

    def all_vertices(self) -> frozenset[int]:
        return self.v0 | {v for ring in self.rings for v in ring}

    def to_json_dict(self) -> dict:
        return {"v0": sorted(self.v0), "rings": [list(r) for r in self.rings]}


def _is_induced_cycle(g: Graph, ring: Sequence[int]) -> bool:
    if len(ring) < 3 or len(set(ring)) != len(ring):
        return False
    ring_set = set(ring)
    for i, v in enumerate(ring):
        if not g.has_edge(v, ring[(i + 1) % len(ring)]):
            return False
        if len(g.adjacency_sets[v] & ring_set) != 2:
            return False
    return True


def validate_decomposition(g: Graph, cd: CircularDecomposition) -> None:
    """Check the structural invariants of a decomposition against its graph."""
    if not g.is_connected():
        raise ParameterError("decompositions are defined for connected graphs")
    counts = Counter(v for ring in cd.rings for v in ring)
    counts.update(cd.v0)
    if set(counts) != set(g.vertices()) or any(c != 1 for c in counts.values()):
        raise ParameterError("rings and V0 must partition the vertex set")
    level = {}
    for j, ring in enumerate(cd.rings, start=1):
        if not _is_induced_cycle(g, ring):
            raise ParameterError(f"ring {j} is not an induced cycle")
        for v in ring:
            level[v] = j
    for v in cd.v0:
        level[v] = 0
    for u, v in g.edges:
        gap = abs(level[u] - level[v])
        if level[u] and level[v] and gap > 1:
            raise ParameterError(f"edge ({u},{v}) skips rings {level[u]} and {level[v]}")
        # V0 normally reaches only ring 1; a ring tucked over pendant material
        # can leave V0 edges into ring 2 as well.
        if min(level[u], level[v]) == 0 and gap > 2:
            raise ParameterError(f"edge ({u},{v}) connects V0 too far out (ring {gap})")


def _once_traversed_cycle(g: Graph, remaining: set[int], walk: Face) -> list[int] | None:
    """The simple induced cycle formed by boundary edges traversed exactly once,
    or None when no single such cycle exists."""
    counts = Counter(_normalize_edge(a, b) for a, b in walk.walk)
    once = [e for e, c in counts.items() if c == 1]
    if len(once) < 3:
        return None
    adj: dict[int, list[int]] = {}
    for u, v in once:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if any(len(ns) != 2 for ns in adj.values()):
        return None
    start = min(adj)
    ring = [start]
    prev, cur = None, start
    while True:
        a, b = adj[cur]
        nxt = b if a == prev else a
        if nxt == start:
            break
        ring.append(nxt)
        prev, cur = cur, nxt
        if len(ring) > len(once):
            return None
    if len(ring) != len(once):            # several disjoint cycles
        return None
    ring_set = set(ring)
    for v in ring:
        if len(g.adjacency_sets[v] & ring_set & remaining) != 2:
            return None                   # chord inside the remainder
    return ring


def detect_semicircular(emb: PlanarEmbedding,
                        hint: CircularDecomposition | None = None
                        ) -> CircularDecomposition | None:
    """Peel induced boundary cycles from the outer face inward.

    Returns the decomposition (rings inner to outer), or None when not even
    one boundary ring can be peeled.  A caller-provided hint is validated and
    returned unchanged.  A None result means "not detected", never a proof
    that no semi-circular realization exists.
    """
    emb.validate()
    g = emb.graph
    if not g.is_connected():
        raise ParameterError("semi-circular detection needs a connected graph")
    if hint is not None:
        validate_decomposition(g, hint)
        return hint

    remaining = set(g.vertices())
    rings_out_to_in: list[tuple[int, ...]] = []
    outer = emb.outer_face
    rotation = emb.rotation

    while True:
        ring = _once_traversed_cycle(g, remaining, outer)
        if ring is None:
            break
        rings_out_to_in.append(tuple(ring))
        prev_remaining = set(remaining)
        remaining -= set(ring)
        if not remaining:
            break

        sub_rot = {
            v: tuple(u for u in rotation[v] if u in remaining)
            for v in remaining
        }
        sub_edges = [e for e in g.edges if e[0] in remaining and e[1] in remaining]
        if not sub_edges:
            break
        sub_graph_prev = Graph.from_edges(g.n, [e for e in g.edges
                                                if e[0] in prev_remaining and e[1] in prev_remaining])
        prev_rot = {
            v: tuple(u for u in rotation[v] if u in prev_remaining)
            for v in prev_remaining
        }
        prev_faces = trace_faces(sub_graph_prev, prev_rot)
        ring_set = set(ring)
        seeds = {
            d
            for f in prev_faces
            if f.vertex_set() & ring_set
            for d in f.walk
            if d[0] in remaining and d[1] in remaining
        }
        sub_graph = Graph.from_edges(g.n, sub_edges)
        sub_faces = trace_faces(sub_graph, sub_rot)
        containing = {f.key for f in sub_faces for d in f.walk if d in seeds}
        if len(containing) != 1:
            break
        face_by_key = {f.key: f for f in sub_faces}
        outer = face_by_key[containing.pop()]

    if not rings_out_to_in:
        return None
    cd = CircularDecomposition(frozenset(remaining), tuple(reversed(rings_out_to_in)))
    validate_decomposition(g, cd)
    return cd
