"""Constructive fullerene families: capped ring cylinders (pentacap/hexacap),
the cap-extension construction, fullerene validity checks, and the ring
structure of leapfrog transforms.

Ring vertex numbering is ring-major and clockwise within each ring: ring 1 is
the inner k-gon 1..k, then each 2k-ring in order, then the outer k-gon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .decomposition import CircularDecomposition, detect_semicircular, validate_decomposition
from .embedding import PlanarEmbedding, build_embedding, embed_from_coordinates, leapfrog
from .errors import EmbeddingError, ParameterError
from .graphs import Graph

Family = Literal["pentacap", "hexacap"]
_K = {"pentacap": 5, "hexacap": 6}


@dataclass(frozen=True)
class GeneratedFullerene:
    graph: Graph
    embedding: PlanarEmbedding
    decomposition: CircularDecomposition

    @property
    def n(self) -> int:
        return self.graph.n


def capped_rings(family: Family, layers: int) -> GeneratedFullerene:
    """Circular fullerene with end rings C_k and `layers` middle rings C_2k.

    Vertex count is 2k(layers+1).  layers=1 with k=5 is the dodecahedron.
    """
    if family not in _K:
        raise ParameterError(f"unknown family {family!r}")
    k = _K[family]
    if layers < 1:
        raise ParameterError("needs at least one middle ring (layers >= 1)")

    rings: list[tuple[int, ...]] = [tuple(range(1, k + 1))]
    base = k
    for _ in range(layers):
        rings.append(tuple(range(base + 1, base + 2 * k + 1)))
        base += 2 * k
    rings.append(tuple(range(base + 1, base + k + 1)))
    n = base + k

    edges: list[tuple[int, int]] = []
    for ring in rings:
        edges += [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]
    # Inner cap: ring-1 vertex i meets the odd slot 2i-1 of ring 2.
    edges += [(rings[0][i], rings[1][2 * i]) for i in range(k)]
    # Middle layers: even slot 2i of one ring meets odd slot 2i-1 of the next.
    for j in range(1, layers):
        edges += [(rings[j][2 * i + 1], rings[j + 1][2 * i]) for i in range(k)]
    # Outer cap: even slot 2i of the last middle ring meets outer vertex i.
    edges += [(rings[layers][2 * i + 1], rings[layers + 1][i]) for i in range(k)]
    graph = Graph.from_edges(n, edges)

    coords: dict[int, tuple[float, float]] = {}
    for r, ring in enumerate(rings, start=1):
        size = len(ring)
        for pos, v in enumerate(ring):
            if size == k and r > 1:
                theta = 2 * math.pi * (2 * pos + 1) / (2 * k)   # align with even slots
            else:
                theta = 2 * math.pi * pos / size
            coords[v] = (r * math.cos(theta), r * math.sin(theta))
    emb = embed_from_coordinates(graph, coords, outer_hint=frozenset(rings[-1]))
    cd = CircularDecomposition(frozenset(), tuple(rings))
    validate_decomposition(graph, cd)
    return GeneratedFullerene(graph, emb, cd)


def pentacap(layers: int) -> GeneratedFullerene:
    return capped_rings("pentacap", layers)


def hexacap(layers: int) -> GeneratedFullerene:
    return capped_rings("hexacap", layers)


def validate_fullerene(emb: PlanarEmbedding) -> dict:
    """Cubic, connected, faces all pentagons/hexagons, exactly 12 pentagons,
    and the Euler counts n = 2h + 20, m = 3h + 30."""
    g = emb.graph
    reasons = []
    if not g.is_connected():
        reasons.append("not connected")
    if any(g.degree(v) != 3 for v in g.vertices()):
        reasons.append("not 3-regular")
    lengths = [len(f) for f in emb.faces]
    pentagons = sum(1 for x in lengths if x == 5)
    hexagons = sum(1 for x in lengths if x == 6)
    if pentagons + hexagons != len(lengths):
        reasons.append("has a face that is neither a pentagon nor a hexagon")
    if pentagons != 12:
        reasons.append(f"{pentagons} pentagons instead of 12")
    if not reasons:
        if g.n != 2 * hexagons + 20 or g.m != 3 * hexagons + 30:
            reasons.append("Euler counts n=2h+20, m=3h+30 failed")
    return {
        "is_fullerene": not reasons,
        "pentagons": pentagons,
        "hexagons": hexagons,
        "reasons": reasons,
    }


def _relabel(graph: Graph, emb: PlanarEmbedding, cd: CircularDecomposition,
             mapping: dict[int, int]) -> GeneratedFullerene:
    new_graph = Graph.from_edges(graph.n, [(mapping[u], mapping[v]) for u, v in graph.edges])
    rotation = {mapping[v]: tuple(mapping[u] for u in rot)
                for v, rot in emb.rotation.items()}
    outer_set = frozenset(mapping[v] for v in emb.outer_face.vertex_set())
    new_emb = build_embedding(new_graph, rotation, outer_hint=outer_set)
    new_cd = CircularDecomposition(
        frozenset(mapping[v] for v in cd.v0),
        tuple(tuple(mapping[v] for v in ring) for ring in cd.rings),
    )
    validate_decomposition(new_graph, new_cd)
    return GeneratedFullerene(new_graph, new_emb, new_cd)


def extend_cap(fullerene: GeneratedFullerene) -> GeneratedFullerene:
    """Grow a circular fullerene whose first rings are C_k, C_2k by one cap:
    subdivide each inner-ring edge with a new vertex u_i and hang a fresh
    inner ring w_1..w_k with spokes u_i - w_i.  Adds 2k vertices.

    Output is renumbered ring-major and validated as a fullerene.
    """
    g, emb, cd = fullerene.graph, fullerene.embedding, fullerene.decomposition
    if cd.v0:
        raise ParameterError("cap extension needs a circular fullerene (empty V0)")
    first, second = cd.rings[0], cd.rings[1]
    k = len(first)
    if k not in (5, 6) or len(second) != 2 * k:
        raise ParameterError("first rings must be C_k, C_2k with k in {5, 6}")

    n = g.n
    u = [n + 1 + i for i in range(k)]            # u[i] splits edge (first[i], first[i+1])
    w = [n + k + 1 + i for i in range(k)]

    ring1_edges = {tuple(sorted((first[i], first[(i + 1) % k]))) for i in range(k)}
    edges = [e for e in g.edges if e not in ring1_edges]
    for i in range(k):
        edges += [(first[i], u[i]), (u[i], first[(i + 1) % k]), (u[i], w[i])]
        edges += [(w[i], w[(i + 1) % k])]
    new_graph = Graph.from_edges(n + 2 * k, edges)

    def substituted(vertex: int, rot: tuple[int, ...]) -> tuple[int, ...]:
        i = first.index(vertex)
        prev_u, next_u = u[(i - 1) % k], u[i]
        out = []
        for x in rot:
            if x == first[(i + 1) % k]:
                out.append(next_u)
            elif x == first[(i - 1) % k]:
                out.append(prev_u)
            else:
                out.append(x)
        return tuple(out)

    base_rot = {v: (substituted(v, rot) if v in first else rot)
                for v, rot in emb.rotation.items()}

    # The cyclic orders at the new vertices depend on the drawing chirality of
    # the input; try both and keep the one that yields a planar fullerene map.
    last_error: Exception | None = None
    for u_flip in (False, True):
        for w_flip in (False, True):
            rot = dict(base_rot)
            for i in range(k):
                a, b = first[i], first[(i + 1) % k]
                rot[u[i]] = (a, w[i], b) if not u_flip else (a, b, w[i])
                wn, wp = w[(i + 1) % k], w[(i - 1) % k]
                rot[w[i]] = (u[i], wn, wp) if not w_flip else (u[i], wp, wn)
            try:
                new_emb = build_embedding(new_graph, rot,
                                          outer_hint=emb.outer_face.vertex_set())
            except EmbeddingError as exc:
                last_error = exc
                continue
            if not validate_fullerene(new_emb)["is_fullerene"]:
                continue
            new_first = []
            for i in range(k):
                new_first += [first[i], u[i]]
            cd_new = CircularDecomposition(
                frozenset(), (tuple(w), tuple(new_first)) + cd.rings[1:])
            mapping = _ring_major_mapping(cd_new)
            return _relabel(new_graph, new_emb, cd_new, mapping)
    raise EmbeddingError(f"cap extension failed to embed: {last_error}")


def _ring_major_mapping(cd: CircularDecomposition) -> dict[int, int]:
    mapping: dict[int, int] = {}
    nxt = 1
    for ring in cd.rings:
        for v in ring:
            mapping[v] = nxt
            nxt += 1
    for v in sorted(cd.v0):
        mapping[v] = nxt
        nxt += 1
    return mapping


def leapfrog_ring_profile(family: Family, layers: int) -> dict:
    """Leapfrog a capped-ring fullerene and compare its detected ring structure
    with the predicted profile.

    Odd layer count: circular with rings [k, 3k, 4k x (3*layers-1)/2, 3k, k].
    Even layer count: semi-circular, k vertices left inside, rings
    [k, 4k x 3*layers/2, 3k, k].
    """
    k = _K[family]
    gen = capped_rings(family, layers)
    le_graph, le_emb = leapfrog(gen.embedding)
    fullerene = validate_fullerene(le_emb)
    cd = detect_semicircular(le_emb)
    if layers % 2 == 1:
        expected = [k, 3 * k] + [4 * k] * ((3 * layers - 1) // 2) + [3 * k, k]
        expected_v0 = 0
    else:
        expected = [k] + [4 * k] * (3 * layers // 2) + [3 * k, k]
        expected_v0 = k
    found = cd.ring_sizes() if cd is not None else []
    v0 = len(cd.v0) if cd is not None else le_graph.n
    return {
        "n": le_graph.n,
        "is_fullerene": fullerene["is_fullerene"],
        "circular": cd is not None and cd.is_circular,
        "rings": found,
        "v0_size": v0,
        "expected_rings": expected,
        "expected_v0": expected_v0,
        "matches": found == expected and v0 == expected_v0,
        "decomposition": cd,
        "graph": le_graph,
        "embedding": le_emb,
    }
