"""Built-in corpus: the named graphs every batch command and the acceptance
suite run over, each with its embedding or pfaffian attestation where one is
available.

The K4xK2 orientation below was found by exhaustive sweep (its skew
determinant equals 256 = 16^2, the squared matching count); it is shipped as
a fixture because the FKT construction needs an embedding and K4xK2 is not
planar.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .embedding import PlanarEmbedding, build_embedding, embed_from_coordinates, leapfrog
from .fullerenes import capped_rings
from .graphs import (
    Graph,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    octahedron,
)
from .pfaffian import Orientation, orientation_from_pairs

K4XK2_PFAFFIAN_PAIRS = (
    (1, 5), (1, 7), (2, 1), (2, 4), (2, 8), (3, 1), (3, 7), (4, 3),
    (4, 6), (4, 8), (5, 3), (5, 7), (6, 2), (6, 5), (6, 8), (7, 8),
)


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    description: str
    graph: Graph
    embedding: PlanarEmbedding | None = None
    pfaffian_orientation: Orientation | None = None
    pentacap_lower: bool = False

    @property
    def has_certificate(self) -> bool:
        return self.embedding is not None or self.pfaffian_orientation is not None


def _ring_coords(radius: float, ids: list[int], phase: float = 0.0) -> dict:
    k = len(ids)
    return {
        v: (radius * math.cos(2 * math.pi * i / k + phase),
            radius * math.sin(2 * math.pi * i / k + phase))
        for i, v in enumerate(ids)
    }


def k4_embedding() -> PlanarEmbedding:
    g = complete_graph(4)
    coords = _ring_coords(2.0, [1, 2, 3], phase=math.pi / 2)
    coords[4] = (0.0, 0.0)
    return embed_from_coordinates(g, coords, outer_hint=frozenset({1, 2, 3}))


def octahedron_embedding() -> PlanarEmbedding:
    g = octahedron()
    coords = _ring_coords(2.0, [1, 3, 5], phase=math.pi / 2)
    # Each inner vertex sits between the outer pair it is adjacent to.
    coords.update(_ring_coords(0.8, [2, 4, 6], phase=3 * math.pi / 2))
    return embed_from_coordinates(g, coords, outer_hint=frozenset({1, 3, 5}))


def cycle_embedding(n: int) -> PlanarEmbedding:
    return embed_from_coordinates(cycle_graph(n), _ring_coords(1.0, list(range(1, n + 1))))


def k2_embedding() -> PlanarEmbedding:
    return build_embedding(complete_bipartite(1), {1: (2,), 2: (1,)})


def k22_embedding() -> PlanarEmbedding:
    # K_{2,2} is the 4-cycle 1-3-2-4.
    return embed_from_coordinates(complete_bipartite(2),
                                  _ring_coords(1.0, [1, 3, 2, 4]))


def prism_embedding() -> PlanarEmbedding:
    """C_4 x K_2 (the cube): odd vertices outer square, even vertices inner."""
    g = cartesian_product(cycle_graph(4), complete_graph(2))
    coords = {}
    for u in range(1, 5):
        ang = 2 * math.pi * (u - 1) / 4
        coords[2 * u - 1] = (2 * math.cos(ang), 2 * math.sin(ang))
        coords[2 * u] = (math.cos(ang), math.sin(ang))
    return embed_from_coordinates(g, coords, outer_hint=frozenset({1, 3, 5, 7}))


def k4xk2_fixture() -> tuple[Graph, Orientation]:
    g = cartesian_product(complete_graph(4), complete_graph(2))
    return g, orientation_from_pairs(g, K4XK2_PFAFFIAN_PAIRS)


@lru_cache(maxsize=1)
def corpus() -> tuple[CorpusEntry, ...]:
    entries: list[CorpusEntry] = []

    entries.append(CorpusEntry("k4", "complete graph K_4",
                               complete_graph(4), k4_embedding()))
    for n in range(4, 13):
        entries.append(CorpusEntry(f"c{n}", f"cycle C_{n}",
                                   cycle_graph(n), cycle_embedding(n)))
    entries.append(CorpusEntry("k11", "complete bipartite K_{1,1}",
                               complete_bipartite(1), k2_embedding()))
    entries.append(CorpusEntry("k22", "complete bipartite K_{2,2}",
                               complete_bipartite(2), k22_embedding()))
    entries.append(CorpusEntry("k33", "complete bipartite K_{3,3} (not pfaffian)",
                               complete_bipartite(3)))
    entries.append(CorpusEntry("c4xk2", "prism C_4 x K_2 (the cube)",
                               cartesian_product(cycle_graph(4), complete_graph(2)),
                               prism_embedding()))
    g, o = k4xk2_fixture()
    entries.append(CorpusEntry("k4xk2", "K_4 x K_2 with attested pfaffian orientation",
                               g, pfaffian_orientation=o))
    entries.append(CorpusEntry("octahedron", "octahedron (K_6 minus a perfect matching)",
                               octahedron(), octahedron_embedding()))

    dodeca = capped_rings("pentacap", 1)
    entries.append(CorpusEntry("dodecahedron", "dodecahedron (20-vertex fullerene)",
                               dodeca.graph, dodeca.embedding))
    for layers in (1, 2, 3):
        gen = capped_rings("pentacap", layers)
        entries.append(CorpusEntry(f"pentacap{layers}",
                                   f"pentacap fullerene, {layers} middle ring(s)",
                                   gen.graph, gen.embedding, pentacap_lower=True))
    for layers in (1, 2):
        gen = capped_rings("hexacap", layers)
        entries.append(CorpusEntry(f"hexacap{layers}",
                                   f"hexacap fullerene, {layers} middle ring(s)",
                                   gen.graph, gen.embedding))
    le_graph, le_emb = leapfrog(capped_rings("pentacap", 1).embedding)
    entries.append(CorpusEntry("le_pentacap1", "leapfrog of the dodecahedron (C60)",
                               le_graph, le_emb))
    return tuple(entries)


def entry_by_id(graph_id: str) -> CorpusEntry:
    for e in corpus():
        if e.id == graph_id:
            return e
    raise KeyError(f"unknown corpus id {graph_id!r}; known: {[e.id for e in corpus()]}")


def corpus_ids() -> list[str]:
    return [e.id for e in corpus()]
