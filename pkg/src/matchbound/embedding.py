"""Combinatorial planar embeddings (rotation systems).

A face is traced with the half-edge rule: from the directed edge (u,v) the
next directed edge is (v,w) where w follows u in the cyclic neighbor order at
v.  Faces are keyed by their lexicographically smallest directed edge, so all
outputs are deterministic.  Validation is Euler's relation plus face closure;
no planarity testing is performed - embeddings come from constructors or
imported files.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from .errors import EmbeddingError, ParameterError
from .graphs import Graph, INFINITY

DirectedEdge = tuple[int, int]
FaceKey = DirectedEdge


@dataclass(frozen=True)
class Face:
    """Closed boundary walk, stored as directed edges starting at the smallest."""

    walk: tuple[DirectedEdge, ...]

    @property
    def key(self) -> FaceKey:
        return self.walk[0]

    def __len__(self) -> int:
        return len(self.walk)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.walk)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def is_simple_cycle(self) -> bool:
        verts = self.vertices
        return len(set(verts)) == len(verts) and len(verts) >= 3


def _canonical_walk(walk: Sequence[DirectedEdge]) -> tuple[DirectedEdge, ...]:
    pivot = walk.index(min(walk))
    return tuple(walk[pivot:]) + tuple(walk[:pivot])


def trace_faces(graph: Graph, rotation: Mapping[int, tuple[int, ...]]) -> tuple[Face, ...]:
    """Orbit decomposition of the directed-edge set under the next-edge rule."""
    next_index = {v: {u: i for i, u in enumerate(rot)} for v, rot in rotation.items()}
    remaining: set[DirectedEdge] = set()
    for u, v in graph.edges:
        remaining.add((u, v))
        remaining.add((v, u))

    faces = []
    while remaining:
        start = min(remaining)
        walk = []
        cur = start
        while True:
            if cur not in remaining:
                raise EmbeddingError(f"face traversal through {cur} does not close")
            remaining.remove(cur)
            walk.append(cur)
            u, v = cur
            rot = rotation[v]
            cur = (v, rot[(next_index[v][u] + 1) % len(rot)])
            if cur == start:
                break
        faces.append(Face(_canonical_walk(walk)))
    return tuple(sorted(faces, key=lambda f: f.key))


@dataclass(frozen=True)
class PlanarEmbedding:
    """Graph plus per-vertex cyclic neighbor order and a designated outer face."""

    graph: Graph
    rotation: Mapping[int, tuple[int, ...]] = field(hash=False)
    outer: FaceKey

    def __post_init__(self):
        for v in self.graph.vertices():
            rot = self.rotation.get(v)
            if rot is None or sorted(rot) != sorted(self.graph.adjacency[v]):
                raise EmbeddingError(f"rotation at vertex {v} does not list its neighbors")

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return trace_faces(self.graph, self.rotation)

    @cached_property
    def face_by_key(self) -> dict[FaceKey, Face]:
        return {f.key: f for f in self.faces}

    @cached_property
    def face_of_directed_edge(self) -> dict[DirectedEdge, Face]:
        return {d: f for f in self.faces for d in f.walk}

    @property
    def outer_face(self) -> Face:
        return self.face_by_key[self.outer]

    def bounded_faces(self) -> tuple[Face, ...]:
        return tuple(f for f in self.faces if f.key != self.outer)

    def validate(self) -> None:
        """Check face closure, the outer-face key, and Euler's relation."""
        faces = self.faces
        if sum(len(f) for f in faces) != 2 * self.graph.m:
            raise EmbeddingError("face lengths do not sum to twice the edge count")
        if self.outer not in self.face_by_key:
            raise EmbeddingError(f"outer face key {self.outer} does not name a face")
        if self.graph.is_connected() and self.graph.n >= 1:
            if len(faces) - self.graph.m + self.graph.n != 2:
                raise EmbeddingError(
                    f"Euler check failed: f={len(faces)}, m={self.graph.m}, n={self.graph.n}"
                )

    def face_lengths(self) -> list[int]:
        return sorted(len(f) for f in self.faces)

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph.to_json_dict(),
            "rotation": {str(v): list(rot) for v, rot in sorted(self.rotation.items())},
            "outer": list(self.outer),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def from_json_dict(data: Mapping) -> "PlanarEmbedding":
        graph = Graph.from_json_dict(data["graph"])
        rotation = {int(v): tuple(rot) for v, rot in data["rotation"].items()}
        emb = PlanarEmbedding(graph, rotation, tuple(data["outer"]))
        emb.validate()
        return emb

    @staticmethod
    def from_json(text: str) -> "PlanarEmbedding":
        return PlanarEmbedding.from_json_dict(json.loads(text))


def build_embedding(graph: Graph, rotation: Mapping[int, Sequence[int]],
                    outer_hint: frozenset[int] | None = None) -> PlanarEmbedding:
    """Assemble and validate an embedding; the outer face is located by its
    vertex set when a hint is given, otherwise the longest face is used."""
    rot = {v: tuple(r) for v, r in rotation.items()}
    faces = trace_faces(graph, rot)
    outer = _pick_outer(faces, outer_hint)
    emb = PlanarEmbedding(graph, rot, outer.key)
    emb.validate()
    return emb


def _pick_outer(faces: Sequence[Face], outer_hint: frozenset[int] | None) -> Face:
    if outer_hint is not None:
        candidates = [f for f in faces if f.vertex_set() == outer_hint]
        if not candidates:
            raise EmbeddingError("no face matches the requested outer vertex set")
        # Two faces can share a vertex set (e.g. a bare cycle); take the larger key.
        return max(candidates, key=lambda f: f.key)
    return max(faces, key=lambda f: (len(f), f.key))


def rotation_from_coordinates(graph: Graph,
                              coords: Mapping[int, tuple[float, float]]) -> dict[int, tuple[int, ...]]:
    """Counterclockwise neighbor order around each vertex of a straight-line drawing."""
    rotation = {}
    for v in graph.vertices():
        x0, y0 = coords[v]
        rotation[v] = tuple(sorted(
            graph.adjacency[v],
            key=lambda u: math.atan2(coords[u][1] - y0, coords[u][0] - x0),
        ))
    return rotation


def embed_from_coordinates(graph: Graph, coords: Mapping[int, tuple[float, float]],
                           outer_hint: frozenset[int] | None = None) -> PlanarEmbedding:
    return build_embedding(graph, rotation_from_coordinates(graph, coords), outer_hint)


# ---------------------------------------------------------------------------
# Face statistics
# ---------------------------------------------------------------------------

def embedding_girth(emb: PlanarEmbedding) -> int | float:
    """Minimum face length of this embedding.

    Lower bound on the best-realization face girth; equal to it for
    3-connected planar graphs, whose embedding is unique.  INFINITY for trees.
    """
    if emb.graph.m == 0 or emb.graph.m == emb.graph.n - 1:
        return INFINITY
    return min(len(f) for f in emb.faces)


def check_edge_bound(emb: PlanarEmbedding) -> dict:
    """Exact test of m <= g'(n-2)/(g'-2) for the face girth g' of this embedding."""
    g_prime = embedding_girth(emb)
    if g_prime == INFINITY or g_prime < 3:
        raise ParameterError("edge bound needs a finite face girth >= 3")
    rhs = Fraction(g_prime, g_prime - 2) * (emb.graph.n - 2)
    m = emb.graph.m
    return {"lhs": m, "rhs": rhs, "holds": m <= rhs, "equality": m == rhs}


# ---------------------------------------------------------------------------
# Leapfrog transform
# ---------------------------------------------------------------------------

def find_bridges(graph: Graph) -> set[tuple[int, int]]:
    """Bridges via iterative DFS lowpoints."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    parent: dict[int, int] = {}
    bridges: set[tuple[int, int]] = set()
    counter = 0
    for root in graph.vertices():
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        parent[root] = 0
        stack = [(root, iter(graph.adjacency[root]))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for u in it:
                if u not in disc:
                    disc[u] = low[u] = counter
                    counter += 1
                    parent[u] = v
                    stack.append((u, iter(graph.adjacency[u])))
                    advanced = True
                    break
                elif u != parent[v]:
                    low[v] = min(low[v], disc[u])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        bridges.add((min(p, v), max(p, v)))
    return bridges


def leapfrog(emb: PlanarEmbedding) -> tuple[Graph, PlanarEmbedding]:
    """Stellate every face (outer included), then return the planar dual of the
    stellation: one vertex per triangle, edges between edge-sharing triangles.

    Requires a simple connected bridgeless input whose faces are simple
    cycles.  The new outer face is the triangle fan around the old outer face.
    """
    g = emb.graph
    if not g.is_connected():
        raise ParameterError("leapfrog needs a connected graph")
    if find_bridges(g):
        raise ParameterError("leapfrog needs a bridgeless graph")
    for f in emb.faces:
        if not f.is_simple_cycle():
            raise EmbeddingError("leapfrog needs all faces to be simple cycles")

    faces = emb.faces
    star_of = {f.key: g.n + 1 + i for i, f in enumerate(faces)}  # stellation vertex ids
    face_at = emb.face_of_directed_edge

    # Stellation rotation system: each star vertex sees its face walk in order;
    # each original vertex interleaves old neighbors with the star of the face
    # entered between consecutive neighbors.
    stell_n = g.n + len(faces)
    stell_edges: list[tuple[int, int]] = list(g.edges)
    stell_rot: dict[int, tuple[int, ...]] = {}
    for f in faces:
        w = star_of[f.key]
        # Reversed walk order: needed so each stellation triangle closes under
        # the next-edge rule (the star sits on the opposite side of the walk).
        stell_rot[w] = tuple(reversed(f.vertices))
        stell_edges.extend((w, v) for v in f.vertices)
    for v in g.vertices():
        rot = emb.rotation[v]
        mixed: list[int] = []
        for u in rot:
            mixed.append(u)
            corner_face = face_at[(u, v)]  # face whose walk runs (u,v) then (v, next)
            mixed.append(star_of[corner_face.key])
        stell_rot[v] = tuple(mixed)
    stell_graph = Graph.from_edges(stell_n, stell_edges)
    tri_faces = trace_faces(stell_graph, stell_rot)
    if any(len(t) != 3 for t in tri_faces):
        raise EmbeddingError("stellation did not triangulate every face")

    # Dual of the stellation: rotation of a dual vertex lists, in boundary
    # order, the triangles across each boundary edge.
    tri_at: dict[DirectedEdge, int] = {}
    for i, t in enumerate(tri_faces):
        for d in t.walk:
            tri_at[d] = i
    dual_rot: dict[int, tuple[int, ...]] = {}
    dual_edges: set[tuple[int, int]] = set()
    for i, t in enumerate(tri_faces):
        around = tuple(tri_at[(v, u)] + 1 for (u, v) in t.walk)
        dual_rot[i + 1] = around
        for j in around:
            if j != i + 1:
                dual_edges.add((min(i + 1, j), max(i + 1, j)))
    dual_graph = Graph.from_edges(len(tri_faces), dual_edges)

    # Outer face of the dual: the triangle fan around the star of the old
    # outer face forms a cycle; locate that face by its vertex set.
    outer_star = star_of[emb.outer]
    fan = frozenset(
        tri_at[d] + 1
        for d in tri_at
        if d[0] == outer_star or d[1] == outer_star
    )
    dual = build_embedding(dual_graph, dual_rot, outer_hint=fan)
    return dual_graph, dual
