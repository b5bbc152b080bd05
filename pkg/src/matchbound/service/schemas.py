"""Pydantic request/response models for the HTTP service and the CLI client.

These mirror the JSON interchange formats: graphs are {"n", "edges"} with
1-based vertices, embeddings add {"rotation", "outer"}.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from ..bounds import BoundReport
from ..decomposition import CircularDecomposition
from ..embedding import PlanarEmbedding
from ..graphs import Graph


class GraphModel(BaseModel):
    n: int = Field(ge=0)
    edges: list[tuple[int, int]]

    @staticmethod
    def from_core(g: Graph) -> "GraphModel":
        return GraphModel(n=g.n, edges=g.sorted_edges())

    def to_core(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


class EmbeddingModel(BaseModel):
    graph: GraphModel
    rotation: dict[int, list[int]]
    outer: tuple[int, int]

    @staticmethod
    def from_core(emb: PlanarEmbedding) -> "EmbeddingModel":
        return EmbeddingModel(
            graph=GraphModel.from_core(emb.graph),
            rotation={v: list(rot) for v, rot in sorted(emb.rotation.items())},
            outer=emb.outer,
        )

    def to_core(self) -> PlanarEmbedding:
        emb = PlanarEmbedding(
            self.graph.to_core(),
            {v: tuple(rot) for v, rot in self.rotation.items()},
            self.outer,
        )
        emb.validate()
        return emb


class DecompositionModel(BaseModel):
    v0: list[int]
    rings: list[list[int]]

    @staticmethod
    def from_core(cd: CircularDecomposition) -> "DecompositionModel":
        return DecompositionModel(v0=sorted(cd.v0), rings=[list(r) for r in cd.rings])


class GenRequest(BaseModel):
    family: Literal["classic", "pentacap", "hexacap", "leapfrog", "extend"]
    name: Optional[str] = None          # classic family name
    size: Optional[int] = None          # classic size parameter
    layers: Optional[int] = None        # ring layers for the fullerene families
    base: Optional[Literal["pentacap", "hexacap"]] = None   # leapfrog/extend input

    @model_validator(mode="after")
    def _check_params(self):
        if self.family == "classic" and not self.name:
            raise ValueError("classic generation needs a name")
        if self.family in ("pentacap", "hexacap") and self.layers is None:
            raise ValueError(f"{self.family} needs layers")
        if self.family in ("leapfrog", "extend") and (self.base is None or self.layers is None):
            raise ValueError(f"{self.family} needs base and layers")
        return self


class GenResponse(BaseModel):
    description: str
    graph: GraphModel
    embedding: Optional[EmbeddingModel] = None
    decomposition: Optional[DecompositionModel] = None


class CountRequest(BaseModel):
    corpus_id: Optional[str] = None
    graph: Optional[GraphModel] = None
    embedding: Optional[EmbeddingModel] = None
    method: Literal["pfaffian", "oracle", "both", "auto"] = "auto"
    max_oracle: int = 40

    @model_validator(mode="after")
    def _one_target(self):
        if sum(x is not None for x in (self.corpus_id, self.graph, self.embedding)) != 1:
            raise ValueError("exactly one of corpus_id, graph, embedding is required")
        return self


class CountResponse(BaseModel):
    graph_id: str
    n: int
    m: int
    pfaffian_count: Optional[int] = None
    oracle_count: Optional[int] = None
    equal: Optional[bool] = None


class BoundEntryModel(BaseModel):
    name: str
    kind: str
    applicable: bool
    reason: Optional[str] = None
    log2_value: Optional[float] = None
    exact_pow4: Optional[str] = None
    tightness: Optional[float] = None
    extra: dict = Field(default_factory=dict)


class BoundReportModel(BaseModel):
    graph_id: str
    n: int
    m: int
    exact_count: Optional[str] = None
    count_method: Optional[str] = None
    count_log2: Optional[float] = None
    entries: list[BoundEntryModel]

    @staticmethod
    def from_core(report: BoundReport) -> "BoundReportModel":
        return BoundReportModel.model_validate(report.to_json_dict())


class BoundsRequest(BaseModel):
    corpus_id: Optional[str] = None      # a single id, or None with whole_corpus
    whole_corpus: bool = False
    graph: Optional[GraphModel] = None
    embedding: Optional[EmbeddingModel] = None
    max_oracle: int = 40
    tolerance: float = 1e-9

    @model_validator(mode="after")
    def _one_target(self):
        picks = sum(x is not None for x in (self.corpus_id, self.graph, self.embedding))
        picks += 1 if self.whole_corpus else 0
        if picks != 1:
            raise ValueError("pick exactly one of corpus_id, whole_corpus, graph, embedding")
        return self


class BoundsResponse(BaseModel):
    reports: list[BoundReportModel]


class IdentityRow(BaseModel):
    check: str
    n: Optional[int] = None
    ok: bool
    detail: str = ""


class IdentitiesRequest(BaseModel):
    n_max: int = Field(default=16, ge=8)


class IdentitiesResponse(BaseModel):
    rows: list[IdentityRow]
    all_ok: bool


class ValidateRequest(BaseModel):
    embedding: EmbeddingModel


class ValidateResponse(BaseModel):
    ok: bool
    faces: int
    face_lengths: list[int]
    face_girth: Optional[float] = None
    is_fullerene: bool
    detail: str = ""


class CorpusEntryModel(BaseModel):
    id: str
    description: str
    n: int
    m: int
    has_embedding: bool
    has_orientation: bool


class CorpusResponse(BaseModel):
    entries: list[CorpusEntryModel]
