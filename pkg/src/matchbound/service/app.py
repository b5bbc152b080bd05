"""FastAPI service wrapping the core package.

The handler functions hold all request/response logic; the FastAPI routes and
the CLI both dispatch to them, so command-line runs and HTTP calls share one
code path.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..bounds import compare_all
from ..circulants import (
    charlike_poly,
    cycle_skew,
    gauge_reduce,
    lucas_det,
    matching_poly_identity_check,
    sequence_monotonicity_check,
)
from ..corpus import CorpusEntry, corpus, entry_by_id
from ..decomposition import detect_semicircular
from ..embedding import embedding_girth
from ..errors import (
    BoundViolationError,
    ConsistencyError,
    EmbeddingError,
    OracleSizeError,
    ParameterError,
)
from ..fullerenes import capped_rings, extend_cap, validate_fullerene
from ..graphs import INFINITY, make_classic
from ..matchings import enumerate_perfect_matchings
from ..pfaffian import (
    all_orientations,
    count_by_pfaffian,
    count_from_orientation,
    exact_determinant,
    matmul,
)
from ..embedding import leapfrog
from .schemas import (
    BoundReportModel,
    BoundsRequest,
    BoundsResponse,
    CorpusEntryModel,
    CorpusResponse,
    CountRequest,
    CountResponse,
    DecompositionModel,
    EmbeddingModel,
    GenRequest,
    GenResponse,
    GraphModel,
    IdentitiesRequest,
    IdentitiesResponse,
    IdentityRow,
    ValidateRequest,
    ValidateResponse,
)

USER_ERRORS = (ParameterError, EmbeddingError, OracleSizeError, KeyError, ValueError)


def handle_gen(req: GenRequest) -> GenResponse:
    if req.family == "classic":
        g = make_classic(req.name, req.size)
        emb = None
        for entry in corpus():
            if entry.graph.edges == g.edges and entry.graph.n == g.n and entry.embedding:
                emb = entry.embedding
                break
        return GenResponse(
            description=f"classic {req.name}" + (f" size {req.size}" if req.size else ""),
            graph=GraphModel.from_core(g),
            embedding=EmbeddingModel.from_core(emb) if emb else None,
        )
    if req.family in ("pentacap", "hexacap"):
        gen = capped_rings(req.family, req.layers)
        return GenResponse(
            description=f"{req.family} with {req.layers} middle ring(s), n={gen.n}",
            graph=GraphModel.from_core(gen.graph),
            embedding=EmbeddingModel.from_core(gen.embedding),
            decomposition=DecompositionModel.from_core(gen.decomposition),
        )
    if req.family == "extend":
        gen = extend_cap(capped_rings(req.base, req.layers))
        return GenResponse(
            description=f"cap extension of {req.base}({req.layers}), n={gen.n}",
            graph=GraphModel.from_core(gen.graph),
            embedding=EmbeddingModel.from_core(gen.embedding),
            decomposition=DecompositionModel.from_core(gen.decomposition),
        )
    # leapfrog
    gen = capped_rings(req.base, req.layers)
    le_graph, le_emb = leapfrog(gen.embedding)
    cd = detect_semicircular(le_emb)
    return GenResponse(
        description=f"leapfrog of {req.base}({req.layers}), n={le_graph.n}",
        graph=GraphModel.from_core(le_graph),
        embedding=EmbeddingModel.from_core(le_emb),
        decomposition=DecompositionModel.from_core(cd) if cd else None,
    )


def _resolve_target(corpus_id, graph_model, embedding_model):
    if corpus_id is not None:
        entry = entry_by_id(corpus_id)
        return entry.id, entry.graph, entry.embedding, entry.pfaffian_orientation, entry
    if embedding_model is not None:
        emb = embedding_model.to_core()
        return "embedding", emb.graph, emb, None, None
    g = graph_model.to_core()
    return "graph", g, None, None, None


def handle_count(req: CountRequest) -> CountResponse:
    graph_id, g, emb, orientation, _ = _resolve_target(req.corpus_id, req.graph, req.embedding)
    pfaffian_count = None
    oracle_count = None
    if req.method in ("pfaffian", "both", "auto"):
        if emb is not None:
            pfaffian_count = count_by_pfaffian(emb)
        elif orientation is not None:
            pfaffian_count = 0 if g.n % 2 else count_from_orientation(orientation)
        elif req.method != "auto":
            raise ParameterError("pfaffian count needs an embedding or attested orientation")
    if req.method in ("oracle", "both") or (req.method == "auto" and g.n <= req.max_oracle):
        oracle_count = enumerate_perfect_matchings(g, max_vertices=req.max_oracle)
    equal = None
    if pfaffian_count is not None and oracle_count is not None:
        equal = pfaffian_count == oracle_count
        if not equal:
            raise ConsistencyError(
                f"pfaffian count {pfaffian_count} != oracle count {oracle_count}")
    return CountResponse(graph_id=graph_id, n=g.n, m=g.m,
                         pfaffian_count=pfaffian_count, oracle_count=oracle_count,
                         equal=equal)


def _report_for_entry(entry: CorpusEntry, max_oracle: int, tolerance: float) -> BoundReportModel:
    report = compare_all(
        entry.graph, graph_id=entry.id, embedding=entry.embedding,
        pfaffian_orientation=entry.pfaffian_orientation,
        pentacap_lower=entry.pentacap_lower,
        max_oracle=max_oracle, tolerance=tolerance,
    )
    return BoundReportModel.from_core(report)


def handle_bounds(req: BoundsRequest) -> BoundsResponse:
    if req.whole_corpus:
        reports = [_report_for_entry(e, req.max_oracle, req.tolerance) for e in corpus()]
        return BoundsResponse(reports=reports)
    if req.corpus_id is not None:
        return BoundsResponse(
            reports=[_report_for_entry(entry_by_id(req.corpus_id),
                                       req.max_oracle, req.tolerance)])
    graph_id, g, emb, orientation, _ = _resolve_target(None, req.graph, req.embedding)
    report = compare_all(g, graph_id=graph_id, embedding=emb,
                         pfaffian_orientation=orientation,
                         max_oracle=req.max_oracle, tolerance=req.tolerance)
    return BoundsResponse(reports=[BoundReportModel.from_core(report)])


def handle_identities(req: IdentitiesRequest) -> IdentitiesResponse:
    rows: list[IdentityRow] = []

    def add(check: str, ok: bool, n: int | None = None, detail: str = ""):
        rows.append(IdentityRow(check=check, n=n, ok=ok, detail=detail))

    for n in range(3, min(req.n_max, 24) + 1):
        ok = True
        for sign in (1, -1):
            t = cycle_skew(n, sign)
            t2 = matmul(t, t)
            m = [[(1 if i == j else 0) - t2[i][j] for j in range(n)] for i in range(n)]
            ok = ok and exact_determinant(m) == lucas_det(n, sign)
        add("lucas_det_matches_bareiss", ok, n=n)

    for n in range(3, min(req.n_max, 16) + 1):
        res = matching_poly_identity_check(n)
        add("matching_poly_determinant", res["ok"], n=n)

    for n in range(3, min(req.n_max, 16) + 1):
        ok = True
        for sign in (1, -1):
            poly = charlike_poly(n, sign)
            at_one = sum(poly)
            t = cycle_skew(n, sign)
            t2 = matmul(t, t)
            m = [[(1 if i == j else 0) - t2[i][j] for j in range(n)] for i in range(n)]
            ok = ok and exact_determinant(m) == at_one * at_one
        add("square_identity_det_I_minus_T2", ok, n=n)

    mono = sequence_monotonicity_check(req.n_max)
    add("root_sequence_monotonic", mono["odd_increasing"] and mono["even_decreasing"]
        and mono["within_band"], detail=f"checked through n={req.n_max}")
    add("root_sequence_max_at_n6", mono["max_at_6"],
        detail="det^3 vs 20^n cross-powering; equality only at n=6")

    from ..graphs import cycle_graph

    gauge_ok = True
    for n in (5, 6, 7, 8):
        for o in all_orientations(cycle_graph(n)):
            try:
                gauge_reduce(o)
            except Exception:
                gauge_ok = False
    add("gauge_reduction_exhaustive", gauge_ok, detail="all orientations of C_5..C_8")

    return IdentitiesResponse(rows=rows, all_ok=all(r.ok for r in rows))


def handle_validate(req: ValidateRequest) -> ValidateResponse:
    try:
        emb = req.embedding.to_core()
    except EmbeddingError as exc:
        return ValidateResponse(ok=False, faces=0, face_lengths=[], is_fullerene=False,
                                detail=str(exc))
    girth = embedding_girth(emb)
    fullerene = validate_fullerene(emb)
    return ValidateResponse(
        ok=True,
        faces=len(emb.faces),
        face_lengths=emb.face_lengths(),
        face_girth=None if girth == INFINITY else float(girth),
        is_fullerene=fullerene["is_fullerene"],
        detail="; ".join(fullerene["reasons"]),
    )


def handle_corpus() -> CorpusResponse:
    return CorpusResponse(entries=[
        CorpusEntryModel(
            id=e.id, description=e.description, n=e.graph.n, m=e.graph.m,
            has_embedding=e.embedding is not None,
            has_orientation=e.pfaffian_orientation is not None,
        )
        for e in corpus()
    ])


app = FastAPI(
    title="matchbound",
    description="Exact perfect-matching counts and determinant upper bounds "
                "for planar/pfaffian graphs",
)


def _wrap(handler, *args):
    try:
        return handler(*args)
    except USER_ERRORS as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except (BoundViolationError, ConsistencyError) as exc:
        raise HTTPException(status_code=500, detail=str(exc))


@app.get("/health")
def health():
    return {"status": "ok"}


@app.get("/corpus", response_model=CorpusResponse)
def corpus_route():
    return _wrap(handle_corpus)


@app.post("/gen", response_model=GenResponse)
def gen_route(req: GenRequest):
    return _wrap(handle_gen, req)


@app.post("/count", response_model=CountResponse)
def count_route(req: CountRequest):
    return _wrap(handle_count, req)


@app.post("/bounds", response_model=BoundsResponse)
def bounds_route(req: BoundsRequest):
    return _wrap(handle_bounds, req)


@app.post("/identities", response_model=IdentitiesResponse)
def identities_route(req: IdentitiesRequest):
    return _wrap(handle_identities, req)


@app.post("/validate", response_model=ValidateResponse)
def validate_route(req: ValidateRequest):
    return _wrap(handle_validate, req)
