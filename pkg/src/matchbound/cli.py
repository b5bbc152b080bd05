"""Command-line interface: a thin client over the service handlers.

Every command builds the same request models the HTTP endpoints accept and
dispatches to the shared handler functions in-process, so CLI runs and
service calls cannot drift apart.  Exit code is 0 exactly when every
assertion made by the command passed.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path

import click

from .bounds import CSV_HEADER
from .errors import (
    BoundViolationError,
    ConsistencyError,
    EmbeddingError,
    OracleSizeError,
    ParameterError,
)
from .service import schemas
from .service.app import (
    handle_bounds,
    handle_corpus,
    handle_count,
    handle_gen,
    handle_identities,
    handle_validate,
)

_FAILURES = (ParameterError, EmbeddingError, OracleSizeError, ConsistencyError,
             BoundViolationError, KeyError, ValueError)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + ("\n" if not text.endswith("\n") else ""))
        click.echo(f"wrote {out}")
    else:
        click.echo(text)


def _load_input(path: str) -> dict:
    data = json.loads(Path(path).read_text())
    if "rotation" in data:
        return {"embedding": schemas.EmbeddingModel.model_validate(
            {k: data[k] for k in ("graph", "rotation", "outer")})}
    if isinstance(data.get("embedding"), dict):
        return {"embedding": schemas.EmbeddingModel.model_validate(data["embedding"])}
    if isinstance(data.get("graph"), dict):
        return {"graph": schemas.GraphModel.model_validate(data["graph"])}
    return {"graph": schemas.GraphModel.model_validate(data)}


def _target_kwargs(target: str, corpus_ids: set[str]) -> dict:
    if target in corpus_ids:
        return {"corpus_id": target}
    if Path(target).exists():
        return _load_input(target)
    raise ParameterError(f"{target!r} is neither a corpus id nor a readable file")


@click.group()
def main():
    """Exact perfect-matching counts and upper bounds for pfaffian graphs."""


@main.command()
@click.argument("family", type=click.Choice(["classic", "pentacap", "hexacap",
                                             "leapfrog", "extend"]))
@click.argument("params", nargs=-1)
@click.option("--out", type=click.Path(), default=None, help="Write JSON here.")
def gen(family, params, out):
    """Generate a named graph with its embedding and ring decomposition.

    \b
    Examples:
      gen classic octahedron          gen classic C_n 8
      gen pentacap 2                  gen hexacap 1
      gen leapfrog pentacap 1         gen extend pentacap 1
    """
    try:
        if family == "classic":
            if not params:
                raise ParameterError("classic needs a name (K_n, C_n, P_n, K_rr, "
                                     "octahedron, dodecahedron) and optional size")
            req = schemas.GenRequest(family="classic", name=params[0],
                                     size=int(params[1]) if len(params) > 1 else None)
        elif family in ("pentacap", "hexacap"):
            req = schemas.GenRequest(family=family, layers=int(params[0]))
        else:
            req = schemas.GenRequest(family=family, base=params[0], layers=int(params[1]))
        resp = handle_gen(req)
    except _FAILURES as exc:
        raise click.ClickException(str(exc))
    click.echo(resp.description, err=True)
    # File format: the embedding interchange JSON (graph/rotation/outer), with
    # the decomposition attached when one exists; bare graph JSON otherwise.
    if resp.embedding is not None:
        payload = resp.embedding.model_dump()
        if resp.decomposition is not None:
            payload["decomposition"] = resp.decomposition.model_dump()
    else:
        payload = resp.graph.model_dump()
    _emit(json.dumps(payload, indent=2), out)


@main.command()
@click.argument("target")
@click.option("--method", type=click.Choice(["auto", "pfaffian", "oracle", "both"]),
              default="auto", show_default=True)
@click.option("--max-oracle", type=int, default=40, show_default=True,
              help="Vertex guard for exhaustive enumeration.")
def count(target, method, max_oracle):
    """Count perfect matchings of TARGET (corpus id or graph/embedding JSON file).

    With --method both, the determinant route and the enumeration oracle are
    both run and must agree (nonzero exit otherwise).
    """
    ids = {e.id for e in handle_corpus().entries}
    try:
        req = schemas.CountRequest(method=method, max_oracle=max_oracle,
                                   **_target_kwargs(target, ids))
        resp = handle_count(req)
    except _FAILURES as exc:
        raise click.ClickException(str(exc))
    parts = [f"{resp.graph_id}: n={resp.n} m={resp.m}"]
    if resp.pfaffian_count is not None:
        parts.append(f"pfaffian={resp.pfaffian_count}")
    if resp.oracle_count is not None:
        parts.append(f"oracle={resp.oracle_count}")
    if resp.equal is not None:
        parts.append("agree" if resp.equal else "MISMATCH")
    click.echo("  ".join(parts))


def _reports_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CSV_HEADER)
    for rep in reports:
        for e in rep.entries:
            writer.writerow([
                rep.graph_id, rep.n, rep.m, rep.exact_count or "",
                e.name, e.kind, "yes" if e.applicable else "no", e.reason or "",
                "" if e.log2_value is None else f"{e.log2_value:.6f}",
                "" if e.tightness is None else f"{e.tightness:.6f}",
            ])
    return buf.getvalue().rstrip("\n")


@main.command()
@click.argument("target", default="corpus")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
              show_default=True)
@click.option("--out", type=click.Path(), default=None)
@click.option("--max-oracle", type=int, default=40, show_default=True)
@click.option("--tolerance", type=float, default=1e-9, show_default=True,
              help="log2-domain soundness tolerance.")
def bounds(target, fmt, out, max_oracle, tolerance):
    """Evaluate every applicable bound for TARGET ('corpus', a corpus id, or a
    JSON file) and check soundness against the exact count.

    Exits nonzero if any count exceeds a proved upper bound.
    """
    ids = {e.id for e in handle_corpus().entries}
    try:
        if target == "corpus":
            req = schemas.BoundsRequest(whole_corpus=True, max_oracle=max_oracle,
                                        tolerance=tolerance)
        else:
            req = schemas.BoundsRequest(max_oracle=max_oracle, tolerance=tolerance,
                                        **_target_kwargs(target, ids))
        resp = handle_bounds(req)
    except (BoundViolationError, ConsistencyError) as exc:
        click.echo(f"SOUNDNESS FAILURE: {exc}", err=True)
        sys.exit(1)
    except _FAILURES as exc:
        raise click.ClickException(str(exc))
    if fmt == "csv":
        _emit(_reports_to_csv(resp.reports), out)
    else:
        _emit(json.dumps([r.model_dump() for r in resp.reports], indent=2), out)


@main.command()
@click.argument("n_max", type=int, default=16)
def identities(n_max):
    """Run the determinant identity suite up to N_MAX and print a pass/fail table."""
    try:
        resp = handle_identities(schemas.IdentitiesRequest(n_max=n_max))
    except _FAILURES as exc:
        raise click.ClickException(str(exc))
    for row in resp.rows:
        n = f" n={row.n}" if row.n is not None else ""
        detail = f"  ({row.detail})" if row.detail else ""
        click.echo(f"[{'PASS' if row.ok else 'FAIL'}] {row.check}{n}{detail}")
    if not resp.all_ok:
        sys.exit(1)
    click.echo("all identity checks passed")


@main.command()
@click.argument("path", type=click.Path(exists=True))
def validate(path):
    """Validate an embedding JSON file (face closure, Euler, fullerene checks)."""
    data = json.loads(Path(path).read_text())
    resp = handle_validate(schemas.ValidateRequest(
        embedding=schemas.EmbeddingModel.model_validate(data)))
    click.echo(resp.model_dump_json(indent=2))
    if not resp.ok:
        sys.exit(1)


@main.command("corpus")
def corpus_cmd():
    """List the built-in corpus."""
    for e in handle_corpus().entries:
        cert = "embedding" if e.has_embedding else (
            "orientation" if e.has_orientation else "none")
        click.echo(f"{e.id:<14} n={e.n:<4} m={e.m:<4} certificate={cert:<11} {e.description}")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("matchbound.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
