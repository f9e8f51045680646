"""Batch command-line client for the liespec service.

By default commands talk to the FastAPI app in-process, so `liespec spectrum
su4 --cutoff 1` needs no running server; point `--url` at a deployed instance
to go over the network instead.

Exit codes: 0 success (or "is an eigenvalue"), 1 not an eigenvalue,
2 unknown group, 3 malformed input, 4 validation mismatch.
"""

from __future__ import annotations

import json
import sys
from typing import Optional

import click

EXIT_NOT_EIGENVALUE = 1
EXIT_UNKNOWN_GROUP = 2
EXIT_BAD_INPUT = 3
EXIT_MISMATCH = 4


class ApiClient:
    """Minimal POST/GET wrapper; in-process ASGI by default, HTTP with --url."""

    def __init__(self, url: Optional[str] = None):
        if url:
            import httpx

            self._client = httpx.Client(base_url=url.rstrip("/"))
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict):
        r = self._client.post(path, json=payload)
        return r.status_code, r.json()

    def get(self, path: str):
        r = self._client.get(path)
        return r.status_code, r.json()


def _bail(status: int, body: dict) -> None:
    detail = body.get("detail", body)
    click.echo(f"error: {detail}", err=True)
    if status == 404:
        sys.exit(EXIT_UNKNOWN_GROUP)
    sys.exit(EXIT_BAD_INPUT)


@click.group()
@click.option("--url", default=None, help="Base URL of a running liespec service; default is in-process.")
@click.pass_context
def main(ctx: click.Context, url: Optional[str]) -> None:
    """Exact Laplace spectra of compact simple rank-three Lie groups."""
    ctx.obj = ApiClient(url)


@main.command()
@click.argument("group")
@click.option("--cutoff", required=True, help="Positive rational p/q: report eigenvalues down to -cutoff.")
@click.option("--gamma", default="1", show_default=True, help="Metric scale, positive rational p/q.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "pretty"]), default="pretty",
              show_default=True)
@click.option("--workers", default=1, show_default=True, help="Parallel enumeration workers.")
@click.pass_obj
def spectrum(client: ApiClient, group: str, cutoff: str, gamma: str, fmt: str, workers: int) -> None:
    """Enumerate the spectrum of GROUP down to -cutoff."""
    status, body = client.post(
        "/spectrum", {"group": group, "cutoff": cutoff, "gamma": gamma, "workers": workers}
    )
    if status != 200:
        _bail(status, body)
    if fmt == "json":
        click.echo(json.dumps(body, indent=2))
        return
    if fmt == "csv":
        click.echo("lambda,multiplicity,num_weights")
        for e in body["entries"]:
            click.echo(f"{e['lambda']},{e['multiplicity']},{len(e['weights'])}")
        return
    rows = [(e["lambda"], str(e["multiplicity"]),
             " ".join(f"nu={tuple(w['nu'])}:d={w['dim']}" for w in e["weights"]))
            for e in body["entries"]]
    w0 = max(len("lambda"), *(len(r[0]) for r in rows))
    w1 = max(len("mult"), *(len(r[1]) for r in rows))
    click.echo(f"spectrum of {body['group']} (gamma={body['gamma']})")
    click.echo(f"{'lambda':>{w0}}  {'mult':>{w1}}  weights")
    for r in rows:
        click.echo(f"{r[0]:>{w0}}  {r[1]:>{w1}}  {r[2]}")


@main.command(context_settings={"ignore_unknown_options": True})
@click.argument("group")
@click.argument("lam", type=click.UNPROCESSED)
@click.option("--gamma", default="1", show_default=True)
@click.pass_obj
def check(client: ApiClient, group: str, lam: str, gamma: str) -> None:
    """Decide whether LAM (a negative rational p/q) is an eigenvalue of GROUP."""
    status, body = client.post("/check", {"group": group, "lambda": lam, "gamma": gamma})
    if status != 200:
        _bail(status, body)
    if body["is_eigenvalue"]:
        click.echo(
            f"eigenvalue; weights={body['weight_count']}; k={body['k']}; {body['formula']}"
        )
        return
    extra = f"; k={body['k']}; {body['formula']}" if body.get("k") is not None else ""
    click.echo(f"not an eigenvalue; weights=0{extra}")
    sys.exit(EXIT_NOT_EIGENVALUE)


@main.command()
@click.argument("group")
@click.option("--cutoff", required=True)
@click.pass_obj
def validate(client: ApiClient, group: str, cutoff: str) -> None:
    """Cross-check the theorem verdicts against enumeration for GROUP."""
    status, body = client.post("/validate", {"group": group, "cutoff": cutoff})
    if status != 200:
        _bail(status, body)
    click.echo(
        f"{body['group']}: cutoff {body['cutoff']}, {body['candidates_checked']} candidates, "
        f"{len(body['mismatches'])} mismatches"
    )
    for m in body["mismatches"]:
        click.echo(
            f"  lambda={m['lambda']}: enumeration says {m['enumerated_weights']} weights, "
            f"theorem says {m['theorem_weights']} ({m['case_tag']})"
        )
    if body["mismatches"]:
        sys.exit(EXIT_MISMATCH)


@main.command()
@click.argument("subop", type=click.Choice(["n2", "n2p", "n3", "l2", "l3", "theta", "jacobi"]))
@click.argument("args", nargs=-1, type=click.UNPROCESSED)
@click.pass_obj
def nt(client: ApiClient, subop: str, args: tuple) -> None:
    """Number-theory queries: counts, theta coefficients, Jacobi symbol."""
    status, body = client.post("/nt", {"op": subop, "args": list(args)})
    if status != 200:
        _bail(status, body)
    result = body["result"]
    if isinstance(result, list):
        click.echo(" ".join(str(x) for x in result))
    else:
        click.echo(str(result))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


@main.command()
@click.pass_obj
def groups(client: ApiClient) -> None:
    """List known group identifiers."""
    status, body = client.get("/groups")
    if status != 200:
        _bail(status, body)
    for g in body:
        alias = f" (= {', '.join(g['aliases'])})" if g["aliases"] else ""
        click.echo(
            f"{g['name']:<12} {g['display_name']:<12} {g['root_system']}  dim={g['dim']}  "
            f"|pi1|={g['pi1_order']}  |Z|={g['center_order']}{alias}"
        )


if __name__ == "__main__":
    main()
