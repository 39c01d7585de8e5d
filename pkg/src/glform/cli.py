"""Command-line interface.

Exit codes: 0 success (or certified), 1 I/O failure, 2 computation error,
3 quasi-alternating search returned unknown, 4 name lookup failure.
"""

from __future__ import annotations

import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import click

from . import bounds as bounds_mod
from . import census as census_mod
from . import gl_form, quasialt
from .diagram import Diagram, DiagramError, parse_pd, resolve, serialize
from .exact_forms import definiteness, smith_normal_form

EXIT_IO = 1
EXIT_COMPUTE = 2
EXIT_QA_UNKNOWN = 3
EXIT_LOOKUP = 4


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_table(path):
    try:
        if path:
            return census_mod.load_census(path)
        return census_mod.load_bundled()
    except OSError as exc:
        _fail(EXIT_IO, f"cannot read census: {exc}")
    except (census_mod.MissingColumn, census_mod.BadRow) as exc:
        _fail(EXIT_IO, f"bad census: {exc}")


def _diagram_from(pd, name, table_path) -> tuple[Diagram, object]:
    if (pd is None) == (name is None):
        _fail(EXIT_IO, "give exactly one of --pd or --name")
    if pd is not None:
        try:
            return parse_pd(pd), None
        except DiagramError as exc:
            _fail(EXIT_COMPUTE, f"bad PD: {exc}")
    table = _load_table(table_path)
    rec = table.get(name)
    if rec is None:
        _fail(EXIT_LOOKUP, f"unknown knot name {name!r}")
    return rec.diagram(), rec


def _invariants_payload(d: Diagram, name=None) -> dict:
    out = {
        "sigma": gl_form.knot_signature(d) if d.n_components == 1 else None,
        "det": gl_form.link_determinant(d),
        "colorings": [],
    }
    if name:
        out["name"] = name
    from .diagram import checkerboard
    h1 = None
    for col in checkerboard(d):
        g = gl_form.goeritz(d, col)
        cb = gl_form.cover_betti(g)
        out["colorings"].append({
            "b1": g.b1_surface,
            "mu": g.mu,
            "euler": g.euler_number,
            "b2_plus": cb.b2_plus,
            "b2_minus": cb.b2_minus,
            "nullity": cb.b2_zero,
            "definiteness": definiteness(g.matrix),
        })
        if h1 is None:
            h1 = [f for f in smith_normal_form(g.matrix) if f != 1]
    out["h1_factors"] = h1
    return out


def _emit(payload: dict, fmt: str):
    if fmt == "json":
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        for k, v in payload.items():
            click.echo(f"{k}: {v}")


@click.group()
def main():
    """Exact checkerboard-form invariants of knot diagrams."""


_common = [
    click.option("--pd", default=None, help="PD code of the diagram"),
    click.option("--name", default=None, help="knot name from the census"),
    click.option("--table", "table_path", default=None,
                 help="census CSV path (default: bundled)"),
    click.option("--format", "fmt", default="json",
                 type=click.Choice(["json", "text"])),
]


def _with(opts):
    def deco(f):
        for o in reversed(opts):
            f = o(f)
        return f
    return deco


@main.command()
@_with(_common)
def invariants(pd, name, table_path, fmt):
    """Signature, determinant and per-coloring form data."""
    d, _ = _diagram_from(pd, name, table_path)
    try:
        payload = _invariants_payload(d, name)
    except gl_form.MultiComponent as exc:
        _fail(EXIT_COMPUTE, str(exc))
    _emit(payload, fmt)


@main.command()
@_with(_common)
@click.option("--budget-nodes", default=1_000_000, show_default=True)
@click.option("--budget-seconds", default=60.0, show_default=True)
@click.option("--memo", default=None,
              help="memo cache path (default: $GLFORM_MEMO)")
@click.option("--certificate", "cert_path", default=None,
              help="write the certificate JSON here when certified")
def qa(pd, name, table_path, fmt, budget_nodes, budget_seconds, memo,
       cert_path):
    """Search for a quasi-alternating certificate."""
    d, _ = _diagram_from(pd, name, table_path)
    memo_path = memo or os.environ.get("GLFORM_MEMO")
    cache = quasialt.MemoCache(memo_path)
    verdict = quasialt.qa_certify(
        d, quasialt.Budget(budget_nodes, budget_seconds), cache)
    payload = {
        "status": verdict.status,
        "nodes_explored": verdict.nodes_explored,
        "budget_hit": verdict.budget_hit,
    }
    if name:
        payload["name"] = name
    if verdict.certificate:
        payload["certificate"] = verdict.certificate.to_json()
        if cert_path:
            try:
                with open(cert_path, "w") as fh:
                    json.dump(payload["certificate"], fh, sort_keys=True)
            except OSError as exc:
                _fail(EXIT_IO, f"cannot write certificate: {exc}")
    _emit(payload, fmt)
    if verdict.status != "certified":
        sys.exit(EXIT_QA_UNKNOWN)


@main.command()
@click.option("--name", required=True)
@click.option("--table", "table_path", default=None)
@click.option("--format", "fmt", default="json",
              type=click.Choice(["json", "text"]))
@click.option("--qa-first/--no-qa-first", default=True, show_default=True,
              help="run the certificate search before aggregating")
@click.option("--budget-nodes", default=1_000_000, show_default=True)
@click.option("--budget-seconds", default=60.0, show_default=True)
@click.option("--memo", default=None)
def bounds(name, table_path, fmt, qa_first, budget_nodes, budget_seconds,
           memo):
    """Aggregate every applicable bound for a census knot."""
    table = _load_table(table_path)
    rec = table.get(name)
    if rec is None:
        _fail(EXIT_LOOKUP, f"unknown knot name {name!r}")
    verdict = None
    if qa_first:
        cache = quasialt.MemoCache(memo or os.environ.get("GLFORM_MEMO"))
        verdict = quasialt.qa_certify(
            rec.diagram(), quasialt.Budget(budget_nodes, budget_seconds),
            cache)
    try:
        report = bounds_mod.aggregate_report(rec, qa=verdict)
    except (bounds_mod.InconsistentDiagrams,
            bounds_mod.InconsistentInput) as exc:
        _fail(EXIT_COMPUTE, str(exc))
    _emit(report.to_json(), fmt)


@main.command()
@click.argument("subcommand",
                type=click.Choice(["invariants", "qa", "bounds"]))
@click.option("--table", "table_path", default=None)
@click.option("--jobs", default=1, show_default=True)
@click.option("--budget-nodes", default=1_000_000, show_default=True)
@click.option("--budget-seconds", default=60.0, show_default=True)
@click.option("--memo", default=None)
def batch(subcommand, table_path, jobs, budget_nodes, budget_seconds, memo):
    """Run a subcommand over every census row, one JSON line per knot.

    Output order always matches table order, independent of --jobs."""
    table = _load_table(table_path)
    cache = quasialt.MemoCache(memo or os.environ.get("GLFORM_MEMO"))
    budget = quasialt.Budget(budget_nodes, budget_seconds)

    def one(rec):
        try:
            if subcommand == "invariants":
                return _invariants_payload(rec.diagram(), rec.name)
            verdict = quasialt.qa_certify(rec.diagram(), budget, cache)
            if subcommand == "qa":
                out = {"name": rec.name, "status": verdict.status,
                       "budget_hit": verdict.budget_hit}
                if verdict.certificate:
                    out["certificate"] = verdict.certificate.to_json()
                return out
            return bounds_mod.aggregate_report(rec, qa=verdict).to_json()
        except Exception as exc:  # embed row-level failures
            return {"name": rec.name, "error": str(exc)}

    rows = list(table)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(one, rows))
    else:
        results = [one(r) for r in rows]
    for payload in results:
        click.echo(json.dumps(payload, sort_keys=True))


@main.command("resolve")
@click.option("--pd", required=True)
@click.option("--crossing", required=True, type=int)
@click.option("--resolution", required=True, type=click.Choice(["0", "1"]))
@click.option("--format", "fmt", default="json",
              type=click.Choice(["json", "text"]))
def resolve_cmd(pd, crossing, resolution, fmt):
    """Smooth one crossing and print the resulting PD."""
    try:
        d = parse_pd(pd)
        if not 0 <= crossing < d.n_crossings:
            _fail(EXIT_COMPUTE, f"crossing {crossing} out of range")
        out = resolve(d, crossing, int(resolution))
    except DiagramError as exc:
        _fail(EXIT_COMPUTE, str(exc))
    payload = {"pd": serialize(out),
               "det": gl_form.link_determinant(out),
               "components": out.n_components}
    _emit(payload, fmt)


@main.command("audit-conventions")
@click.option("--table", "table_path", default=None)
@click.option("--format", "fmt", default="json",
              type=click.Choice(["json", "text"]))
def audit_conventions(table_path, fmt):
    """Recompute sigma/det for every row and flag disagreements."""
    table = _load_table(table_path)
    mismatches = []
    for rec in table:
        d = rec.diagram()
        det = gl_form.link_determinant(d)
        sig = gl_form.knot_signature(d) if d.n_components == 1 else None
        bad = {}
        if rec.det is not None and rec.det != det:
            bad["det"] = {"table": rec.det, "computed": det}
        if rec.sigma is not None and rec.sigma != sig:
            bad["sigma"] = {"table": rec.sigma, "computed": sig}
        if bad:
            mismatches.append({"name": rec.name, **bad})
    payload = {"rows_checked": len(table), "mismatches": mismatches}
    _emit(payload, fmt)
    if mismatches:
        sys.exit(EXIT_COMPUTE)


if __name__ == "__main__":
    main()
