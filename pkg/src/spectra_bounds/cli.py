"""Command-line harness: corpus ingestion, scans, report emission.

Subcommands: ``spectrum``, ``scan``, ``families``, ``brouwer``, ``compare``.
Records stream out as JSON lines (default) or CSV; identical configuration
gives byte-identical output regardless of the parallelism degree.

Exit codes: 0 clean, 1 bound violation (the offending graph6 line is printed
to stderr), 2 parse/usage failure, 3 I/O failure.
"""

from __future__ import annotations

import csv
import json
import sys
from multiprocessing import Pool

import click

from spectra_bounds import brouwer as brouwer_mod
from spectra_bounds import graph_bounds
from spectra_bounds.bounds_core import mohar_bound, nikiforov_pair_bound
from spectra_bounds.graphs import (
    ComplementOfCliques,
    adjacency,
    count_distinct,
    enumerate_labeled,
    exact_spectrum,
    from_graph6,
    generate,
    laplacian,
    parse_family,
    q_class_check,
    q_parameters,
    signless_laplacian,
    to_graph6,
    UnsupportedFamilyError,
)
from spectra_bounds.linalg import eigh, inertia, top_k_sum
from spectra_bounds.tolerances import SOUNDNESS_TOL, env_tolerance

SCAN_FIELDS = [
    "graph6",
    "bound",
    "k",
    "n",
    "m",
    "value",
    "actual",
    "slack",
    "equality",
    "applicable",
    "reason",
]

BROUWER_FIELDS = ["graph6", "n", "m", "min_slack", "min_k", "holds", "slacks"]

COMPARE_FIELDS = [
    "graph6",
    "n",
    "m",
    "k",
    "pair_actual",
    "adj2_k2",
    "nikiforov",
    "adj2_vs_nikiforov",
    "inertia_k",
    "mohar_k",
]


def _default_tol(tol: float | None) -> float:
    if tol is not None:
        return tol
    env = env_tolerance()
    return SOUNDNESS_TOL if env is None else env


def _load_corpus(input_paths, enumerate_n) -> list[str]:
    """Input graphs as graph6 lines, files first, then enumeration order."""
    lines: list[str] = []
    for path in input_paths:
        try:
            with open(path, "r", encoding="ascii") as fh:
                raw = fh.read()
        except OSError as exc:
            click.echo(f"error: cannot read {path}: {exc}", err=True)
            sys.exit(3)
        for line in raw.splitlines():
            line = line.strip()
            if line:
                lines.append(line)
    if enumerate_n is not None:
        try:
            lines.extend(to_graph6(G) for G in enumerate_labeled(enumerate_n))
        except ValueError as exc:
            raise click.UsageError(str(exc))
    if not lines:
        raise click.UsageError("no input graphs: pass --input and/or --enumerate")
    return lines


def _parse_k_range(text: str) -> tuple[int, int]:
    text = text.strip()
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise click.UsageError(f"bad k range {text!r}: expected 'a..b' or an integer")
    if lo < 1 or hi < lo:
        raise click.UsageError(f"bad k range {text!r}: need 1 <= a <= b")
    return lo, hi


class _Emitter:
    """Streams records to stdout or a file, then appends the summary."""

    def __init__(self, fmt: str, fields: list[str], output_path):
        self.fmt = fmt
        self.fields = fields
        if output_path is None:
            self.out = sys.stdout
            self._own = False
        else:
            try:
                self.out = open(output_path, "w", encoding="utf-8", newline="")
            except OSError as exc:
                click.echo(f"error: cannot write {output_path}: {exc}", err=True)
                sys.exit(3)
            self._own = True
        self.writer = None
        if fmt == "csv":
            self.writer = csv.DictWriter(self.out, fieldnames=fields, extrasaction="ignore")
            self.writer.writeheader()

    def write(self, rec: dict) -> None:
        if self.fmt == "json":
            self.out.write(json.dumps(rec, sort_keys=True) + "\n")
        else:
            self.writer.writerow(rec)

    def close(self, summary: dict) -> None:
        if self.fmt == "json":
            self.out.write(json.dumps({"summary": summary}, sort_keys=True) + "\n")
        else:
            click.echo(json.dumps({"summary": summary}, sort_keys=True), err=True)
        if self._own:
            self.out.close()


def _chunks(lines: list[str], jobs: int, minimum: int = 256) -> list[list[str]]:
    chunk = max(minimum, (len(lines) + 8 * jobs - 1) // (8 * jobs))
    return [lines[i : i + chunk] for i in range(0, len(lines), chunk)]


def _map_chunks(worker, tasks, jobs: int):
    """Ordered, optionally parallel map over chunk tasks."""
    if jobs <= 1:
        for task in tasks:
            yield worker(task)
        return
    with Pool(jobs) as pool:
        yield from pool.imap(worker, tasks)


@click.group()
def main():
    """Eigenvalue-sum bound toolkit for graph spectra."""


# ---------------------------------------------------------------------------
# spectrum


@main.command()
@click.argument("graph6_line")
@click.option(
    "--which",
    type=click.Choice(["adjacency", "laplacian", "signless"]),
    default="adjacency",
    show_default=True,
)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def spectrum(graph6_line, which, fmt):
    """Print the spectrum, inertia, and distinct count of one graph6 line."""
    try:
        G = from_graph6(graph6_line)
    except ValueError as exc:
        raise click.UsageError(f"graph6 parse failure: {exc}")
    matrix = {"adjacency": adjacency, "laplacian": laplacian, "signless": signless_laplacian}[
        which
    ](G)
    S = eigh(matrix)
    mean = float(matrix.mat.trace()) / G.n
    counts = inertia(S, mean)
    payload = {
        "graph6": to_graph6(G),
        "which": which,
        "n": G.n,
        "m": G.m,
        "eigenvalues": [float(f"{v:.12g}") for v in S.values],
        "mean": float(f"{mean:.12g}"),
        "nu": counts.nu,
        "theta": counts.theta,
        "zero": counts.zero,
        "distinct": count_distinct(S),
    }
    if which == "laplacian":
        payload["sigma"] = inertia(S, 2 * G.m / G.n + 1).theta
    if fmt == "json":
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        values = ", ".join(f"{v:.12g}" for v in S.values)
        click.echo(f"graph6 {payload['graph6']}  n={G.n} m={G.m} ({which})")
        click.echo(f"eigenvalues: {values}")
        line = (
            f"mean={mean:.12g}  nu={counts.nu} theta={counts.theta} "
            f"zero={counts.zero}  distinct={payload['distinct']}"
        )
        if "sigma" in payload:
            line += f"  sigma={payload['sigma']}"
        click.echo(line)


# ---------------------------------------------------------------------------
# scan


def _scan_records_for(line: str, bounds: tuple[str, ...], k_lo: int, k_hi: int):
    G = from_graph6(line)
    adj_spec = eigh(adjacency(G))
    lap_spec = eigh(laplacian(G))
    records = []
    for bound in bounds:
        for k in range(k_lo, min(k_hi, G.n) + 1):
            if bound == "brouwer":
                actual = top_k_sum(lap_spec, k)
                value = G.m + k * (k + 1) / 2
                slack = value - actual
                records.append(
                    {
                        "graph6": line,
                        "bound": bound,
                        "k": k,
                        "n": G.n,
                        "m": G.m,
                        "value": value,
                        "actual": actual,
                        "slack": slack,
                        "equality": abs(slack) <= 1e-7,
                        "applicable": True,
                        "reason": "",
                    }
                )
                continue
            rep = graph_bounds.evaluate_bound(G, bound, k, adj_spec, lap_spec)
            records.append(
                {
                    "graph6": line,
                    "bound": bound,
                    "k": k,
                    "n": G.n,
                    "m": G.m,
                    "value": rep.value if rep.applicable else None,
                    "actual": rep.actual,
                    "slack": rep.slack,
                    "equality": rep.equality,
                    "applicable": rep.applicable,
                    "reason": rep.reason,
                }
            )
    return records


def _scan_worker(args):
    lines, bounds, k_lo, k_hi = args
    out = []
    for line in lines:
        out.extend(_scan_records_for(line, bounds, k_lo, k_hi))
    return out


def _validate_bounds(raw: str) -> tuple[str, ...]:
    bounds = tuple(b.strip() for b in raw.split(",") if b.strip())
    known = set(graph_bounds.BOUND_IDS) | {"brouwer"}
    for b in bounds:
        if b not in known:
            raise click.UsageError(
                f"unknown bound {b!r}; known: {', '.join(sorted(known))}"
            )
    if not bounds:
        raise click.UsageError("empty bound list")
    return bounds


@main.command()
@click.option("--input", "input_paths", multiple=True, type=click.Path(), help="graph6 file")
@click.option("--enumerate", "enumerate_n", type=int, default=None, help="all labeled graphs on n vertices")
@click.option("--bound", "bounds_raw", default="adj1", show_default=True, help="comma-separated bound ids")
@click.option("--k", "k_range", default="1..1", show_default=True, help="k range a..b")
@click.option("--tol", type=float, default=None, help="violation tolerance (or SPECTRA_BOUNDS_TOL)")
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--output", "output_path", type=click.Path(), default=None)
def scan(input_paths, enumerate_n, bounds_raw, k_range, tol, jobs, fmt, output_path):
    """Evaluate bounds over a corpus; one record per (graph, bound, k)."""
    bounds = _validate_bounds(bounds_raw)
    k_lo, k_hi = _parse_k_range(k_range)
    tol = _default_tol(tol)
    lines = _load_corpus(input_paths, enumerate_n)
    tasks = [(c, bounds, k_lo, k_hi) for c in _chunks(lines, jobs)]

    stats = {
        b: {"records": 0, "applicable": 0, "min_slack": None, "witnesses": set(), "violations": 0}
        for b in bounds
    }
    violations: list[dict] = []
    emitter = _Emitter(fmt, SCAN_FIELDS, output_path)
    try:
        for part in _map_chunks(_scan_worker, tasks, jobs):
            for rec in part:
                emitter.write(rec)
                st = stats[rec["bound"]]
                st["records"] += 1
                if not rec["applicable"]:
                    continue
                st["applicable"] += 1
                slack = rec["slack"]
                if slack is not None:
                    if st["min_slack"] is None or slack < st["min_slack"]:
                        st["min_slack"] = slack
                    if slack < -tol:
                        st["violations"] += 1
                        violations.append(rec)
                if rec["equality"]:
                    st["witnesses"].add(rec["graph6"])
    except ValueError as exc:
        raise click.UsageError(f"graph6 parse failure: {exc}")

    summary = {
        "graphs": len(lines),
        "records": sum(st["records"] for st in stats.values()),
        "tol": tol,
        "bounds": {
            b: {
                "records": st["records"],
                "applicable": st["applicable"],
                "min_slack": st["min_slack"],
                "equality_witnesses": sorted(st["witnesses"]),
                "violations": st["violations"],
            }
            for b, st in stats.items()
        },
    }
    emitter.close(summary)
    if violations:
        for rec in violations:
            click.echo(
                f"VIOLATION {rec['bound']} k={rec['k']} slack={rec['slack']:.3e} {rec['graph6']}",
                err=True,
            )
        sys.exit(1)


# ---------------------------------------------------------------------------
# brouwer


def _brouwer_worker(lines):
    out = []
    for line in lines:
        G = from_graph6(line)
        rep = brouwer_mod.brouwer_slacks(G)
        out.append(
            {
                "graph6": line,
                "n": rep.n,
                "m": rep.m,
                "min_slack": float(rep.min_slack),
                "min_k": rep.min_k,
                "holds": bool(rep.min_slack >= 0),
                "slacks": [float(s) for s in rep.slacks],
            }
        )
    return out


@main.command("brouwer")
@click.option("--input", "input_paths", multiple=True, type=click.Path())
@click.option("--enumerate", "enumerate_n", type=int, default=None)
@click.option("--tol", type=float, default=None)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--output", "output_path", type=click.Path(), default=None)
def brouwer_cmd(input_paths, enumerate_n, tol, jobs, fmt, output_path):
    """Conjecture slack report per graph: min over k in [1, n-1]."""
    tol = _default_tol(tol)
    lines = _load_corpus(input_paths, enumerate_n)
    tasks = _chunks(lines, jobs)

    emitter = _Emitter(fmt, BROUWER_FIELDS, output_path)
    worst = None
    witnesses: set[str] = set()
    bad: list[dict] = []
    try:
        for part in _map_chunks(_brouwer_worker, tasks, jobs):
            for rec in part:
                emitter.write(rec)
                if worst is None or rec["min_slack"] < worst["min_slack"]:
                    worst = rec
                if abs(rec["min_slack"]) <= 1e-7:
                    witnesses.add(rec["graph6"])
                if rec["min_slack"] < -tol:
                    bad.append(rec)
    except ValueError as exc:
        raise click.UsageError(f"graph6 parse failure: {exc}")

    summary = {
        "graphs": len(lines),
        "tol": tol,
        "min_slack": worst["min_slack"],
        "min_graph6": worst["graph6"],
        "min_k": worst["min_k"],
        "equality_witnesses": sorted(witnesses),
        "violations": len(bad),
    }
    emitter.close(summary)
    if bad:
        for rec in bad:
            click.echo(
                f"VIOLATION brouwer k={rec['min_k']} slack={rec['min_slack']:.3e} {rec['graph6']}",
                err=True,
            )
        sys.exit(1)


# ---------------------------------------------------------------------------
# families


@main.command()
@click.argument("spec_text")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def families(spec_text, fmt):
    """Generate a named family instance with exact spectra and class metadata.

    Grammar: Kn(5), Kpq(2,3), Star(4), Parts(3,2,1), Bal(t=2,p=3),
    QComp(a=2,b=3), G3(x=2,y=2), Join(a,b), Union(a,b,...).
    """
    try:
        spec = parse_family(spec_text)
        G = generate(spec)
    except ValueError as exc:
        raise click.UsageError(f"family spec failure: {exc}")
    payload = {
        "spec": spec_text.strip(),
        "graph6": to_graph6(G),
        "n": G.n,
        "m": G.m,
    }
    for which in ("adjacency", "laplacian"):
        try:
            exact = exact_spectrum(spec, which)
            payload[which] = [
                {"value": repr(v), "float": float(v), "mult": mult}
                for v, mult in exact.entries
            ]
        except UnsupportedFamilyError:
            payload[which] = None
    if isinstance(spec, ComplementOfCliques):
        try:
            c, _, t = q_parameters(spec.a, spec.b)
            membership_t = t if c == spec.c else None
        except ValueError:
            membership_t = None
        payload["q_class_t"] = membership_t
        payload["q_class_member"] = (
            q_class_check(G, membership_t) if membership_t is not None else False
        )
    if fmt == "json":
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        click.echo(f"{payload['spec']}: graph6 {payload['graph6']}  n={G.n} m={G.m}")
        for which in ("adjacency", "laplacian"):
            if payload[which] is None:
                click.echo(f"{which}: no closed form")
            else:
                body = ", ".join(f"{e['value']}^{e['mult']}" for e in payload[which])
                click.echo(f"{which}: {body}")
        if "q_class_member" in payload:
            click.echo(
                f"three-distinct-class membership: t={payload['q_class_t']} "
                f"member={payload['q_class_member']}"
            )


# ---------------------------------------------------------------------------
# compare


def _compare_worker(args):
    lines, k = args
    out = []
    for line in lines:
        G = from_graph6(line)
        if G.m < 1:
            continue
        adj_spec = eigh(adjacency(G))
        n = G.n
        rec = {
            "graph6": line,
            "n": n,
            "m": G.m,
            "k": k,
            "pair_actual": top_k_sum(adj_spec, min(2, n)),
            "adj2_k2": None,
            "nikiforov": nikiforov_pair_bound(n),
            "adj2_vs_nikiforov": None,
            "inertia_k": None,
            "mohar_k": mohar_bound(n, k) if k <= n else None,
        }
        rep2 = graph_bounds.evaluate_bound(G, "adj2", 2, adj_spec)
        if rep2.applicable:
            rec["adj2_k2"] = rep2.value
            rec["adj2_vs_nikiforov"] = (
                "adj2" if rep2.value < rec["nikiforov"] else "nikiforov"
            )
        if k <= n:
            rep_i = graph_bounds.evaluate_bound(G, "inertia", k, adj_spec)
            if rep_i.applicable:
                rec["inertia_k"] = rep_i.value
        out.append(rec)
    return out


@main.command()
@click.option("--input", "input_paths", multiple=True, type=click.Path())
@click.option("--enumerate", "enumerate_n", type=int, default=None)
@click.option("--k", "k_value", type=int, default=1, show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--output", "output_path", type=click.Path(), default=None)
def compare(input_paths, enumerate_n, k_value, jobs, fmt, output_path):
    """Compare the theta+2 pair bound against the pairwise comparator, and the
    inertia bound against the classical one, across a corpus."""
    if k_value < 1:
        raise click.UsageError("--k must be >= 1")
    lines = _load_corpus(input_paths, enumerate_n)
    tasks = [(c, k_value) for c in _chunks(lines, jobs)]

    emitter = _Emitter(fmt, COMPARE_FIELDS, output_path)
    n_graphs = 0
    adj2_wins: list[str] = []
    nik_wins: list[str] = []
    inertia_above_mohar = 0
    try:
        for part in _map_chunks(_compare_worker, tasks, jobs):
            for rec in part:
                emitter.write(rec)
                n_graphs += 1
                if rec["adj2_vs_nikiforov"] == "adj2":
                    adj2_wins.append(rec["graph6"])
                elif rec["adj2_vs_nikiforov"] == "nikiforov":
                    nik_wins.append(rec["graph6"])
                if (
                    rec["inertia_k"] is not None
                    and rec["mohar_k"] is not None
                    and rec["inertia_k"] > rec["mohar_k"] + 1e-9
                ):
                    inertia_above_mohar += 1
    except ValueError as exc:
        raise click.UsageError(f"graph6 parse failure: {exc}")

    summary = {
        "graphs": n_graphs,
        "adj2_beats_nikiforov": len(adj2_wins),
        "nikiforov_beats_adj2": len(nik_wins),
        "adj2_win_example": adj2_wins[0] if adj2_wins else None,
        "nikiforov_win_example": nik_wins[0] if nik_wins else None,
        "inertia_above_mohar": inertia_above_mohar,
    }
    emitter.close(summary)


if __name__ == "__main__":
    main()
