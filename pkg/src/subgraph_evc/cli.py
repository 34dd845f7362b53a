"""Command line interface: ``subgraph-evc compute|check|dataset|patterns``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import shutil
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import datasets
from .centrality import (betweenness_centrality, correlate, degree_centrality, ec, f_centrality,
                         mixed_centrality, ranking, subgraph_centrality)
from .errors import (CentralityUndefinedError, GraphParseError, NotConvergedError,
                     NotFConnectedError, PatternError, PatternTooLargeError)
from .graph import Graph, is_connected, parse_edge_list, parse_pajek
from .pattern import (BUILTIN_EXAMPLES, Pattern, builtin_pattern, enumerate_occurrences,
                      is_f_connected, parse_pattern)
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL
from .tensor import CONVENTIONS, MixedTensor, SubgraphTensor, is_weakly_irreducible

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNDEFINED = 3
EXIT_NOT_CONVERGED = 4

BASIC = ("ec", "dc", "bc", "sc")


@dataclass
class RunConfig:
    command: str = "compute"
    graph: str = "karate"
    format: str = "auto"
    one_based: bool = False
    pattern: str | None = None
    measures: list = field(default_factory=lambda: ["ec"])
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    out: str = "json"
    output: str | None = None
    corr: str = "spearman"
    convention: str = "set"
    trace_convergence: str | None = None

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("--tol must be positive")


def load_graph(source: str, fmt: str = "auto", one_based: bool = False) -> Graph:
    if source == "karate":
        return datasets.karate()
    path = Path(source)
    text = path.read_text(encoding="utf-8")
    if fmt == "auto":
        fmt = "pajek" if path.suffix.lower() in (".net", ".paj") or \
            text.lstrip().lower().startswith("*vertices") else "edgelist"
    if fmt == "pajek":
        return parse_pajek(text)
    if fmt == "edgelist":
        return parse_edge_list(text, one_based=one_based)
    raise ValueError(f"unknown graph format {fmt!r}")


def resolve_pattern(token: str) -> Pattern:
    """Builtin token first, then a pattern file path."""
    try:
        return builtin_pattern(token)
    except PatternError:
        path = Path(token)
        if path.is_file():
            p = parse_pattern(path.read_text(encoding="utf-8"))
            return Pattern(p.k, p.edges, path.stem)
        raise


def parse_measure(token: str, default_pattern: str | None = None):
    """Split a measure token into ``(kind, pattern_token)``.

    Accepted: ``ec dc bc sc``, ``f:<pat>``, ``k2f:<pat>``, bare ``f``/``k2f``
    (using ``--pattern``), and shorthands such as ``p2c`` or ``k2k3c``.
    """
    tok = token.strip().lower()
    if tok in BASIC:
        return tok, None
    if tok in ("f", "k2f"):
        if not default_pattern:
            raise PatternError(f"measure {tok!r} needs --pattern")
        return tok, default_pattern
    m = re.match(r"^(f|k2f):(.+)$", token.strip())
    if m:
        return m.group(1).lower(), m.group(2)
    m = re.match(r"^k2(.+)c$", tok)
    if m and _is_builtin(m.group(1)):
        return "k2f", m.group(1)
    m = re.match(r"^(.+)c$", tok)
    if m and _is_builtin(m.group(1)):
        return "f", m.group(1)
    raise PatternError(f"unknown measure {token!r}")


def _is_builtin(tok):
    try:
        builtin_pattern(tok)
        return True
    except PatternError:
        return False


def _labels(g, vertices):
    return [g.labels[v] for v in vertices]


def _measure_block(name, g, cv, kind, pattern):
    r = ranking(cv)
    block = {"name": name, "kind": kind, "pattern": pattern.name if pattern else None,
             "rho": cv.meta.get("rho"), "converged": cv.meta.get("converged", True),
             "iterations": cv.meta.get("iterations", 0)}
    if "convention" in cv.meta:
        block["convention"] = cv.meta["convention"]
        block["residual_inf"] = cv.meta["residual_inf"]
    block["scores"] = [float(s) for s in cv.scores]
    block["ranking"] = _labels(g, r.order)
    block["ties"] = [_labels(g, t) for t in r.ties]
    return block


def _diagnostics(g, pattern, occ):
    fc = is_f_connected(g, pattern, occ)
    diag = {"pattern": pattern.name, "k": pattern.k,
            "occurrence_sets": len(occ), "occurrences": occ.total(),
            "f_connected": fc.connected,
            "uncovered_edges": [_labels(g, e) for e in fc.uncovered],
            "covered_components": [_labels(g, c) for c in fc.components],
            "tensor_weakly_irreducible": is_weakly_irreducible(SubgraphTensor(pattern.k, g.n, occ)).irreducible}
    if pattern.k >= 3:
        diag["mixed_tensor_weakly_irreducible"] = is_weakly_irreducible(
            MixedTensor(pattern.k, g.n, occ, g)).irreducible
    else:
        diag["mixed_tensor_weakly_irreducible"] = None
    return diag


def compute_report(cfg: RunConfig, graph: Graph | None = None, trace: list | None = None) -> dict:
    """Run every requested measure and assemble the report document."""
    g = graph if graph is not None else load_graph(cfg.graph, cfg.format, cfg.one_based)
    blocks, vectors, diagnostics = [], [], {"connected": is_connected(g), "patterns": []}
    seen_patterns = set()
    for token in cfg.measures:
        kind, ptok = parse_measure(token, cfg.pattern)
        pattern = resolve_pattern(ptok) if ptok else None
        cb = None
        if trace is not None and kind in ("ec", "f", "k2f"):
            cb = lambda it, lo, hi, _n=token: trace.append((_n, it, lo, hi))  # noqa: E731
        if kind == "ec":
            cv = ec(g, cfg.tol, cfg.max_iter, cb)
        elif kind == "dc":
            cv = degree_centrality(g)
        elif kind == "bc":
            cv = betweenness_centrality(g)
        elif kind == "sc":
            cv = subgraph_centrality(g)
        elif kind == "f":
            cv = f_centrality(g, pattern, cfg.tol, cfg.max_iter, cfg.convention, cb)
        else:
            cv = mixed_centrality(g, pattern, cfg.tol, cfg.max_iter, cfg.convention, cb)
        if pattern is not None and pattern.name not in seen_patterns:
            seen_patterns.add(pattern.name)
            diagnostics["patterns"].append(_diagnostics(g, pattern, enumerate_occurrences(g, pattern)))
        blocks.append(_measure_block(token, g, cv, kind, pattern))
        vectors.append((token, cv))

    correlations = {}
    if len(vectors) >= 2:
        matrix = {}
        for a, ca in vectors:
            matrix[a] = {}
            for b, cb_ in vectors:
                try:
                    matrix[a][b] = correlate(ca, cb_, cfg.corr)
                except ValueError:
                    matrix[a][b] = None
        correlations = {"method": cfg.corr, "matrix": matrix}
    return {"graph": {"n": g.n, "m": g.m}, "measures": blocks,
            "correlations": correlations, "diagnostics": diagnostics}


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def render_csv(doc: dict, labels) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["vertex"] + [b["name"] for b in doc["measures"]])
    for i, lab in enumerate(labels):
        w.writerow([lab] + [repr(b["scores"][i]) for b in doc["measures"]])
    return buf.getvalue()


def render_table(doc: dict, labels) -> str:
    names = [b["name"] for b in doc["measures"]]
    width = max([10] + [len(n) + 2 for n in names])
    lines = [f"graph: n={doc['graph']['n']} m={doc['graph']['m']}"]
    for b in doc["measures"]:
        if b["rho"] is not None:
            lines.append(f"{b['name']}: rho={b['rho']:.6f} iterations={b['iterations']} "
                         f"convention={b.get('convention', 'set')}")
    lines.append("vertex".ljust(8) + "".join(n.rjust(width) for n in names))
    for i, lab in enumerate(labels):
        lines.append(str(lab).ljust(8) + "".join(f"{b['scores'][i]:.4f}".rjust(width)
                                                  for b in doc["measures"]))
    lines.append("")
    for b in doc["measures"]:
        lines.append(f"top {b['name']}: " + " ".join(map(str, b["ranking"][:10])))
    return "\n".join(lines) + "\n"


def _emit(text, output):
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _fail(code, message, **extra):
    payload = {"error": message}
    payload.update(extra)
    sys.stderr.write(json.dumps(payload) + "\n")
    return code


def cmd_compute(cfg: RunConfig) -> int:
    try:
        g = load_graph(cfg.graph, cfg.format, cfg.one_based)
    except (OSError, GraphParseError, ValueError) as exc:
        return _fail(EXIT_INPUT, str(exc))
    trace = [] if cfg.trace_convergence else None
    try:
        doc = compute_report(cfg, g, trace)
    except NotFConnectedError as exc:
        w = exc.witness
        return _fail(EXIT_UNDEFINED, str(exc), kind="NotFConnected",
                     uncovered_edges=[_labels(g, e) for e in w.uncovered],
                     components=[_labels(g, c) for c in w.components])
    except CentralityUndefinedError as exc:
        return _fail(EXIT_UNDEFINED, str(exc), kind=type(exc).__name__.replace("Error", ""))
    except NotConvergedError as exc:
        return _fail(EXIT_NOT_CONVERGED, str(exc), kind="NotConverged")
    except (PatternError, PatternTooLargeError, GraphParseError, OSError, ValueError) as exc:
        return _fail(EXIT_INPUT, str(exc))
    if trace is not None:
        with open(cfg.trace_convergence, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["measure", "iteration", "lower", "upper"])
            for row in trace:
                w.writerow([row[0], row[1], repr(row[2]), repr(row[3])])
    if cfg.out == "json":
        _emit(render_json(doc), cfg.output)
    elif cfg.out == "csv":
        _emit(render_csv(doc, g.labels), cfg.output)
    else:
        _emit(render_table(doc, g.labels), cfg.output)
    return EXIT_OK


def check_report(g: Graph, pattern: Pattern) -> dict:
    occ = enumerate_occurrences(g, pattern)
    diag = _diagnostics(g, pattern, occ)
    per_vertex = occ.per_vertex(g.n)
    return {"graph": {"n": g.n, "m": g.m}, "connected": is_connected(g), **diag,
            "per_vertex_occurrences": {str(g.labels[v]): int(per_vertex[v]) for v in range(g.n)}}


def cmd_check(cfg: RunConfig) -> int:
    try:
        g = load_graph(cfg.graph, cfg.format, cfg.one_based)
        pattern = resolve_pattern(cfg.pattern or "p2")
        doc = check_report(g, pattern)
    except (OSError, GraphParseError, PatternError, PatternTooLargeError, ValueError) as exc:
        return _fail(EXIT_INPUT, str(exc))
    _emit(render_json(doc), cfg.output)
    return EXIT_OK


def cmd_dataset(name: str, output: str | None = None) -> int:
    if not name:
        return _fail(EXIT_INPUT, "usage: subgraph-evc dataset NAME (available: karate)")
    try:
        path = datasets.dataset_path(name)
    except KeyError as exc:
        return _fail(EXIT_INPUT, exc.args[0])
    g = datasets.karate()
    if (g.n, g.m) != (datasets.KARATE_N, datasets.KARATE_M):
        return _fail(EXIT_INPUT, f"bundled karate file is corrupt: n={g.n} m={g.m}")
    if output:
        shutil.copyfile(path, output)
        path = Path(output)
    print(path)
    return EXIT_OK


def cmd_patterns() -> int:
    for tok in BUILTIN_EXAMPLES:
        p = builtin_pattern(tok)
        edges = " ".join(f"{u}-{v}" for u, v in sorted(p.edges))
        print(f"{tok:8s} k={p.k}  {edges}")
    print("general forms: p<r> (path, r edges), k<r> (complete), star-<r>, cycle-<r>")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subgraph-evc",
                                     description="Subgraph eigenvector centralities of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p):
        p.add_argument("--graph", required=True, help="edge-list/Pajek path, or 'karate'")
        p.add_argument("--format", choices=("auto", "edgelist", "pajek"), default="auto")
        p.add_argument("--one-based", action="store_true", help="edge-list ids start at 1")
        p.add_argument("--pattern", help="builtin pattern token or pattern file")
        p.add_argument("--output", help="write to this file instead of stdout")

    p = sub.add_parser("compute", help="compute centrality measures")
    graph_args(p)
    p.add_argument("--measure", action="append",
                   help="comma list of ec,dc,bc,sc,f:<pat>,k2f:<pat> (or p2c, k2k3c, ...); "
                        "repeatable, default ec")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p.add_argument("--out", choices=("json", "csv", "table"), default="json")
    p.add_argument("--corr", choices=("pearson", "spearman"), default="spearman")
    p.add_argument("--convention", choices=CONVENTIONS, default="set",
                   help="pattern-part contraction: per vertex set, or per ordered tuple")
    p.add_argument("--trace-convergence", metavar="PATH",
                   help="write per-iteration bracket values as CSV")

    p = sub.add_parser("check", help="existence diagnostics for a pattern")
    graph_args(p)

    p = sub.add_parser("dataset", help="print the path of a bundled dataset")
    p.add_argument("name", nargs="?", default="")
    p.add_argument("--output", help="copy the dataset file here")

    sub.add_parser("patterns", help="list builtin patterns")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "patterns":
        return cmd_patterns()
    if args.command == "dataset":
        return cmd_dataset(args.name, args.output)
    common = dict(graph=args.graph, format=args.format, one_based=args.one_based,
                  pattern=args.pattern, output=args.output)
    if args.command == "check":
        return cmd_check(RunConfig(command="check", **common))
    try:
        cfg = RunConfig(command="compute", measures=[m for arg in (args.measure or ["ec"])
                                                  for m in arg.split(",") if m],
                        tol=args.tol, max_iter=args.max_iter, out=args.out, corr=args.corr,
                        convention=args.convention, trace_convergence=args.trace_convergence,
                        **common)
    except ValueError as exc:
        return _fail(EXIT_INPUT, str(exc))
    return cmd_compute(cfg)


if __name__ == "__main__":
    sys.exit(main())
