"""Corpus scans: classify, decompose and certify a list of graphs, then emit JSON or CSV."""

from __future__ import annotations

import csv
import io
import json
import os
import warnings
import zlib
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import __version__, bounds
from .errors import (
    AmbiguousGroupingWarning,
    BadFamilyParamsError,
    ConfigError,
    DenominatorNonpositiveError,
    GraphError,
)
from .generators import FamilySpec, generate
from .graph import Graph, is_connected
from .io import parse_edge_list, read_graph6_file
from .spectral import MAX_ORDER, GROUPING_TOL, group_multiplicities, spectrum
from .symmetry import DEFAULT_NODE_LIMIT, SymmetryReport, classify

CERTIFIERS = (
    "thm11",
    "thm12",
    "cor13",
    "lemma21",
    "lemma23",
    "const31",
    "const32",
    "const33",
    "partial_sums",
    "cycle_checks",
)
GRAPH6_SUFFIXES = {".g6", ".graph6"}
TRIAL_FUNCTIONS = 5
CSV_COLUMNS = ("graph_id", "certifier", "k", "lambda", "lhs", "rhs", "slack", "pass", "note")

Input = Union[FamilySpec, str, os.PathLike]


@dataclass(frozen=True)
class ScanConfig:
    inputs: Tuple[Input, ...]
    certifiers: Tuple[str, ...] = CERTIFIERS
    tol_group: float = GROUPING_TOL
    tol_ineq: float = bounds.INEQ_TOL
    assume_symmetric: bool = False
    node_limit: int = DEFAULT_NODE_LIMIT
    seed: int = 42
    max_k: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "certifiers", tuple(self.certifiers))
        if not self.inputs:
            raise ConfigError("at least one input is required")
        if not self.certifiers:
            raise ConfigError("at least one certifier is required")
        unknown = [c for c in self.certifiers if c not in CERTIFIERS]
        if unknown:
            raise ConfigError(f"unknown certifier(s) {unknown}; choose from {', '.join(CERTIFIERS)}")
        if not (self.tol_group > 0 and self.tol_ineq > 0):
            raise ConfigError("tolerances must be positive")
        if self.node_limit < 1:
            raise ConfigError("node limit must be >= 1")
        if self.max_k is not None and self.max_k < 0:
            raise ConfigError("max-k must be >= 0")

    def echo(self) -> dict:
        return {
            "inputs": [str(i) for i in self.inputs],
            "certifiers": list(self.certifiers),
            "tol_group": self.tol_group,
            "tol_ineq": self.tol_ineq,
            "assume_symmetric": self.assume_symmetric,
            "node_limit": self.node_limit,
            "seed": self.seed,
            "max_k": self.max_k,
        }


@dataclass
class GraphReport:
    graph_id: str
    n: int
    d: Optional[int]
    edges: int
    eligible: bool = True
    skip_reason: str = ""
    symmetry: dict = field(default_factory=dict)
    spectrum: dict = field(default_factory=dict)
    records: List[dict] = field(default_factory=list)
    skips: Dict[str, str] = field(default_factory=dict)
    worst_slack: Dict[str, float] = field(default_factory=dict)


@dataclass
class Report:
    graphs: List[GraphReport]
    summary: dict
    version: str
    config: dict

    def to_dict(self) -> dict:
        return _plain(asdict(self))


def _plain(obj):
    """Convert tuples and numpy scalars so the result survives a JSON round trip unchanged."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def load_inputs(inputs: Sequence[Input]) -> List[Tuple[str, Graph]]:
    """Resolve family specs and files into ``(graph_id, graph)`` pairs.

    Every failure is reported as :class:`ConfigError` so that a scan never
    starts on a partially readable corpus.
    """
    out = []
    for item in inputs:
        if isinstance(item, FamilySpec):
            out.append((str(item), generate(item)))
            continue
        path = Path(item)
        try:
            if path.suffix.lower() in GRAPH6_SUFFIXES:
                graphs = read_graph6_file(path)
                out.extend((f"{path}#{i}", g) for i, g in enumerate(graphs))
            else:
                out.append((str(path), parse_edge_list(path.read_text(encoding="utf-8"))))
        except (OSError, UnicodeDecodeError, ValueError) as exc:
            raise ConfigError(f"cannot read {path}: {exc}") from exc
    return out


def _record_row(rec) -> dict:
    row = {"record_type": "inequality" if isinstance(rec, bounds.InequalityRecord) else "constancy"}
    row.update(asdict(rec))
    row["passed"] = rec.passed
    return row


def _skip_reason(g: Graph) -> str:
    if g.degree is None:
        return "NotRegular"
    if g.degree == 0:
        return "DegreeZero"
    if not is_connected(g):
        return "Disconnected"
    if g.n > MAX_ORDER:
        return "TooLarge"
    return ""


def _trial_ks(n, max_k):
    ks = sorted({1, n // 2, n - 2})
    return [k for k in ks if 0 <= k <= min(max_k, n - 2)]


def _scan_graph(graph_id: str, g: Graph, cfg: ScanConfig) -> GraphReport:
    rep = GraphReport(graph_id, g.n, g.degree, g.edge_count)
    reason = _skip_reason(g)
    if reason:
        rep.eligible = False
        rep.skip_reason = reason
        rep.skips = {c: reason for c in cfg.certifiers}
        return rep

    sym: SymmetryReport = classify(g, cfg.node_limit)
    rep.symmetry = {
        "vertex_transitive": sym.vertex_transitive,
        "arc_transitive": sym.arc_transitive,
        "witness": sym.witness,
        "search_nodes": sym.search_nodes,
        "truncated": sym.truncated,
    }

    s = spectrum(g)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AmbiguousGroupingWarning)
        groups = group_multiplicities(s, cfg.tol_group)
    complete = len(groups) < 3
    mu = None if complete else bounds.mu_pair(groups)
    rep.spectrum = {
        "lambda1": s.lambda1,
        "mu1": groups[1].value,
        "m": groups[1].multiplicity,
        "mu2": None if mu is None else mu[2],
        "lambda_max": s.lambda_max,
        "max_residual": s.max_residual,
        "distinct_eigenvalues": len(groups),
        "fragile_grouping": groups.fragile,
    }

    gate = dict(assume_symmetric=cfg.assume_symmetric, tag_unverified=True)
    arc = dict(arc_transitive=sym.arc_transitive, **gate)
    vertex = dict(vertex_transitive=sym.vertex_transitive, **gate)
    max_k = g.n - 2 if cfg.max_k is None else min(cfg.max_k, g.n - 2)
    rng = np.random.default_rng([cfg.seed, zlib.crc32(graph_id.encode())])
    records = []

    for name in cfg.certifiers:
        if name == "thm11":
            for k in range(max_k + 1):
                for grp in groups.nonzero():
                    records.append(bounds.check_thm_1_1(s, k, grp.value, tol=cfg.tol_ineq,
                                                        grouping_tol=cfg.tol_group, **arc))
        elif name == "thm12":
            for k in range(max_k + 1):
                try:
                    records.append(bounds.check_thm_1_2(s, k, tol=cfg.tol_ineq, **arc))
                except DenominatorNonpositiveError:
                    rep.skips.setdefault(name, "DenominatorNonpositive")
        elif name == "cor13":
            if complete:
                rep.skips[name] = "CompleteGraph"
            else:
                records.append(bounds.check_cor_1_3(groups, tol=cfg.tol_ineq, **arc))
        elif name == "lemma21":
            records.append(bounds.check_lambda1_bound(g, s, tol=cfg.tol_ineq))
        elif name == "lemma23":
            for k in _trial_ks(g.n, max_k):
                for trial in range(TRIAL_FUNCTIONS):
                    h = rng.standard_normal(g.n)
                    rec = bounds.check_trial_lemma(g, s, h, k, tol=cfg.tol_ineq)
                    rec.params["trial"] = trial
                    records.append(rec)
        elif name in ("const31", "const32", "const33"):
            for grp in groups:
                if name == "const31":
                    rec = bounds.check_constancy_3_1(g, grp, **vertex)
                elif name == "const32":
                    rec = bounds.check_constancy_3_2(g, grp, grp.value, **arc)
                else:
                    rec = bounds.check_constancy_3_3(g, grp, grp.value, **arc)
                if rec.note == bounds.UNVERIFIED:
                    rec = _exploratory(rec)
                records.append(rec)
        elif name == "partial_sums":
            records.extend(bounds.check_partial_sums(s))
        elif name == "cycle_checks":
            if bounds.is_cycle(g):
                records.extend(bounds.check_cycle(g, groups))
            else:
                rep.skips[name] = "NotCycle"

    rep.records = [_record_row(r) for r in records]
    for row in rep.records:
        slack = _row_slack(row)
        key = _certifier_of(row["name"])
        rep.worst_slack[key] = min(rep.worst_slack.get(key, slack), slack)
    return rep


def _exploratory(rec: bounds.ConstancyRecord) -> bounds.ConstancyRecord:
    return replace(rec, note=f"{rec.note},exploratory")


def _certifier_of(record_name: str) -> str:
    return "cycle_checks" if record_name.startswith("cycle_") else record_name


def _row_slack(row) -> float:
    if row["record_type"] == "inequality":
        return row["slack"]
    return row["tolerance"] - row["max_deviation"]


def _counts_as_claim(row) -> bool:
    return bounds.UNVERIFIED not in row["note"]


def run_scan(config: ScanConfig) -> Report:
    """Run every requested certifier on every input graph.

    Graphs that are not connected and regular are kept with a skip reason.
    Records from graphs whose symmetry hypothesis is neither certified nor
    assumed are tagged ``hypothesis_unverified`` and reported but not
    counted as pass or fail.
    """
    try:
        corpus = load_inputs(config.inputs)
    except (BadFamilyParamsError, GraphError) as exc:
        raise ConfigError(str(exc)) from exc
    graphs = [_scan_graph(gid, g, config) for gid, g in corpus]
    passed = failed = unverified = skipped_records = 0
    for rep in graphs:
        skipped_records += len(rep.skips)
        for row in rep.records:
            if not _counts_as_claim(row):
                unverified += 1
            elif row["passed"]:
                passed += 1
            else:
                failed += 1
    eligible = sum(rep.eligible for rep in graphs)
    summary = {
        "input_graphs": len(graphs),
        "eligible_graphs": eligible,
        "skipped_graphs": len(graphs) - eligible,
        "passed": passed,
        "failed": failed,
        "unverified": unverified,
        "skipped": skipped_records,
    }
    return Report(graphs, summary, __version__, config.echo())


def exit_code(report: Report) -> int:
    return 0 if report.summary["failed"] == 0 else 2


# -- emission -------------------------------------------------------------------


def _num(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def csv_rows(report: Report) -> List[dict]:
    rows = []
    for rep in report.graphs:
        for row in rep.records:
            params = row["params"]
            if row["record_type"] == "inequality":
                lhs, rhs, slack, note = row["lhs"], row["rhs"], row["slack"], row["note"]
            else:
                lhs, rhs = row["max_deviation"], row["tolerance"]
                slack = rhs - lhs
                extra = (f"predicted={_num(row['predicted_value'])};"
                         f"rotation_deviation={_num(row['rotation_deviation'])}")
                note = ";".join(filter(None, [row["note"], extra]))
            rows.append({
                "graph_id": rep.graph_id,
                "certifier": row["name"],
                "k": params.get("k"),
                "lambda": params.get("lambda"),
                "lhs": lhs,
                "rhs": rhs,
                "slack": slack,
                "pass": row["passed"],
                "note": note,
                "_trial": params.get("trial", -1),
            })
        for certifier, reason in rep.skips.items():
            rows.append({
                "graph_id": rep.graph_id, "certifier": certifier, "k": None, "lambda": None,
                "lhs": None, "rhs": None, "slack": None, "pass": None,
                "note": f"skip:{reason}", "_trial": -1,
            })

    def key(r):
        k = -1 if r["k"] is None else r["k"]
        lam = -1.0 if r["lambda"] is None else r["lambda"]
        return (r["graph_id"], r["certifier"], k, lam, r["_trial"])

    rows.sort(key=key)
    return rows


def to_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in csv_rows(report):
        passed = "skip" if r["pass"] is None else _num(r["pass"])
        writer.writerow([
            r["graph_id"], r["certifier"], _num(r["k"]), _num(r["lambda"]),
            _num(r["lhs"]), _num(r["rhs"]), _num(r["slack"]), passed, r["note"],
        ])
    return buf.getvalue()


def to_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, allow_nan=False) + "\n"


def emit(report: Report, fmt: str, path: Union[str, os.PathLike, None] = None) -> str:
    """Serialize ``report`` as ``json`` or ``csv``; write it to ``path`` if given."""
    if fmt == "json":
        text = to_json(report)
    elif fmt == "csv":
        text = to_csv(report)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is not None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return text
