"""Batch drivers behind the command line: enumeration, scans, family
comparisons and record serialization."""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Iterable, Iterator, Optional

import numpy as np

from .bounds import EQUALITY_RTOL, HOLDS_RTOL, BoundReport, bound_CP, bound_J, bound_JB, evaluate_all
from .errors import OverflowGuard
from .graph import FamilySpec, Graph, generate, is_bipartite
from .graph6 import encode_graph6, parse_graph6
from .invariants import InvariantSet, compute_invariants

COMPARE_FAMILIES = ("star", "path", "complete", "cycle")
MAX_EXHAUSTIVE_N = 8


# Formatting

def fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".12g")
    return str(x)


def _jsonable(x):
    if isinstance(x, (float, np.floating)):
        return float(format(float(x), ".12g"))
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def json_line(obj) -> str:
    return json.dumps(_jsonable(obj), sort_keys=False, separators=(",", ":"))


def csv_line(values) -> str:
    out = []
    for v in values:
        s = fmt(v)
        if any(c in s for c in ',"\n'):
            s = '"' + s.replace('"', '""') + '"'
        out.append(s)
    return ",".join(out)


INVARIANT_COLUMNS = (
    "graph6", "n", "m", "t", "lambda1", "q1", "EE", "energy", "SLEE", "QE",
    "det_A", "abs_det_A", "singular", "k_nonneg", "k_pos", "M0", "M1", "M2", "M3",
)
BOUND_COLUMNS = (
    "graph6", "bound_id", "target", "direction", "target_value", "value",
    "applicable", "reason", "holds", "equality", "diagnostic",
)
SCAN_COLUMNS = ("kind", "graph6", "bound_id", "target", "target_value", "value", "gap", "diagnostic")
COMPARE_COLUMNS = ("family", "n", "m", "EE", "J", "CP", "JB", "J_minus_CP", "dominance")


def invariant_record(token: str, inv: InvariantSet) -> dict:
    return {"graph6": token, **inv.as_dict()}


def outcome_record(token: str, o) -> dict:
    return {
        "graph6": token,
        "bound_id": o.bound_id,
        "target": o.target,
        "direction": o.direction,
        "target_value": o.target_value,
        "value": o.value,
        "applicable": o.applicable,
        "reason": o.reason,
        "holds": o.holds,
        "equality": o.equality,
        "diagnostic": o.diagnostic,
    }


def report_json(report: BoundReport) -> dict:
    return {
        "graph6": report.graph6,
        "variant": report.variant,
        "invariants": report.invariants.as_dict(),
        "outcomes": [{k: v for k, v in outcome_record(report.graph6, o).items() if k != "graph6"} for o in report.outcomes],
    }


# Graph sources

def exhaustive_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices; bit ``b`` of the mask is the
    ``b``-th vertex pair in graph6 column order."""
    if not 1 <= n <= MAX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive enumeration supports 1 <= n <= {MAX_EXHAUSTIVE_N}, got {n}")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(sorted(p for b, p in enumerate(pairs) if mask >> b & 1)))


def random_graphs(count: int, max_n: int = 12, probs=(0.2, 0.5, 0.8), seed: int = 0) -> Iterator[Graph]:
    """Erdos-Renyi samples; the edge probability cycles through ``probs``."""
    rng = np.random.default_rng(seed)
    for k in range(count):
        n = int(rng.integers(1, max_n + 1))
        p = probs[k % len(probs)]
        pairs = [(i, j) for j in range(1, n) for i in range(j)]
        keep = rng.random(len(pairs)) < p
        yield Graph(n, tuple(sorted(pr for pr, on in zip(pairs, keep) if on)))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Optional[Graph], Optional[Exception]]]:
    """Yield ``(lineno, graph, error)`` for each non-blank line."""
    for lineno, line in enumerate(lines, 1):
        token = line.strip()
        if not token:
            continue
        try:
            yield lineno, parse_graph6(token), None
        except ValueError as exc:
            yield lineno, None, exc


# Scanning

@dataclass(frozen=True)
class ScanRecord:
    kind: str  # "violation" or "equality"
    graph6: str
    bound_id: str
    target: str
    target_value: float
    value: float
    gap: float
    diagnostic: bool

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in SCAN_COLUMNS}


@dataclass
class ScanSummary:
    graphs_scanned: int = 0
    violations: list[ScanRecord] = field(default_factory=list)
    equalities: list[ScanRecord] = field(default_factory=list)
    duration: float = 0.0
    errors: list[str] = field(default_factory=list)

    @property
    def hard_violations(self) -> list[ScanRecord]:
        """Violations not explained by the ``as_printed`` variant."""
        return [v for v in self.violations if not v.diagnostic]

    def records(self) -> list[ScanRecord]:
        return sorted(self.violations + self.equalities, key=lambda r: (r.graph6, r.kind, r.bound_id))

    def equality_ids(self, token: str) -> set[str]:
        return {r.bound_id for r in self.equalities if r.graph6 == token}


def _scan_one(token: str, variant: str, holds_rtol: float, eq_rtol: float):
    report = evaluate_all(parse_graph6(token), variant, holds_rtol, eq_rtol)
    found = []
    for o in report.outcomes:
        if not o.applicable:
            continue
        kind = "equality" if o.equality else ("violation" if not o.holds else None)
        if kind:
            found.append(ScanRecord(kind, token, o.bound_id, o.target, o.target_value, o.value, o.gap, o.diagnostic))
    return found


def scan(
    graphs: Iterable[Graph],
    variant: str = "corrected",
    holds_rtol: float = HOLDS_RTOL,
    eq_rtol: float = EQUALITY_RTOL,
    jobs: int = 1,
) -> ScanSummary:
    """Evaluate the whole bound catalog on every graph.

    Results do not depend on ``jobs``: records are sorted by graph6 token
    before they are returned.
    """
    start = time.perf_counter()
    tokens = [encode_graph6(g) for g in graphs]
    work = partial(_scan_one, variant=variant, holds_rtol=holds_rtol, eq_rtol=eq_rtol)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, tokens, chunksize=max(1, len(tokens) // (8 * jobs))))
    else:
        results = [work(t) for t in tokens]
    summary = ScanSummary(graphs_scanned=len(tokens))
    for recs in results:
        for r in recs:
            (summary.equalities if r.kind == "equality" else summary.violations).append(r)
    summary.violations.sort(key=lambda r: (r.graph6, r.bound_id))
    summary.equalities.sort(key=lambda r: (r.graph6, r.bound_id))
    summary.duration = time.perf_counter() - start
    return summary


# Family comparison

def closed_form_J(family: str, n: int) -> float:
    if family in ("star", "path"):
        return math.exp(2 - 2 / n) + (n + 2 / n) - 3
    if family == "complete":
        return math.exp(n - 1)
    if family == "cycle":
        return math.exp(2) + n - 3
    raise ValueError(family)


def closed_form_CP(family: str, n: int) -> float:
    if family in ("star", "path"):
        return math.sqrt(n * n + 4 * n - 4)
    if family == "complete":
        return math.sqrt(3 * n * n - 2 * n)
    if family == "cycle":
        return math.sqrt(n * n + 4 * n)
    raise ValueError(family)


@dataclass(frozen=True)
class CompareRow:
    family: str
    n: int
    m: int
    EE: Optional[float]
    J: float
    CP: float
    JB: Optional[float]

    @property
    def J_minus_CP(self) -> float:
        return self.J - self.CP

    @property
    def dominance(self) -> bool:
        return self.J >= self.CP

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in COMPARE_COLUMNS}


def compare_row(family: str, n: int, with_ee: bool = True) -> CompareRow:
    g = generate(FamilySpec(family, (n,)))
    ee = compute_invariants(g).EE if with_ee else None
    jb = bound_JB(n, g.m) if n >= 2 and is_bipartite(g) is not None else None
    return CompareRow(family, n, g.m, ee, bound_J(n, g.m), bound_CP(n, g.m), jb)


def compare(families: Iterable[str], ns: Iterable[int], with_ee: bool = True, on_overflow=None) -> list[CompareRow]:
    """Rows for each family over ``ns``. A family's range stops at the first
    ``n`` whose values overflow; ``on_overflow(family, n, exc)`` is told."""
    rows = []
    for family in families:
        if family not in COMPARE_FAMILIES:
            raise ValueError(f"unknown comparison family {family!r}; choose from {COMPARE_FAMILIES}")
        for n in ns:
            if family == "cycle" and n < 3:
                continue
            try:
                rows.append(compare_row(family, n, with_ee))
            except OverflowGuard as exc:
                if on_overflow is not None:
                    on_overflow(family, n, exc)
                break
    return rows
