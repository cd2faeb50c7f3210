"""Closed-form bounds on the Estrada index, its signless Laplacian analogue and
the graph energy, with a per-graph evaluator.

Every bound is a plain function of scalar invariants. :func:`evaluate_all`
applies the full catalog to one graph and records, per bound, whether its
hypotheses are met, whether it holds, and whether it is attained.

The Das-type bounds come in two variants. ``corrected`` subtracts
``ln(lambda1)`` and is a valid bound; ``as_printed`` adds it, which fails on
``K3`` (bound ``4 + 2 ln 2`` against energy 4) and is kept only to reproduce
that inequality as written.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .eigen import jacobi_eigen, row_sum_stats, trace
from .errors import NotApplicable, OverflowGuard
from .graph import (
    Graph,
    adjacency_matrix,
    is_bipartite,
    is_connected,
    regularity,
    signless_laplacian_matrix,
)
from .graph6 import encode_graph6
from .invariants import EXP_LIMIT, InvariantSet, compute_invariants, estrada_index

VARIANTS = ("corrected", "as_printed")
HOLDS_RTOL = 1e-9
EQUALITY_RTOL = 1e-7


def _exp(x: float) -> float:
    if x > EXP_LIMIT:
        raise OverflowGuard(f"exp({x:.6g}) exceeds double range")
    return math.exp(x)


def _check_variant(variant):
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    return -1.0 if variant == "corrected" else 1.0


def bound_J(n: int, m: int) -> float:
    """Lower bound ``e^d + (n - 1) - d`` on EE, with ``d = 2m/n``."""
    d = 2.0 * m / n
    return _exp(d) + (n - 1) - d


def bound_J_regular(n: int, alpha: int) -> float:
    return _exp(alpha) + n - alpha - 1


def bound_JB(n: int, m: int) -> float:
    """Lower bound ``2 cosh(2m/n) + n - 2`` on EE of a bipartite graph."""
    if n < 2:
        raise NotApplicable("bipartite bound needs n >= 2")
    d = 2.0 * m / n
    _exp(d)
    return 2.0 * math.cosh(d) + (n - 2)


def bound_SLEE(n: int, m: int) -> float:
    d = 4.0 * m / n
    return _exp(d) + (n - 1) + 2 * m - d


def bound_CP(n: int, m: int) -> float:
    return math.sqrt(n * n + 4 * m)


def bound_dlp_upper(n: int, m: int) -> float:
    return n - 1 + _exp(math.sqrt(2 * m))


def koolen_moulton_upper(n: int, m: int, lambda1: float) -> float:
    # sum of lambda_i^2 is 2m, so a negative radicand is rounding noise
    return lambda1 + math.sqrt((n - 1) * max(2 * m - lambda1 * lambda1, 0.0))


def _das(x, n, abs_det, variant):
    sign = _check_variant(variant)
    if abs_det <= 0:
        raise NotApplicable("adjacency matrix is singular")
    if x <= 0:
        raise NotApplicable("largest eigenvalue must be positive")
    return x + (n - 1) + math.log(abs_det) + sign * math.log(x)


def das_energy_lower(n: int, lambda1: float, abs_det: float, variant: str = "corrected") -> float:
    return _das(lambda1, n, abs_det, variant)


def das_energy_lower_avgdeg(n: int, m: int, abs_det: float, variant: str = "corrected") -> float:
    if m < 1:
        raise NotApplicable("needs at least one edge")
    return _das(2.0 * m / n, n, abs_det, variant)


def bound_energy_estrada(energy: float, lambda1: float, k: int) -> float:
    return energy / 2 + _exp(lambda1) + (k - 1) - lambda1


def bound_energy_estrada_avgdeg(energy: float, n: int, m: int, k: int) -> float:
    d = 2.0 * m / n
    return energy / 2 + _exp(d) + (k - 1) - d


def bound_combined_det(n: int, abs_det: float, lambda1: float, k_pos: int, variant: str = "corrected") -> float:
    sign = _check_variant(variant)
    if abs_det <= 0:
        raise NotApplicable("adjacency matrix is singular")
    if lambda1 <= 0:
        raise NotApplicable("largest eigenvalue must be positive")
    half = 0.5 * (n - 1 + math.log(abs_det) + sign * math.log(lambda1))
    return half + _exp(lambda1) + (k_pos - 1) - lambda1 / 2


def bound_slee_qe(qe: float, q1: float, n: int) -> float:
    return qe + _exp(q1) + (n - 1) - q1


def bound_slee_qe_avgdeg(qe: float, n: int, m: int) -> float:
    d = 4.0 * m / n
    return qe + _exp(d) + (n - 1) - d


def matrix_estrada_bound(m) -> float:
    """Lower bound ``e^r + tr(M) + (n - 1) - r`` on the Estrada index of a
    nonnegative symmetric matrix, ``r`` being its smallest row sum."""
    a = np.asarray(m, dtype=float)
    if np.any(a < 0):
        raise NotApplicable("matrix has a negative entry")
    r = row_sum_stats(a).r
    return _exp(r) + trace(a) + (a.shape[0] - 1) - r


@dataclass(frozen=True)
class BoundOutcome:
    bound_id: str
    target: str
    direction: str
    target_value: float
    value: Optional[float]
    applicable: bool
    reason: str = ""
    holds: Optional[bool] = None
    equality: Optional[bool] = None
    diagnostic: bool = False

    @property
    def gap(self) -> Optional[float]:
        """Signed slack; negative means the bound is violated."""
        if self.value is None:
            return None
        if self.direction == "lower":
            return self.target_value - self.value
        return self.value - self.target_value


# (bound_id, target invariant, direction, uses Das-type variant)
CATALOG = (
    ("J", "EE", "lower", False),
    ("J_regular", "EE", "lower", False),
    ("JB", "EE", "lower", False),
    ("CP", "EE", "lower", False),
    ("dlp_upper", "EE", "upper", False),
    ("SLEE_bound", "SLEE", "lower", False),
    ("koolen_moulton", "E", "upper", False),
    ("das_energy", "E", "lower", True),
    ("das_energy_avgdeg", "E", "lower", True),
    ("energy_estrada", "EE", "lower", False),
    ("energy_estrada_kpos", "EE", "lower", False),
    ("energy_estrada_avgdeg", "EE", "lower", False),
    ("combined_det", "EE", "lower", True),
    ("slee_qe", "SLEE", "lower", False),
    ("slee_qe_avgdeg", "SLEE", "lower", False),
    ("matrix_A", "EE", "lower", False),
    ("matrix_Q", "SLEE", "lower", False),
)
BOUND_IDS = tuple(c[0] for c in CATALOG)


@dataclass(frozen=True)
class BoundReport:
    graph6: str
    invariants: InvariantSet
    variant: str
    outcomes: tuple[BoundOutcome, ...] = field(default_factory=tuple)

    def outcome(self, bound_id: str) -> BoundOutcome:
        for o in self.outcomes:
            if o.bound_id == bound_id:
                return o
        raise KeyError(bound_id)

    def violations(self) -> list[BoundOutcome]:
        return [o for o in self.outcomes if o.applicable and not o.holds]

    def equalities(self) -> list[BoundOutcome]:
        return [o for o in self.outcomes if o.applicable and o.equality]


def judge(
    bound_id: str,
    target: str,
    direction: str,
    target_value: float,
    compute: Callable[[], float],
    gate: str = "",
    holds_rtol: float = HOLDS_RTOL,
    eq_rtol: float = EQUALITY_RTOL,
    diagnostic: bool = False,
) -> BoundOutcome:
    """Evaluate one bound against its target value.

    ``gate`` is a non-empty reason string when the hypotheses fail; the bound
    is then reported as not applicable without being computed.
    """
    base = dict(bound_id=bound_id, target=target, direction=direction, target_value=target_value, diagnostic=diagnostic)
    if not gate:
        try:
            value = float(compute())
        except NotApplicable as exc:
            gate = str(exc)
    if gate:
        return BoundOutcome(value=None, applicable=False, reason=gate, **base)
    scale = max(1.0, abs(target_value))
    if direction == "lower":
        holds = value <= target_value + holds_rtol * scale
    else:
        holds = value >= target_value - holds_rtol * scale
    equality = holds and abs(target_value - value) <= eq_rtol * scale
    return BoundOutcome(value=value, applicable=True, holds=bool(holds), equality=bool(equality), **base)


def evaluate_all(
    g: Graph,
    variant: str = "corrected",
    holds_rtol: float = HOLDS_RTOL,
    eq_rtol: float = EQUALITY_RTOL,
    invariants: InvariantSet | None = None,
) -> BoundReport:
    _check_variant(variant)
    inv = invariants if invariants is not None else compute_invariants(g)
    n, m = g.n, g.m
    connected = is_connected(g)
    alpha = regularity(g)
    bipartite = is_bipartite(g) is not None
    targets = {"EE": inv.EE, "SLEE": inv.SLEE, "E": inv.energy}

    das_gate = ""
    if not connected:
        das_gate = "disconnected"
    elif inv.singular:
        das_gate = "singular adjacency matrix"

    a = adjacency_matrix(g)
    q = signless_laplacian_matrix(g)
    computations = {
        "J": (lambda: bound_J(n, m), ""),
        "J_regular": (
            lambda: bound_J_regular(n, alpha),
            "" if alpha is not None and connected else ("not regular" if alpha is None else "disconnected"),
        ),
        "JB": (lambda: bound_JB(n, m), "" if bipartite else "not bipartite"),
        "CP": (lambda: bound_CP(n, m), ""),
        "dlp_upper": (lambda: bound_dlp_upper(n, m), ""),
        "SLEE_bound": (lambda: bound_SLEE(n, m), ""),
        "koolen_moulton": (lambda: koolen_moulton_upper(n, m, inv.lambda1), ""),
        "das_energy": (lambda: das_energy_lower(n, inv.lambda1, inv.abs_det_A, variant), das_gate),
        "das_energy_avgdeg": (lambda: das_energy_lower_avgdeg(n, m, inv.abs_det_A, variant), das_gate),
        "energy_estrada": (lambda: bound_energy_estrada(inv.energy, inv.lambda1, inv.k_nonneg), ""),
        "energy_estrada_kpos": (lambda: bound_energy_estrada(inv.energy, inv.lambda1, inv.k_pos), ""),
        "energy_estrada_avgdeg": (lambda: bound_energy_estrada_avgdeg(inv.energy, n, m, inv.k_nonneg), ""),
        "combined_det": (lambda: bound_combined_det(n, inv.abs_det_A, inv.lambda1, inv.k_pos, variant), das_gate),
        # fails on disconnected graphs with edges, e.g. K2 + K1 has QE = 8/3 > 2m
        "slee_qe": (lambda: bound_slee_qe(inv.QE, inv.q1, n), "" if connected or m == 0 else "disconnected"),
        "slee_qe_avgdeg": (lambda: bound_slee_qe_avgdeg(inv.QE, n, m), "" if connected or m == 0 else "disconnected"),
        "matrix_A": (lambda: matrix_estrada_bound(a), ""),
        "matrix_Q": (lambda: matrix_estrada_bound(q), ""),
    }

    outcomes = []
    for bound_id, target, direction, variant_dependent in CATALOG:
        compute, gate = computations[bound_id]
        outcomes.append(
            judge(
                bound_id,
                target,
                direction,
                targets[target],
                compute,
                gate,
                holds_rtol,
                eq_rtol,
                diagnostic=variant_dependent and variant == "as_printed",
            )
        )
    return BoundReport(graph6=encode_graph6(g), invariants=inv, variant=variant, outcomes=tuple(outcomes))


@dataclass(frozen=True)
class MatrixReport:
    n: int
    EE: float
    trace: float
    r: float
    R: float
    rho1: float
    nonnegative: bool
    bracket_holds: Optional[bool]
    bound: BoundOutcome


def evaluate_matrix(m, holds_rtol: float = HOLDS_RTOL, eq_rtol: float = EQUALITY_RTOL) -> MatrixReport:
    """Estrada index of a symmetric matrix, the row-sum bracket on its largest
    eigenvalue, and the row-sum lower bound on its Estrada index."""
    s = jacobi_eigen(m)
    a = np.asarray(m, dtype=float)
    stats = row_sum_stats(a)
    ee = estrada_index(s)
    nonneg = bool(np.all(a >= 0))
    bracket = None
    if nonneg:
        tol = max(s.tol, holds_rtol * max(1.0, abs(s.largest)))
        bracket = stats.r - tol <= s.largest <= stats.R + tol
    bound = judge("matrix_estrada", "EE", "lower", ee, lambda: matrix_estrada_bound(a), "", holds_rtol, eq_rtol)
    return MatrixReport(
        n=a.shape[0],
        EE=ee,
        trace=trace(a),
        r=stats.r,
        R=stats.R,
        rho1=s.largest,
        nonnegative=nonneg,
        bracket_holds=bracket,
        bound=bound,
    )

