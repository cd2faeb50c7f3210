"""Spectral invariants of a graph: moments, Estrada indices and energies."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .eigen import Spectrum, determinant_from_spectrum, jacobi_eigen, zero_threshold
from .errors import NotPSD, OverflowGuard, UnsupportedMoment
from .graph import Graph, adjacency_matrix, signless_laplacian_matrix, triangle_count

MAX_MOMENT = 12
EXP_LIMIT = 700.0
PSD_SLACK = 1e-6


def spectral_moment(s: Spectrum, k: int) -> float:
    if k < 0 or k > MAX_MOMENT:
        raise UnsupportedMoment(f"moment order must be in [0, {MAX_MOMENT}], got {k}")
    if k == 0:
        return float(len(s.values))
    return float(np.sum(s.values**k))


def _exp_sum(values) -> float:
    top = float(np.max(values))
    if top > EXP_LIMIT:
        raise OverflowGuard(f"largest eigenvalue {top:.6g} exceeds {EXP_LIMIT}; exp() would overflow")
    total = 0.0
    for x in sorted(values):  # smallest terms first
        total += math.exp(x)
    return total


def estrada_index(s: Spectrum) -> float:
    """``sum(exp(lambda_i))`` accumulated from the smallest eigenvalue up."""
    return _exp_sum(s.values)


def graph_energy(s: Spectrum) -> float:
    return float(np.sum(np.abs(s.values)))


def half_energy_identity_check(s: Spectrum, tol: float = 1e-9) -> bool:
    """Positive eigenvalues sum to ``E/2`` and negative ones to ``-E/2``."""
    vals = s.values
    half = graph_energy(s) / 2
    pos = float(np.sum(vals[vals > 0]))
    neg = float(np.sum(vals[vals < 0]))
    return abs(pos - half) <= tol and abs(neg + half) <= tol


def slee(qs: Spectrum) -> float:
    """Estrada index of the signless Laplacian spectrum."""
    low = float(np.min(qs.values))
    if low < -PSD_SLACK:
        raise NotPSD(f"signless Laplacian eigenvalue {low:.3e} is materially negative")
    return _exp_sum(qs.values)


def signless_laplacian_energy(qs: Spectrum, n: int, m: int) -> float:
    return float(np.sum(np.abs(qs.values - 2.0 * m / n)))


def count_eigen_classes(s: Spectrum, tau: float | None = None) -> tuple[int, int]:
    """``(k_nonneg, k_pos)`` with eigenvalues inside ``[-tau, tau]`` treated as zero."""
    if tau is None:
        tau = zero_threshold(s)
    k_nonneg = int(np.sum(s.values >= -tau))
    k_pos = int(np.sum(s.values > tau))
    return k_nonneg, k_pos


@dataclass(frozen=True)
class InvariantSet:
    n: int
    m: int
    t: int
    lambda1: float
    q1: float
    EE: float
    energy: float
    SLEE: float
    QE: float
    det_A: float
    abs_det_A: float
    singular: bool
    k_nonneg: int
    k_pos: int
    moments: tuple[float, float, float, float]

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("moments")
        for k, mk in enumerate(self.moments):
            d[f"M{k}"] = mk
        return d


def compute_invariants(g: Graph, spectrum: Spectrum | None = None, q_spectrum: Spectrum | None = None) -> InvariantSet:
    """All scalar invariants from one adjacency and one signless Laplacian eigensolve.

    Precomputed spectra may be passed to avoid solving twice.
    """
    s = spectrum if spectrum is not None else jacobi_eigen(adjacency_matrix(g))
    qs = q_spectrum if q_spectrum is not None else jacobi_eigen(signless_laplacian_matrix(g))
    det = determinant_from_spectrum(s)
    k_nonneg, k_pos = count_eigen_classes(s)
    return InvariantSet(
        n=g.n,
        m=g.m,
        t=triangle_count(g),
        lambda1=s.largest,
        q1=qs.largest,
        EE=estrada_index(s),
        energy=graph_energy(s),
        SLEE=slee(qs),
        QE=signless_laplacian_energy(qs, g.n, g.m),
        det_A=det.det,
        abs_det_A=det.abs_det,
        singular=det.singular,
        k_nonneg=k_nonneg,
        k_pos=k_pos,
        moments=tuple(spectral_moment(s, k) for k in range(4)),
    )
