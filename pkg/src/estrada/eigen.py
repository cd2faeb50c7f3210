"""Dense symmetric eigensolver (cyclic Jacobi) and small matrix functionals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import AsymmetricMatrix, NoConvergence

CONVERGENCE_RTOL = 1e-12
MAX_SWEEPS = 100
SINGULAR_RTOL = 1e-9


def sym_matrix(values) -> np.ndarray:
    """Validate ``values`` as a finite, exactly symmetric square matrix.

    Returns a float64 copy. Raises :class:`AsymmetricMatrix` naming the first
    offending entry.
    """
    a = np.array(values, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise AsymmetricMatrix(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        r, c = np.argwhere(~np.isfinite(a))[0]
        raise AsymmetricMatrix(f"non-finite entry at ({r}, {c})", int(r), int(c))
    bad = np.argwhere(a != a.T)
    if len(bad):
        r, c = bad[0]
        raise AsymmetricMatrix(
            f"matrix is not symmetric: entry ({r}, {c}) = {float(a[r, c])!r} but ({c}, {r}) = {float(a[c, r])!r}",
            int(r),
            int(c),
        )
    return a


def parse_matrix_text(text: str) -> np.ndarray:
    """Whitespace-separated rows, one per line; blank lines and ``#`` comments ignored."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([float(tok) for tok in line.split()])
        except ValueError as exc:
            raise AsymmetricMatrix(f"line {lineno}: {exc}", len(rows)) from None
    if not rows:
        raise AsymmetricMatrix("matrix file contains no rows")
    for r, row in enumerate(rows):
        if len(row) != len(rows[0]):
            raise AsymmetricMatrix(
                f"ragged matrix: row {r} has {len(row)} entries, row 0 has {len(rows[0])}", r
            )
    if len(rows) != len(rows[0]):
        raise AsymmetricMatrix(f"matrix is {len(rows)}x{len(rows[0])}, not square")
    return sym_matrix(rows)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in non-increasing order, with optional eigenvectors as columns.

    ``tol`` is the off-diagonal threshold the solver stopped at and
    ``residual`` the off-diagonal Frobenius norm actually reached.
    """

    values: np.ndarray
    vectors: Optional[np.ndarray] = None
    tol: float = 0.0
    residual: float = 0.0
    sweeps: int = 0

    def __len__(self):
        return len(self.values)

    @property
    def largest(self) -> float:
        return float(self.values[0])


def _off_norm(a):
    # summing squares of the off-diagonal entries directly; subtracting the
    # diagonal from the full norm cancels catastrophically near convergence
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def jacobi_eigen(m, want_vectors: bool = False) -> Spectrum:
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Rows are swept in the fixed order ``(0,1), (0,2), ..., (n-2,n-1)``. The
    iteration stops once the off-diagonal Frobenius norm is at most
    ``1e-12 * max(1, ||m||_F)``; after 100 sweeps without reaching it,
    :class:`NoConvergence` is raised.
    """
    a = sym_matrix(m)
    n = a.shape[0]
    v = np.eye(n) if want_vectors else None
    tol = CONVERGENCE_RTOL * max(1.0, float(np.linalg.norm(a)))

    off = _off_norm(a)
    sweeps = 0
    while off > tol:
        if sweeps == MAX_SWEEPS:
            raise NoConvergence(off, sweeps)
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                if v is not None:
                    vp = v[:, p].copy()
                    vq = v[:, q]
                    v[:, p] = c * vp - s * vq
                    v[:, q] = s * vp + c * vq
        off = _off_norm(a)

    vals = np.diag(a).copy()
    # stable descending order keeps ties in index order, so results are reproducible
    order = np.argsort(-vals, kind="stable")
    return Spectrum(
        values=vals[order],
        vectors=None if v is None else v[:, order],
        tol=tol,
        residual=off,
        sweeps=sweeps,
    )


@dataclass(frozen=True)
class RowSumStats:
    sums: np.ndarray
    r: float
    R: float


def row_sum_stats(m) -> RowSumStats:
    sums = np.asarray(m, dtype=float).sum(axis=1)
    return RowSumStats(sums=sums, r=float(sums.min()), R=float(sums.max()))


def trace(m) -> float:
    return float(np.trace(np.asarray(m, dtype=float)))


def zero_threshold(s: Spectrum) -> float:
    """Magnitude below which an eigenvalue is classified as zero."""
    return SINGULAR_RTOL * max(1.0, abs(float(s.values[0])))


@dataclass(frozen=True)
class Determinant:
    det: float
    abs_det: float
    singular: bool


def determinant_from_spectrum(s: Spectrum) -> Determinant:
    det = float(np.prod(s.values))
    singular = bool(np.any(np.abs(s.values) <= zero_threshold(s)))
    return Determinant(det=det, abs_det=abs(det), singular=singular)
