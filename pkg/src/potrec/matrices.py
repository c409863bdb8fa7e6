"""Tridiagonal coupling matrices and displacement-structure diagnostics.

The moment tables satisfy Sylvester-type identities whose coefficient
matrices are tridiagonal with zero main diagonal.  This module builds the
truncated matrices, measures how well a computed table satisfies the
identities, and estimates the numerical rank of the combined right-hand
side, which is low by construction.
"""

import math
from dataclasses import dataclass

import numpy as np

from .complexbranch import CDW, cdw
from .errors import AccuracyError
from .square import DWTriTable, _beta_factors, rhs_F1, rhs_F2

_NAMES = ("A", "B", "C")

_JACOBI_SWEEPS = 60
_JACOBI_TOL = 1e-15


@dataclass(frozen=True)
class TriDiag:
    """Tridiagonal matrix stored by its bands; the main diagonal is zero.

    sub[i] holds entry (i+1, i) and sup[i] holds entry (i, i+1).
    """

    name: str
    size: int
    sub: np.ndarray
    sup: np.ndarray

    def dense(self) -> np.ndarray:
        m = np.zeros((self.size, self.size))
        idx = np.arange(self.size - 1)
        m[idx + 1, idx] = self.sub
        m[idx, idx + 1] = self.sup
        return m


def build_matrix(name: str, p: int) -> TriDiag:
    """Truncate one of the coupling matrices to size (p+1) x (p+1)."""
    if name not in _NAMES:
        raise ValueError(f"unknown matrix name {name!r}, expected one of {_NAMES}")
    if p < 0:
        raise ValueError("degree must be nonnegative")
    k = np.arange(1, p + 1, dtype=float)
    j = np.arange(0, p, dtype=float)
    if name == "B":
        sub = k / (2 * k + 1)
        sup = (j + 1) / (2 * j + 1)
    elif name == "A":
        sub = (k - 1) / (2 * k + 1)
        sup = (j + 2) / (2 * j + 1)
    else:
        sub = -1.0 / (2 * k + 1)
        sup = 1.0 / (2 * j + 1)
    return TriDiag(name=name, size=p + 1, sub=sub, sup=sup)


def _as_table_scalar(table, z):
    if isinstance(table, DWTriTable):
        return z if isinstance(z, CDW) else cdw(complex(z))
    return complex(z)


def _check_pair_degrees(table, f1, f2):
    if f1.degree != table.degree or f2.degree != table.degree:
        raise ValueError("table and right-hand sides must share one degree")


def sylvester_residual_log(table, f1, f2, z) -> float:
    """Worst absolute residual of the three coupled identities.

    Checks, over every interior index (k + j <= p - 1, where the whole
    five-point stencil stays inside the triangle):

        z L = A L + i L B^T + F1
        z L = B L + i L A^T + F2
        C L - i L C^T = F2 - F1

    Double-word tables are re-evaluated in double-word arithmetic, so the
    returned residual reflects the table's own precision.
    """
    p = table.degree
    if p < 2:
        raise ValueError("residual needs degree at least 2")
    _check_pair_degrees(table, f1, f2)
    zz = _as_table_scalar(table, z)
    worst = 0.0
    for k in range(p):
        for j in range(p - k):
            center = table[k][j]
            up = table[k + 1][j]
            right = table[k][j + 1]
            zl = zz * center

            al = up * (k + 2) / (2 * k + 1)
            bl = up * (k + 1) / (2 * k + 1)
            clm = up / (2 * k + 1)
            if k >= 1:
                down = table[k - 1][j]
                if k >= 2:
                    al = al + down * (k - 1) / (2 * k + 1)
                bl = bl + down * k / (2 * k + 1)
                clm = clm - down / (2 * k + 1)

            lb = right * (j + 1) / (2 * j + 1)
            la = right * (j + 2) / (2 * j + 1)
            lc = right / (2 * j + 1)
            if j >= 1:
                left = table[k][j - 1]
                lb = lb + left * j / (2 * j + 1)
                if j >= 2:
                    la = la + left * (j - 1) / (2 * j + 1)
                lc = lc - left / (2 * j + 1)

            r1 = zl - al - lb * 1j - f1[k][j]
            r2 = zl - bl - la * 1j - f2[k][j]
            r3 = clm - lc * 1j - (f2[k][j] - f1[k][j])
            worst = max(
                worst, abs(complex(r1)), abs(complex(r2)), abs(complex(r3))
            )
    return worst


def sylvester_residual_stieltjes(table, z) -> float:
    """Worst absolute residual of z S = B S + i S B^T + 4 e0 e0^T."""
    p = table.degree
    if p < 2:
        raise ValueError("residual needs degree at least 2")
    zz = _as_table_scalar(table, z)
    worst = 0.0
    for k in range(p):
        for j in range(p - k):
            bs = table[k + 1][j] * (k + 1) / (2 * k + 1)
            if k >= 1:
                bs = bs + table[k - 1][j] * k / (2 * k + 1)
            sb = table[k][j + 1] * (j + 1) / (2 * j + 1)
            if j >= 1:
                sb = sb + table[k][j - 1] * j / (2 * j + 1)
            r = zz * table[k][j] - bs - sb * 1j
            if k == 0 and j == 0:
                r = r - 4
            worst = max(worst, abs(complex(r)))
    return worst


def rhs_difference_dense(z, p: int) -> np.ndarray:
    """Dense combined right-hand side on the full (p+1) x (p+1) square.

    The low-rank structure (first column, first row, and a separable
    correction block) lives on the full index square; restricting to the
    triangle k + j <= p would break it.  Beyond the first row and column
    the entries reduce to the separable correction, which fills the
    k + j > p corner exactly.
    """
    w = complex(z)
    m = rhs_F2(w, p).data - rhs_F1(w, p).data
    bu, bv = _beta_factors(w, p, p)
    for k in range(1, p + 1):
        for j in range(p + 1 - k, p + 1):
            m[k, j] = complex(0.0, bu[k] * bv[j] / 3.0)
    return m


def jacobi_singular_values(m: np.ndarray) -> np.ndarray:
    """Singular values by one-sided Jacobi column orthogonalization."""
    a = np.array(m, dtype=complex, order="F", copy=True)
    n = a.shape[1]
    for _ in range(_JACOBI_SWEEPS):
        rotated = False
        for i in range(n - 1):
            for j in range(i + 1, n):
                app = float(np.real(np.vdot(a[:, i], a[:, i])))
                aqq = float(np.real(np.vdot(a[:, j], a[:, j])))
                if app == 0.0 or aqq == 0.0:
                    continue
                apq = complex(np.vdot(a[:, i], a[:, j]))
                if abs(apq) <= _JACOBI_TOL * math.sqrt(app * aqq):
                    continue
                rotated = True
                phase = apq / abs(apq)
                tau = (aqq - app) / (2 * abs(apq))
                t = -math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                cs = 1.0 / math.sqrt(1.0 + t * t)
                sn = t * cs
                ui = cs * a[:, i] + (sn * np.conj(phase)) * a[:, j]
                vj = (-sn * phase) * a[:, i] + cs * a[:, j]
                a[:, i] = ui
                a[:, j] = vj
        if not rotated:
            break
    else:
        raise AccuracyError("column orthogonalization did not converge")
    sv = np.sqrt(np.sum(np.abs(a) ** 2, axis=0))
    sv.sort()
    return sv[::-1]


def numerical_rank_F(z, p: int, tol: float) -> int:
    """Count singular values of the combined right-hand side above tol.

    The threshold is relative: sigma_i > tol * sigma_1.
    """
    if p < 4:
        raise ValueError("rank estimate needs degree at least 4")
    sv = jacobi_singular_values(rhs_difference_dense(z, p))
    if sv[0] == 0.0:
        return 0
    return int(np.count_nonzero(sv > tol * sv[0]))
