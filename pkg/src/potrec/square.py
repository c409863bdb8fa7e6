"""Square-domain moment tables and potential assembly.

The log and Cauchy kernels over the square, expanded in products of
Legendre polynomials, satisfy coupled three-term recurrences in the two
degree indices. This module seeds the first row and column of each
triangular table from the 1D sequences at shifted arguments and then
fills the interior by alternating column/row sweeps, solving each
stencil for its outermost entry. One code path serves native complex
and double-word entries.
"""

import math
from dataclasses import dataclass

import numpy as np

from .complexbranch import (
    CDW,
    BetaRegion,
    cdw,
    classify_beta_region,
    im_of,
    re_of,
    rotate_minus_i,
    shift_im,
    shift_re,
)
from .doubledouble import DW, DW_PI, dw
from .errors import CapacityError, SingularPointError
from .interval import lambda_coeff, log_seq, modlog_seq, mu_coeff
from .orthopoly import ultra_seq

MAX_TOTAL_DEGREE = 120
FAR_FIELD_BOUND = 3.0
FAR_FIELD_NOTE = "far-field point: forward recurrences lose accuracy away from the square"

_CORNERS = ((1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0))


class TriTable:
    """Triangular table t[k][j], k + j <= degree, dense complex backing."""

    __slots__ = ("kind", "degree", "data")

    def __init__(self, kind, degree, data):
        self.kind = kind
        self.degree = degree
        self.data = data

    def __len__(self):
        return self.degree + 1

    def __getitem__(self, k):
        if not 0 <= k <= self.degree:
            raise IndexError("row %d outside table of degree %d" % (k, self.degree))
        return self.data[k, : self.degree + 1 - k]

    @property
    def entry_count(self):
        return (self.degree + 1) * (self.degree + 2) // 2


class _DWRow:
    __slots__ = ("_t", "_k")

    def __init__(self, t, k):
        self._t = t
        self._k = k

    def __len__(self):
        return self._t.degree + 1 - self._k

    def __getitem__(self, j):
        if not 0 <= j < len(self):
            raise IndexError("column %d outside row of length %d" % (j, len(self)))
        t, k = self._t, self._k
        return CDW(
            DW(t.re_hi[k, j], t.re_lo[k, j]),
            DW(t.im_hi[k, j], t.im_lo[k, j]),
        )


class DWTriTable:
    """Triangular table with double-word entries, four-array backing."""

    __slots__ = ("kind", "degree", "re_hi", "re_lo", "im_hi", "im_lo")

    def __init__(self, kind, degree, re_hi, re_lo, im_hi, im_lo):
        self.kind = kind
        self.degree = degree
        self.re_hi = re_hi
        self.re_lo = re_lo
        self.im_hi = im_hi
        self.im_lo = im_lo

    def __len__(self):
        return self.degree + 1

    def __getitem__(self, k):
        if not 0 <= k <= self.degree:
            raise IndexError("row %d outside table of degree %d" % (k, self.degree))
        return _DWRow(self, k)

    @property
    def entry_count(self):
        return (self.degree + 1) * (self.degree + 2) // 2

    @property
    def approx(self):
        """Dense complex array rounded to native precision."""
        return (self.re_hi + self.re_lo) + 1j * (self.im_hi + self.im_lo)


@dataclass
class CoeffMatrix:
    """Real expansion coefficients f_kj, k <= m, j <= n."""

    m: int
    n: int
    f: np.ndarray

    @classmethod
    def from_array(cls, f):
        f = np.asarray(f, dtype=float)
        if f.ndim != 2 or f.size == 0:
            raise ValueError("coefficient array must be 2D and nonempty")
        if not np.all(np.isfinite(f)):
            raise ValueError("coefficient entries must be finite")
        return cls(m=f.shape[0] - 1, n=f.shape[1] - 1, f=f)


@dataclass
class PotentialResult:
    potential: float
    gradient: tuple
    advisory: str = None


# ------------------------------------------------------------ flavor helpers


def _is_dw(z):
    return isinstance(z, CDW)


def _zero(z):
    return CDW(dw(0.0), dw(0.0)) if _is_dw(z) else 0j


def _real_ratio(z, num, den):
    if _is_dw(z):
        return CDW(dw(float(num)) / den, dw(0.0))
    return complex(num / den, 0.0)


def _imag_ratio(z, num, den):
    if _is_dw(z):
        return CDW(dw(0.0), dw(float(num)) / den)
    return complex(0.0, num / den)


def _pi(z):
    return DW_PI if _is_dw(z) else math.pi


def _check_corner(z):
    x, y = float(re_of(z)), float(im_of(z))
    if (x, y) in _CORNERS:
        raise SingularPointError(
            "tables are singular at the square corner %g%+gi" % (x, y)
        )


def _validate_degree(p):
    if p < 0:
        raise ValueError("degree must be nonnegative")
    if p > MAX_TOTAL_DEGREE:
        raise CapacityError(
            "degree %d exceeds the supported maximum %d" % (p, MAX_TOTAL_DEGREE)
        )


# ------------------------------------------------------------ table packing


def _pack(kind, p, grid, doubleword):
    if doubleword:
        re_hi = np.zeros((p + 1, p + 1))
        re_lo = np.zeros((p + 1, p + 1))
        im_hi = np.zeros((p + 1, p + 1))
        im_lo = np.zeros((p + 1, p + 1))
        for k in range(p + 1):
            for j in range(p + 1 - k):
                v = grid[k][j]
                re_hi[k, j] = v.re.hi
                re_lo[k, j] = v.re.lo
                im_hi[k, j] = v.im.hi
                im_lo[k, j] = v.im.lo
        return DWTriTable(kind, p, re_hi, re_lo, im_hi, im_lo)
    data = np.zeros((p + 1, p + 1), dtype=complex)
    for k in range(p + 1):
        for j in range(p + 1 - k):
            data[k, j] = grid[k][j]
    return TriTable(kind, p, data)


def _new_grid(z, p):
    zero = _zero(z)
    return [[zero] * (p + 1) for _ in range(p + 1)]


# --------------------------------------------------------------------- beta


def _beta_factors(z, kmax, jmax):
    """Separable factors bu, bv with beta_{kj} = i * bu[k] * bv[j] / 3."""
    region = classify_beta_region(z)
    x, y = re_of(z), im_of(z)
    zero_r = dw(0.0) if _is_dw(z) else 0.0
    if region is BetaRegion.ELSEWHERE:
        return [zero_r] * (kmax + 1), [zero_r] * (jmax + 1)
    if region is BetaRegion.IN_SQUARE:
        c32 = ultra_seq(-1.5, x, kmax + 2)
        bu = []
        for k in range(kmax + 1):
            b = c32[k + 2]
            if k == 0:
                b = b - 3 * x
            elif k == 1:
                b = b + 1
            bu.append(b)
    else:
        bu = [zero_r] * (kmax + 1)
        bu[0] = -6 * x
        if kmax >= 1:
            bu[1] = bu[1] + 2
    cmh = ultra_seq(-0.5, y, jmax + 1)
    two_pi = 2 * _pi(z)
    bv = [two_pi * cmh[j + 1] for j in range(jmax + 1)]
    return bu, bv


def beta(k, j, z):
    """Cut-crossing correction entering the Cauchy-kernel inhomogeneity.

    Zero outside the square and its left strip; inside, a product of
    ultraspherical polynomials in the two coordinates.
    """
    if k < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    bu, bv = _beta_factors(z, k, j)
    prod = bu[k] * bv[j]
    if _is_dw(z):
        return CDW(dw(0.0), prod / 3)
    return complex(0.0, prod / 3.0)


# ----------------------------------------------------------- inhomogeneities


def _f1_row(z, p):
    """First-row values of the first inhomogeneity, j = 0..p."""
    wm = shift_re(z, -1.0)
    wp = shift_re(z, 1.0)
    mm = modlog_seq(wm, p + 1)
    mp_ = modlog_seq(wp, p + 1)
    row = []
    for j in range(p + 1):
        low = mm[j - 1] + mp_[j - 1] if j >= 1 else _zero(z)
        v = (mm[j + 1] + mp_[j + 1] - low) * 1j / (2 * j + 1)
        row.append(v + mu_coeff(j, wm) + mu_coeff(j, wp))
    return row


def _f2_col(z, p, bu, bv):
    """First-column values of the second inhomogeneity, k = 0..p."""
    vm = shift_im(z, -1.0)
    vp = shift_im(z, 1.0)
    lm = log_seq(vm, p + 1)
    lp = log_seq(vp, p + 1)
    col = []
    for k in range(p + 1):
        low = lm[k - 1] + lp[k - 1] if k >= 1 else _zero(z)
        v = (lm[k + 1] + lp[k + 1] - low) / (2 * k + 1)
        v = v + lambda_coeff(k, vm) + lambda_coeff(k, vp)
        col.append(v + _beta_entry(z, bu, bv, k, 0))
    return col


def _beta_entry(z, bu, bv, k, j):
    prod = bu[k] * bv[j]
    if _is_dw(z):
        return CDW(dw(0.0), prod / 3)
    return complex(0.0, prod / 3.0)


def rhs_F1(z, p):
    """Inhomogeneity driving the column recurrences of the log table."""
    _validate_degree(p)
    grid = _new_grid(z, p)
    row = _f1_row(z, p)
    for j in range(p + 1):
        grid[0][j] = row[j]
    if p >= 1:
        grid[1][0] = _real_ratio(z, -4, 3)
    return _pack("F1", p, grid, _is_dw(z))


def rhs_F2(z, p):
    """Inhomogeneity driving the row recurrences of the log table."""
    _validate_degree(p)
    bu, bv = _beta_factors(z, p, p)
    grid = _new_grid(z, p)
    col = _f2_col(z, p, bu, bv)
    for k in range(p + 1):
        grid[k][0] = col[k]
    for k in range(p + 1):
        for j in range(1, p + 1 - k):
            grid[k][j] = _beta_entry(z, bu, bv, k, j)
    if p >= 1:
        grid[0][1] = grid[0][1] + _imag_ratio(z, -4, 3)
    return _pack("F2", p, grid, _is_dw(z))


def log_00(z):
    """Lowest log moment, assembled from rotated-log values at z -/+ 1."""
    mm = modlog_seq(shift_re(z, -1.0), 1)
    mp_ = modlog_seq(shift_re(z, 1.0), 1)
    one = 1.0
    return (
        (one - z) * mm[0]
        + mm[1] * 1j
        + (one + z) * mp_[0]
        - mp_[1] * 1j
        - 4.0
    )


# ------------------------------------------------------- first rows/columns


def stieltjes_first_rowcol(z, p):
    """Seed column S_{k0} and row S_{0j} from rotated-log sequences."""
    _validate_degree(p)
    rot = rotate_minus_i(z)
    ma = modlog_seq(shift_re(rot, -1.0), p)  # at -1 - iz
    mb = modlog_seq(shift_re(rot, 1.0), p)   # at +1 - iz
    mp_ = modlog_seq(shift_re(z, 1.0), p)    # at z + 1
    mm = modlog_seq(shift_re(z, -1.0), p)    # at z - 1
    col = []
    for k in range(p + 1):
        v = (ma[k] - mb[k]) * 1j
        col.append(v if k % 2 == 0 else -v)
    row = [mp_[j] - mm[j] for j in range(p + 1)]
    return col, row


def _log_f_entries(z, p):
    """Sparse view of F2 - F1 plus the pieces the seeds consume."""
    bu, bv = _beta_factors(z, p, p)
    f1row = _f1_row(z, p)
    f2col = _f2_col(z, p, bu, bv)
    f1_10 = _real_ratio(z, -4, 3)
    f2_01_extra = _imag_ratio(z, -4, 3)

    def f1(k, j):
        if k == 0:
            return f1row[j]
        if k == 1 and j == 0:
            return f1_10
        return _zero(z)

    def f2(k, j):
        if j == 0:
            return f2col[k]
        b = _beta_entry(z, bu, bv, k, j)
        if k == 0 and j == 1:
            return b + f2_01_extra
        return b

    def f(k, j):
        return f2(k, j) - f1(k, j)

    return f1, f2, f


def log_first_rowcol(z, p):
    """Seed column L_{k0} and row L_{0j} by forward substitution."""
    _validate_degree(p)
    f1, f2, _ = _log_f_entries(z, p)
    col = [log_00(z)]
    for k in range(p):
        prev = col[k - 1] if k >= 1 else _zero(z)
        step = (2 * k + 1) * (z * col[k] - 2 * f1(k, 0) + f2(k, 0)) - (k - 2) * prev
        col.append(step / (k + 3))
    row = [col[0]]
    for j in range(p):
        prev = row[j - 1] if j >= 1 else _zero(z)
        step = (2 * j + 1) * (z * row[j] - 2 * f2(0, j) + f1(0, j)) - (
            (j - 2) * prev
        ) * 1j
        row.append(step * (-1j) / (j + 3))
    return col, row


# ------------------------------------------------------------ table builders


_KERNEL_MODULE = None


def _kernels_or_none():
    global _KERNEL_MODULE
    if _KERNEL_MODULE is None:
        try:
            from . import _kernels as km

            _KERNEL_MODULE = km if km.KERNELS_AVAILABLE else False
        except Exception:
            _KERNEL_MODULE = False
    return _KERNEL_MODULE if _KERNEL_MODULE else None


def _resolve_impl(impl):
    if impl not in ("auto", "generic", "kernel"):
        raise ValueError("impl must be auto, generic or kernel")
    if impl == "generic":
        return None
    km = _kernels_or_none()
    if impl == "kernel" and km is None:
        raise RuntimeError("compiled kernels are not available")
    return km


def _validate_precision(precision):
    if precision not in ("double", "doubleword"):
        raise ValueError("precision must be double or doubleword")


def log_table(z, p, precision="double", impl="auto"):
    """Triangular table of log-kernel moments up to total degree p.

    Seeds the first row and column, then alternately fills one column
    and one row per sweep, each time solving the three-term cross
    stencil for its outermost entry.
    """
    _validate_degree(p)
    _validate_precision(precision)
    _check_corner(z)
    km = _resolve_impl(impl)
    if km is not None:
        return _kernel_log_table(km, z, p, precision)
    if precision == "doubleword":
        return _pack("LOG", p, _build_log_grid(cdw(z), p), True)
    return _pack("LOG", p, _build_log_grid(complex(z), p), False)


def stieltjes_table(z, p, precision="double", impl="auto"):
    """Triangular table of Cauchy-kernel moments up to total degree p."""
    _validate_degree(p)
    _validate_precision(precision)
    _check_corner(z)
    km = _resolve_impl(impl)
    if km is not None:
        return _kernel_stieltjes_table(km, z, p, precision)
    if precision == "doubleword":
        return _pack("STIELTJES", p, _build_stieltjes_grid(cdw(z), p), True)
    return _pack("STIELTJES", p, _build_stieltjes_grid(complex(z), p), False)


def _build_log_grid(z, p):
    f1, f2, f = _log_f_entries(z, p)
    grid = _new_grid(z, p)
    col, row = log_first_rowcol(z, p)
    for k in range(p + 1):
        grid[k][0] = col[k]
    for j in range(p + 1):
        grid[0][j] = row[j]
    zero = _zero(z)
    for l in range(p // 2):
        # column l+1, rows l+1 .. p-l-1
        for r in range(l + 1, p - l):
            cl = (grid[r + 1][l] - grid[r - 1][l]) / (2 * r + 1)
            prev = grid[r][l - 1] if l >= 1 else zero
            grid[r][l + 1] = prev + (f(r, l) - cl) * complex(0.0, 2 * l + 1)
        # row l+1, columns l+2 .. p-l-1
        for c in range(l + 2, p - l):
            prev = grid[l - 1][c] if l >= 1 else zero
            cross = (grid[l][c + 1] - grid[l][c - 1]) * complex(
                0.0, 2 * l + 1
            ) / (2 * c + 1)
            grid[l + 1][c] = prev + (2 * l + 1) * f(l, c) + cross
    return grid


def _build_stieltjes_grid(z, p):
    grid = _new_grid(z, p)
    col, row = stieltjes_first_rowcol(z, p)
    for k in range(p + 1):
        grid[k][0] = col[k]
    for j in range(p + 1):
        grid[0][j] = row[j]
    for l in range(p // 2):
        # column l+1, rows l+1 .. p-l-1
        for r in range(l + 1, p - l):
            bs = (r * grid[r - 1][l] + (r + 1) * grid[r + 1][l]) / (2 * r + 1)
            step = (z * grid[r][l] - bs) * complex(0.0, -(2 * l + 1))
            if l >= 1:
                step = step - l * grid[r][l - 1]
            grid[r][l + 1] = step / (l + 1)
        # row l+1, columns l+2 .. p-l-1
        for c in range(l + 2, p - l):
            cross = (c * grid[l][c - 1] + (c + 1) * grid[l][c + 1]) * 1j / (
                2 * c + 1
            )
            step = (2 * l + 1) * (z * grid[l][c] - cross)
            if l >= 1:
                step = step - l * grid[l - 1][c]
            grid[l + 1][c] = step / (l + 1)
    return grid


def _kernel_log_table(km, z, p, precision):
    if precision == "doubleword":
        packed = km.log_table_dw(z, p)
        return DWTriTable("LOG", p, *packed)
    return TriTable("LOG", p, km.log_table_native(z, p))


def _kernel_stieltjes_table(km, z, p, precision):
    if precision == "doubleword":
        packed = km.stieltjes_table_dw(z, p)
        return DWTriTable("STIELTJES", p, *packed)
    return TriTable("STIELTJES", p, km.stieltjes_table_native(z, p))


# -------------------------------------------------------- potential assembly


def potential_eval(coeffs, pt, precision="double", impl="auto"):
    """Logarithmic potential and gradient of a Legendre-product density.

    The density is sum f_kj P_k(x) P_j(y) over the square; the potential
    is the real part of the contracted log table and the gradient pairs
    the real and negated imaginary parts of the Cauchy table.
    """
    _validate_precision(precision)
    if not isinstance(coeffs, CoeffMatrix):
        coeffs = CoeffMatrix.from_array(coeffs)
    p = coeffs.m + coeffs.n
    if p > MAX_TOTAL_DEGREE:
        raise CapacityError(
            "total degree %d exceeds the supported maximum %d"
            % (p, MAX_TOTAL_DEGREE)
        )
    _check_corner(pt)
    ltab = log_table(pt, p, precision, impl)
    stab = stieltjes_table(pt, p, precision, impl)
    if precision == "doubleword":
        lre = ltab.re_hi + ltab.re_lo
        sre = stab.re_hi + stab.re_lo
        sim = stab.im_hi + stab.im_lo
    else:
        lre = ltab.data.real
        sre = stab.data.real
        sim = stab.data.imag
    f = coeffs.f
    mm, nn = f.shape
    pot = float(np.sum(f * lre[:mm, :nn]))
    gx = float(np.sum(f * sre[:mm, :nn]))
    gy = -float(np.sum(f * sim[:mm, :nn]))
    advisory = None
    x, y = float(re_of(pt)), float(im_of(pt))
    if max(abs(x), abs(y)) > FAR_FIELD_BOUND:
        advisory = FAR_FIELD_NOTE
    return PotentialResult(potential=pot, gradient=(gx, gy), advisory=advisory)
