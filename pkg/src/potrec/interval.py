"""Sequences of kernel integrals against Legendre densities on [-1, 1].

Four families, all produced by forward three-term recurrences seeded with
closed forms: the Cauchy-kernel sequence, its order -1/2 ultraspherical
variant, the log-kernel sequence, and the rotated log-kernel sequence whose
branch corrections make the square assembly continuous across the cuts.

Everything here is generic over plain complex and the double-word complex
type. Recurrence steps multiply and divide by integers only (fractional
inhomogeneities are carried tripled), so the extended-precision path loses
nothing to pre-rounded coefficients.
"""

import math

from .complexbranch import (
    CDW,
    MRegion,
    classify_m_region,
    clog,
    clog_minus,
    im_of,
    in_mu_strip,
    re_of,
    rotate_minus_i,
    shift_im,
    shift_re,
)
from .doubledouble import DW_PI, dw
from .errors import SingularPointError
from .orthopoly import ultra_seq

_REGION_CONSTANT = {
    MRegion.RIGHT_OR_TOP: 1,
    MRegion.LEFT_BOTTOM: -3,
    MRegion.LEFT_STRIP: -1,
}


def _zero(z):
    return CDW(0.0, 0.0) if isinstance(z, CDW) else 0j


def _is_at(z, re_val, im_val):
    return re_of(z) == re_val and im_of(z) == im_val


def _wlogw(w, minus=False):
    """w log w with the limit value 0 at w = 0."""
    if float(re_of(w)) == 0.0 and float(im_of(w)) == 0.0:
        return _zero(w)
    return w * (clog_minus(w) if minus else clog(w))


def _imag_scalar(z, value_native, value_dw):
    # purely imaginary constant in z's flavor
    if isinstance(z, CDW):
        return CDW(dw(0.0), value_dw)
    return complex(0.0, value_native)


def _i_pi_const(z, c):
    return _imag_scalar(z, math.pi * c, DW_PI * c)


def _minus_two_thirds_i(z):
    return _imag_scalar(z, -2.0 / 3.0, dw(-2.0) / 3)


def _strip_term_mu(z, cval):
    # -2 i pi x C(y): cut-crossing correction to the recurrence
    # inhomogeneity inside the left strip
    x = re_of(z)
    if isinstance(z, CDW):
        return CDW(dw(0.0), -(DW_PI * 2 * x * cval))
    return complex(0.0, -2.0 * math.pi * x * cval)


def _strip_term_seq(z, cval):
    # -2 i pi C(y): the x-free correction the sequence entries themselves
    # carry inside the strip
    if isinstance(z, CDW):
        return CDW(dw(0.0), -(DW_PI * 2 * cval))
    return complex(0.0, -2.0 * math.pi * cval)


def lambda_coeff(k, z):
    """Inhomogeneity of the log-kernel recurrence.

    Nonzero only for k = 0 (a combination of boundary logs, with the
    w log w -> 0 limit at the interval endpoints) and k = 1 (-2/3).
    """
    if k == 0:
        return _wlogw(shift_re(z, -1)) + _wlogw(shift_re(z, 1))
    if k == 1:
        if isinstance(z, CDW):
            return CDW(dw(-2.0) / 3, dw(0.0))
        return complex(-2.0 / 3.0, 0.0)
    return _zero(z)


def _mu_base(k, z):
    if k == 0:
        return _wlogw(shift_im(z, -1)) + _wlogw(shift_im(z, 1), minus=True)
    if k == 1:
        return _minus_two_thirds_i(z)
    return _zero(z)


def mu_coeff(k, z):
    """Inhomogeneity of the rotated log-kernel recurrence.

    The k = 0 seed pairs a lower-branch log with the principal one so the
    two cut crossings cancel; inside the left strip every order picks up
    the -2 i pi x C_{k+1}(y) correction.
    """
    base = _mu_base(k, z)
    if in_mu_strip(z):
        cvals = ultra_seq(-0.5, im_of(z), k + 1)
        base = base + _strip_term_mu(z, cvals[k + 1])
    return base


def _require_regular(z, bad_re, bad_im, what):
    for sr, si in ((bad_re, bad_im), (-bad_re, -bad_im)):
        if _is_at(z, sr, si):
            raise SingularPointError(
                "%s sequence is singular at %g%+gi" % (what, sr, si)
            )


def stieltjes_seq(z, n):
    """Cauchy-kernel moments S_0..S_n by forward recurrence.

    S_0 = log(z+1) - log(z-1); (k+1) S_{k+1} = (2k+1)(z S_k - 2 d_{k0})
    - k S_{k-1}. Singular at z = 1 and z = -1.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    _require_regular(z, 1.0, 0.0, "cauchy")
    s0 = clog(shift_re(z, 1)) - clog(shift_re(z, -1))
    seq = [s0]
    if n == 0:
        return seq
    seq.append(z * s0 - 2)
    for k in range(1, n):
        seq.append(((2 * k + 1) * (z * seq[k]) - k * seq[k - 1]) / (k + 1))
    return seq


def ultra_stieltjes_mhalf_seq(z, n):
    """Cauchy-kernel moments against C^(-1/2) densities.

    Shares the S_0 seed; the recurrence carries the moment vector
    (2, 0, 2/3, 0, ...) tripled so every coefficient stays an integer.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    _require_regular(z, 1.0, 0.0, "cauchy")
    s0 = clog(shift_re(z, 1)) - clog(shift_re(z, -1))
    seq = [s0]
    if n == 0:
        return seq
    seq.append(2 - z * s0)
    for k in range(1, n):
        tm = 2 if k == 2 else 0
        seq.append(
            ((2 * k - 1) * (3 * (z * seq[k]) - tm) - 3 * (k - 2) * seq[k - 1])
            / (3 * (k + 1))
        )
    return seq


def log_seq(z, n):
    """Log-kernel moments L_0..L_n by forward recurrence.

    L_0 = (1-z) log(z-1) + (1+z) log(z+1) - 2, then
    (k+2) L_{k+1} = (2k+1)(z L_k - lambda_k) - (k-1) L_{k-1} with
    L_{-1} := 0. Singular at z = 1 and z = -1.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    _require_regular(z, 1.0, 0.0, "log")
    l0 = (1 - z) * clog(shift_re(z, -1)) + (1 + z) * clog(shift_re(z, 1)) - 2
    seq = [l0]
    prev = _zero(z)
    for k in range(n):
        if k == 0:
            tl = 3 * lambda_coeff(0, z)
        elif k == 1:
            tl = -2
        else:
            tl = 0
        nxt = ((2 * k + 1) * (3 * (z * seq[k]) - tl) - 3 * (k - 1) * prev) / (
            3 * (k + 2)
        )
        prev = seq[k]
        seq.append(nxt)
    return seq


def _rotated_log_zero(z, n):
    # shared seed work for the rotated sequences: principal-branch L_0 at
    # -iz (exact sign-propagating rotation), region constant, strip data
    w = rotate_minus_i(z)
    l0 = (1 - w) * clog(shift_re(w, -1)) + (1 + w) * clog(shift_re(w, 1)) - 2
    c = _REGION_CONSTANT[classify_m_region(z)]
    strip = in_mu_strip(z)
    cvals = ultra_seq(-0.5, im_of(z), n + 1) if strip else None
    return w, l0, c, strip, cvals


def modlog_seq(z, n):
    """Rotated log-kernel moments M_0..M_n by forward recurrence.

    M_0 is the rotated L_0 plus i pi times a region constant (and the strip
    correction when z sits left of the square between the cut endpoints);
    (k+2) M_{k+1} = -i [(2k+1)(z M_k - mu_k) - i(k-1) M_{k-1}].
    Singular at z = i and z = -i.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    _require_regular(z, 0.0, 1.0, "rotated log")
    w, l0, c, strip, cvals = _rotated_log_zero(z, n)
    m0 = l0 + _i_pi_const(z, c)
    if strip:
        m0 = m0 + _strip_term_seq(z, cvals[1])
    seq = [m0]
    prev = _zero(z)
    for k in range(n):
        if k == 0:
            tmu = 3 * _mu_base(0, z)
        elif k == 1:
            tmu = complex(0.0, -2.0)
        else:
            tmu = 0
        if strip:
            tmu = tmu + 3 * _strip_term_mu(z, cvals[k + 1])
        step = (2 * k + 1) * (3 * (z * seq[k]) - tmu) - 3j * (k - 1) * prev
        nxt = step * complex(0.0, -1.0) / (3 * (k + 2))
        prev = seq[k]
        seq.append(nxt)
    return seq


def modlog_direct(z, n):
    """Rotated log-kernel moments taken entrywise from the plain sequence.

    Cross-check partner for modlog_seq: every entry is L_k(-iz) plus the
    k = 0 region constant and, in the strip, the order-k cut correction.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    _require_regular(z, 0.0, 1.0, "rotated log")
    w, l0, c, strip, cvals = _rotated_log_zero(z, n)
    base = log_seq(w, n)
    out = []
    for k, val in enumerate(base):
        if k == 0:
            val = val + _i_pi_const(z, c)
        if strip:
            val = val + _strip_term_seq(z, cvals[k + 1])
        out.append(val)
    return out
