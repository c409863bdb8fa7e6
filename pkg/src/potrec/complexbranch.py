"""Branch-cut-aware complex arithmetic at native or double-word precision.

Native points are plain Python complex; double-word points use CDW, a
complex with DW components that supports the same arithmetic operators.
The logarithm helpers control which side of the cut is taken: clog is
the principal branch (the sign bit of a zero imaginary part selects the
side), clog_minus forces the lower limit on the negative real axis.

The region classifiers encode where the modified-log seed constants and
the correction term beta switch cases. Points exactly on the imaginary
axis are classified by the sign bit of the real part: a +0.0 real part
behaves as a limit from the right half-plane, a -0.0 as one from the
left. Without this the seeds jump by multiples of 2*pi*i on the axis.
"""

from __future__ import annotations

import cmath
import enum
import math

from .doubledouble import (
    DW,
    DW_PI,
    dw,
    dw_atan2,
    dw_log,
    dw_mul,
    scalar_signbit,
)


class MRegion(enum.Enum):
    RIGHT_OR_TOP = "right_or_top"
    LEFT_BOTTOM = "left_bottom"
    LEFT_STRIP = "left_strip"


class BetaRegion(enum.Enum):
    IN_SQUARE = "in_square"
    LEFT_OF_SQUARE_STRIP = "left_of_square_strip"
    ELSEWHERE = "elsewhere"


class CDW:
    """Complex number with double-word real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0.0):
        self.re = dw(re)
        self.im = dw(im)

    def __repr__(self):
        return f"CDW({self.re!r}, {self.im!r})"

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def conjugate(self):
        return CDW(self.re, -self.im)

    def _coerce(self, other):
        if isinstance(other, CDW):
            return other
        if isinstance(other, complex):
            return CDW(other.real, other.imag)
        if isinstance(other, (int, float, DW)):
            return CDW(other, 0.0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CDW(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CDW(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CDW(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        if isinstance(other, (int, float, DW)):
            return CDW(self.re * other, self.im * other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CDW(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, DW)):
            return CDW(self.re / other, self.im / other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        return CDW(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __neg__(self):
        return CDW(-self.re, -self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))


def cdw(z) -> CDW:
    """Embed a native complex (or pass a CDW through) at double-word precision."""
    if isinstance(z, CDW):
        return z
    z = complex(z)
    return CDW(z.real, z.imag)


def is_doubleword(z) -> bool:
    return isinstance(z, CDW)


def make_complex(re, im):
    """Build a point of the same flavor as its components."""
    if isinstance(re, DW) or isinstance(im, DW):
        return CDW(re, im)
    return complex(re, im)


def re_of(z):
    return z.re if isinstance(z, CDW) else z.real


def im_of(z):
    return z.im if isinstance(z, CDW) else z.imag


def shift_re(z, a):
    """z + a for real a, leaving the imaginary component bit-identical.

    Plain complex addition would turn im = -0.0 into +0.0 and flip the
    branch side of a later log; a real shift must never touch im.
    """
    if isinstance(z, CDW):
        return CDW(z.re + a, z.im)
    return complex(z.real + a, z.imag)


def shift_im(z, b):
    """z + i*b for real b, leaving the real component bit-identical."""
    if isinstance(z, CDW):
        return CDW(z.re, z.im + b)
    return complex(z.real, z.imag + b)


def _cdw_abs2(z: CDW) -> DW:
    return z.re * z.re + z.im * z.im


def clog(z):
    """Principal-branch log; imaginary part in (-pi, pi] by atan2 semantics.

    A zero imaginary part keeps its sign bit, so points on the negative
    real axis resolve to the +i*pi side for +0 and the -i*pi side for -0.
    """
    if isinstance(z, CDW):
        if float(z.re) == 0.0 and float(z.im) == 0.0:
            raise ValueError("clog of zero")
        theta = dw_atan2(z.im, z.re)
        # overflow-safe modulus: scale by the larger component
        ar, ai = abs(z.re), abs(z.im)
        big = ar if ar >= ai else ai
        zs = CDW(z.re / big, z.im / big)
        mod = dw_log(_cdw_abs2(zs)) * 0.5 + dw_log(big)
        return CDW(mod, theta)
    if z == 0:
        raise ValueError("clog of zero")
    return cmath.log(z)


def clog_minus(z):
    """Principal log except on the cut itself, where the lower limit is taken.

    On {im = +-0, re < 0} the imaginary part is -pi regardless of the
    zero's sign; everywhere else this is clog.
    """
    w = clog(z)
    if isinstance(z, CDW):
        if float(z.im) == 0.0 and float(z.re) < 0.0:
            return CDW(w.re, -DW_PI)
        return w
    if z.imag == 0.0 and z.real < 0.0:
        return complex(w.real, -math.pi)
    return w


def rotate_minus_i(z):
    """Multiply by -i: (x, y) -> (y, -x) with exact sign-bit propagation."""
    if isinstance(z, CDW):
        return CDW(z.im, -z.re)
    return complex(z.imag, -z.real)


def _parts_native(z) -> tuple[float, float]:
    if isinstance(z, CDW):
        return float(z.re), float(z.im)
    return z.real, z.imag


def _re_signbit(z) -> bool:
    return scalar_signbit(z.re if isinstance(z, CDW) else z.real)


def classify_m_region(z) -> MRegion:
    """Case selector for the modified-log seed constant.

    Right half-plane or top band -> first case; left-and-bottom -> second;
    left strip -> third. On the imaginary axis (x = 0) the sign bit of x
    decides in every y range, matching the one-sided limits the seed
    formulas take there.
    """
    x, y = _parts_native(z)
    if math.isnan(x) or math.isnan(y):
        raise ValueError("cannot classify NaN point")
    if y >= 1.0:
        return MRegion.RIGHT_OR_TOP
    if x > 0.0 or (x == 0.0 and not _re_signbit(z)):
        return MRegion.RIGHT_OR_TOP
    if y <= -1.0:
        return MRegion.LEFT_BOTTOM
    return MRegion.LEFT_STRIP


def in_mu_strip(z) -> bool:
    """Strip membership for the mu correction term: x < 0 and -1 < y < 1."""
    x, y = _parts_native(z)
    if math.isnan(x) or math.isnan(y):
        raise ValueError("cannot classify NaN point")
    on_left = x < 0.0 or (x == 0.0 and _re_signbit(z))
    return on_left and -1.0 < y < 1.0


def classify_beta_region(z) -> BetaRegion:
    """Case selector for the beta correction term.

    Membership is half-open at the top edge (y in [-1, 1)): at y = 1 the
    shifted seed logs evaluate with a +0.0 imaginary part, i.e. on the
    upper branch side, and the upper-side limit pairs with beta = 0.
    The bottom edge y = -1 pairs the other way and stays included.
    """
    x, y = _parts_native(z)
    if math.isnan(x) or math.isnan(y):
        raise ValueError("cannot classify NaN point")
    if -1.0 <= y < 1.0:
        if -1.0 <= x <= 1.0:
            return BetaRegion.IN_SQUARE
        if x < -1.0:
            return BetaRegion.LEFT_OF_SQUARE_STRIP
    return BetaRegion.ELSEWHERE
