"""Double-word (pairs of doubles) arithmetic with ~106-bit significands.

A value is stored as an unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
Arithmetic follows the classic error-free transformation algorithms
(Knuth's two-sum, Dekker's product split). Elementary functions take a
native-precision first guess and apply one correction step carried out
in double-word arithmetic, which is enough to exceed 100 correct bits,
comfortably past the 85-bit target the recurrences need.

Plain floats and DW values mix freely in arithmetic expressions; the
scalar_* helpers dispatch on type so the recurrence code can be written
once and run at either precision.
"""

from __future__ import annotations

import math

_SPLITTER = 134217729.0  # 2^27 + 1, splits a 53-bit significand in half

HAVE_FMA = hasattr(math, "fma")


def exact_two_sum(a: float, b: float) -> tuple[float, float]:
    """Branch-free two-sum: s = fl(a+b) and e with a + b = s + e exactly."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def fast_two_sum(a: float, b: float) -> tuple[float, float]:
    # requires |a| >= |b| (or a == 0)
    s = a + b
    e = b - (s - a)
    return s, e


def split(a: float) -> tuple[float, float]:
    """Dekker split of a 53-bit double into two 26/27-bit halves."""
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod_split(a: float, b: float) -> tuple[float, float]:
    """Exact product via Dekker splitting: a*b = p + e."""
    p = a * b
    ah, al = split(a)
    bh, bl = split(b)
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


if HAVE_FMA:

    def two_prod_fma(a: float, b: float) -> tuple[float, float]:
        p = a * b
        return p, math.fma(a, b, -p)

    two_prod = two_prod_fma
else:
    two_prod = two_prod_split


class DW:
    """A double-word real: hi + lo, normalized."""

    __slots__ = ("hi", "lo")

    def __init__(self, hi: float, lo: float = 0.0):
        self.hi = hi
        self.lo = lo

    def __repr__(self):
        return f"DW({self.hi!r}, {self.lo!r})"

    def __float__(self):
        # components may be numpy scalars; __float__ must hand back a builtin
        return float(self.hi + self.lo)

    def __bool__(self):
        return self.hi != 0.0 or self.lo != 0.0

    def __neg__(self):
        return DW(-self.hi, -self.lo)

    def __abs__(self):
        return -self if self.hi < 0.0 else DW(self.hi, self.lo)

    def __add__(self, other):
        if isinstance(other, DW):
            return dw_add(self, other)
        if isinstance(other, (int, float)):
            return dw_add_f(self, float(other))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, DW):
            return dw_add(self, -other)
        if isinstance(other, (int, float)):
            return dw_add_f(self, -float(other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, float)):
            return dw_add_f(-self, float(other))
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, DW):
            return dw_mul(self, other)
        if isinstance(other, (int, float)):
            return dw_mul_f(self, float(other))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, DW):
            return dw_div(self, other)
        if isinstance(other, (int, float)):
            return dw_div(self, DW(float(other)))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, float)):
            return dw_div(DW(float(other)), self)
        return NotImplemented

    def _cmp(self, other):
        if isinstance(other, (int, float)):
            other = DW(float(other))
        elif not isinstance(other, DW):
            return NotImplemented
        if self.hi != other.hi:
            return -1 if self.hi < other.hi else 1
        if self.lo != other.lo:
            return -1 if self.lo < other.lo else 1
        return 0

    def __eq__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c == 0

    def __ne__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c != 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __hash__(self):
        return hash((self.hi, self.lo))


def dw(x) -> DW:
    """Embed a native number (or pass a DW through) as a double-word value."""
    if isinstance(x, DW):
        return x
    return DW(float(x))


def dw_add(a: DW, b: DW) -> DW:
    s1, s2 = exact_two_sum(a.hi, b.hi)
    t1, t2 = exact_two_sum(a.lo, b.lo)
    s2 += t1
    s1, s2 = fast_two_sum(s1, s2)
    s2 += t2
    hi, lo = fast_two_sum(s1, s2)
    return DW(hi, lo)


def dw_add_f(a: DW, b: float) -> DW:
    s1, s2 = exact_two_sum(a.hi, b)
    s2 += a.lo
    hi, lo = fast_two_sum(s1, s2)
    return DW(hi, lo)


def dw_mul(a: DW, b: DW) -> DW:
    p1, p2 = two_prod(a.hi, b.hi)
    p2 += a.hi * b.lo + a.lo * b.hi
    hi, lo = fast_two_sum(p1, p2)
    return DW(hi, lo)


def dw_mul_f(a: DW, b: float) -> DW:
    p1, p2 = two_prod(a.hi, b)
    p2 += a.lo * b
    hi, lo = fast_two_sum(p1, p2)
    return DW(hi, lo)


def dw_div(a: DW, b: DW) -> DW:
    # three-step long division; each remainder update is error-free
    q1 = a.hi / b.hi
    r = dw_add(a, -dw_mul_f(b, q1))
    q2 = r.hi / b.hi
    r = dw_add(r, -dw_mul_f(b, q2))
    q3 = r.hi / b.hi
    s1, s2 = fast_two_sum(q1, q2)
    s2 += q3
    hi, lo = fast_two_sum(s1, s2)
    return DW(hi, lo)


def dw_sqrt(a: DW) -> DW:
    if a.hi == 0.0 and a.lo == 0.0:
        return DW(0.0)
    if a.hi < 0.0:
        raise ValueError("dw_sqrt of negative value")
    y = math.sqrt(a.hi)
    p1, p2 = two_prod(y, y)
    d = dw_add(a, DW(-p1, -p2))
    hi, lo = fast_two_sum(y, d.hi / (2.0 * y))
    return DW(hi, lo)


# Frozen double-word constants.
DW_LN2 = DW(0.6931471805599453, 2.3190468138462996e-17)
DW_PI = DW(3.141592653589793, 1.2246467991473532e-16)
DW_PI_2 = DW(1.5707963267948966, 6.123233995736766e-17)
DW_EPS = 2.0 ** -104

# 1/n! for n = 2..30, enough for the exp and sin/cos Taylor cores.
_INV_FACT = (
    (0.5, 0.0),
    (0.16666666666666666, 9.25185853854297e-18),
    (0.041666666666666664, 2.3129646346357427e-18),
    (0.008333333333333333, 1.1564823173178714e-19),
    (0.001388888888888889, -5.300543954373577e-20),
    (0.0001984126984126984, 1.7209558293420705e-22),
    (2.48015873015873e-05, 2.1511947866775882e-23),
    (2.7557319223985893e-06, -1.858393274046472e-22),
    (2.755731922398589e-07, 2.3767714622250297e-23),
    (2.505210838544172e-08, -1.448814070935912e-24),
    (2.08767569878681e-09, -1.20734505911326e-25),
    (1.6059043836821613e-10, 1.2585294588752098e-26),
    (1.1470745597729725e-11, 2.0655512752830745e-28),
    (7.647163731819816e-13, 7.03872877733453e-30),
    (4.779477332387385e-14, 4.399205485834081e-31),
    (2.8114572543455206e-15, 1.6508842730861433e-31),
    (1.5619206968586225e-16, 1.1910679660273754e-32),
    (8.22063524662433e-18, 2.2141894119604265e-34),
    (4.110317623312165e-19, 1.4412973378659527e-36),
    (1.9572941063391263e-20, -1.3643503830087908e-36),
    (8.896791392450574e-22, -7.911402614872376e-38),
    (3.868170170630684e-23, -8.843177655482344e-40),
    (1.6117375710961184e-24, -3.6846573564509766e-41),
    (6.446950284384474e-26, -1.9330404233703465e-42),
    (2.4795962632247976e-27, -1.2953730964765229e-43),
    (9.183689863795546e-29, 1.4303150396787322e-45),
    (3.279889237069838e-30, 1.5117542744029879e-46),
    (1.1309962886447716e-31, 1.0498015412959506e-47),
    (3.7699876288159054e-33, 2.5870347832750324e-49),
)


def _inv_fact(n: int) -> DW:
    return DW(*_INV_FACT[n - 2])


def dw_exp(a: DW) -> DW:
    """exp of a double-word value via argument reduction and Taylor core."""
    if a.hi > 709.0:
        return DW(math.inf)
    if a.hi < -745.0:
        return DW(0.0)
    m = round(a.hi / DW_LN2.hi)
    r = dw_add(a, -dw_mul_f(DW_LN2, float(m)))
    # |r| <= ln2/2; scale down so the Taylor series converges fast
    r = dw_mul_f(r, 1.0 / 512.0)
    # expm1 core: t = r + r^2/2! + ... ; truncation < 2^-110 for |r| < 7e-4
    t = DW(0.0)
    p = DW(1.0)
    for n in range(1, 13):
        p = dw_mul(p, r)
        t = dw_add(t, p if n < 2 else dw_mul(p, _inv_fact(n)))
    # undo scaling: 9 squarings of 1+t, kept in expm1 form t <- t^2 + 2t
    for _ in range(9):
        t = dw_add(dw_mul(t, t), dw_mul_f(t, 2.0))
    result = dw_add_f(t, 1.0)
    return DW(math.ldexp(result.hi, m), math.ldexp(result.lo, m))


def dw_log(a: DW) -> DW:
    """log of a positive double-word value, Newton-corrected."""
    if a.hi <= 0.0:
        raise ValueError("dw_log of non-positive value")
    # peel off the binary exponent so the Newton step's exp stays near 1
    # (exp of a large negative argument would lose its low word to the
    # denormal range and the correction with it)
    k = math.frexp(a.hi)[1]
    m = DW(math.ldexp(a.hi, -k), math.ldexp(a.lo, -k))
    y = math.log(m.hi)
    # one Newton step: y <- y + (x * exp(-y) - 1), quadratic convergence
    e = dw_exp(DW(-y))
    corr = dw_add_f(dw_mul(m, e), -1.0)
    r = dw_add(DW(y), corr)
    return dw_add(r, dw_mul_f(DW_LN2, float(k)))


def dw_sincos(a: DW) -> tuple[DW, DW]:
    """(sin a, cos a) for |a| <= pi + a rounding margin."""
    m = round(a.hi / DW_PI_2.hi)
    r = dw_add(a, -dw_mul_f(DW_PI_2, float(m)))
    # |r| <= pi/4 + eps; Taylor to n = 29 keeps truncation below 2^-105
    r2 = dw_mul(r, r)
    s = r
    p = r
    sign = 1.0
    for n in range(3, 30, 2):
        p = dw_mul(p, r2)
        sign = -sign
        s = dw_add(s, dw_mul_f(dw_mul(p, _inv_fact(n)), sign))
    c = DW(1.0)
    p = DW(1.0)
    sign = 1.0
    for n in range(2, 31, 2):
        p = dw_mul(p, r2)
        sign = -sign
        c = dw_add(c, dw_mul_f(dw_mul(p, _inv_fact(n)), sign))
    q = m % 4  # Python modulo keeps this in 0..3 for negative m too
    if q == 1:
        return c, -s
    if q == 2:
        return -s, -c
    if q == 3:
        return -c, s
    return s, c


def dw_atan2(y: DW, x: DW) -> DW:
    """atan2 over double-words with IEEE quadrant and signed-zero semantics."""
    yf = y.hi + y.lo
    xf = x.hi + x.lo
    # exact-zero components first: adding hi+lo loses the zero's sign bit,
    # and the sign bit is what selects the branch side
    if yf == 0.0:
        if xf > 0.0:
            return DW(math.copysign(0.0, y.hi))
        if xf < 0.0:
            sgn = math.copysign(1.0, y.hi)
            return DW(sgn * DW_PI.hi, sgn * DW_PI.lo)
        return DW(math.atan2(y.hi, x.hi))
    if xf == 0.0:
        sgn = math.copysign(1.0, yf)
        return DW(sgn * DW_PI_2.hi, sgn * DW_PI_2.lo)
    # the angle is scale-invariant: rescale by a power of two so the
    # correction's squares can neither overflow nor drown in underflow
    e = math.frexp(max(abs(yf), abs(xf)))[1]
    if e > 100 or e < -100:
        y = DW(math.ldexp(y.hi, -e), math.ldexp(y.lo, -e))
        x = DW(math.ldexp(x.hi, -e), math.ldexp(x.lo, -e))
        yf = y.hi + y.lo
        xf = x.hi + x.lo
    t0 = math.atan2(yf, xf)
    # correction: atan2(y,x) = t0 + sin(d) where d is the small residual
    # angle; sin(d) ~ (y cos t0 - x sin t0)/hypot(x,y) to full precision
    s, c = dw_sincos(DW(t0))
    num = dw_add(dw_mul(y, c), -dw_mul(x, s))
    h = dw_sqrt(dw_add(dw_mul(x, x), dw_mul(y, y)))
    if h.hi == 0.0:
        return DW(t0)
    return dw_add(DW(t0), dw_div(num, h))


# Type-generic scalar helpers: accept float or DW, return the same kind.


def scalar_log(x):
    if isinstance(x, DW):
        return dw_log(x)
    return math.log(x)


def scalar_exp(x):
    if isinstance(x, DW):
        return dw_exp(x)
    return math.exp(x)


def scalar_sqrt(x):
    if isinstance(x, DW):
        return dw_sqrt(x)
    return math.sqrt(x)


def scalar_atan2(y, x):
    if isinstance(y, DW) or isinstance(x, DW):
        return dw_atan2(dw(y), dw(x))
    return math.atan2(y, x)


def scalar_signbit(x) -> bool:
    """Sign bit of a float or DW, distinguishing -0.0 from +0.0."""
    h = x.hi if isinstance(x, DW) else x
    return math.copysign(1.0, h) < 0.0


def scalar_float(x) -> float:
    return float(x)


def dw_arith(a: DW, b: DW, op: str) -> DW:
    """Dispatch form of the four arithmetic operations."""
    if op == "add":
        return dw_add(a, b)
    if op == "sub":
        return dw_add(a, -b)
    if op == "mul":
        return dw_mul(a, b)
    if op == "div":
        return dw_div(a, b)
    raise ValueError(f"unknown op {op!r}")


def dw_elementary(x: DW, f: str) -> DW:
    """Dispatch form of the elementary functions on double-words."""
    if f == "log":
        return dw_log(x)
    if f == "exp":
        return dw_exp(x)
    if f == "sqrt":
        return dw_sqrt(x)
    raise ValueError(f"unknown function {f!r}")
