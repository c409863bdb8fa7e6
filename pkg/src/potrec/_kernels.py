"""Compiled table builders behind the generic recurrence implementations.

The generic builders in square.py are written over an abstract scalar and
pay Python interpreter cost per entry; these kernels run the same
recurrences over flat arrays. The native kernels mirror the plain-complex
path; the double-word kernels carry every entry as four floats (hi/lo of
the real and imaginary parts) and inline the error-free transformations,
including the elementary functions the seeds need, so no per-entry Python
work remains anywhere on the hot path.

Wrappers keep all branch-cut decisions in the validated Python code: the
shifted evaluation points, region codes and strip flags come from
complexbranch, and for the native path the O(1) seed values themselves
come from interval. Everything downstream is plain arithmetic.

The module imports lazily from square.py; when numba is missing it still
imports, with KERNELS_AVAILABLE = False, and the table functions must not
be called.
"""

import math

import numpy as np

try:
    from numba import njit

    KERNELS_AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba
    KERNELS_AVAILABLE = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return wrap


from .complexbranch import (
    BetaRegion,
    cdw,
    classify_beta_region,
    classify_m_region,
    in_mu_strip,
    rotate_minus_i,
    shift_im,
    shift_re,
)
from .doubledouble import DW, dw_div
from .interval import _REGION_CONSTANT, _mu_base, lambda_coeff, log_seq, modlog_seq

# inhomogeneity constants as full double-word quotients, matching the
# generic path's dw(-2.0)/3 and dw(-4.0)/3
_q = dw_div(DW(-2.0), DW(3.0))
_M23_HI, _M23_LO = _q.hi, _q.lo
_q = dw_div(DW(-4.0), DW(3.0))
_M43_HI, _M43_LO = _q.hi, _q.lo
del _q

_BETA_CODE = {
    BetaRegion.ELSEWHERE: 0,
    BetaRegion.IN_SQUARE: 1,
    BetaRegion.LEFT_OF_SQUARE_STRIP: 2,
}

_PI_HI = 3.141592653589793
_PI_LO = 1.2246467991473532e-16
_LN2_HI = 0.6931471805599453
_LN2_LO = 2.3190468138462996e-17
_PI2_HI = 1.5707963267948966
_PI2_LO = 6.123233995736766e-17
_SPLITTER = 134217729.0

# hi/lo words of 1/n! for n = 2..30 (exp and sin/cos Taylor cores)
_IFACT_HI = np.array(
    [
        0.5,
        0.16666666666666666,
        0.041666666666666664,
        0.008333333333333333,
        0.001388888888888889,
        0.0001984126984126984,
        2.48015873015873e-05,
        2.7557319223985893e-06,
        2.755731922398589e-07,
        2.505210838544172e-08,
        2.08767569878681e-09,
        1.6059043836821613e-10,
        1.1470745597729725e-11,
        7.647163731819816e-13,
        4.779477332387385e-14,
        2.8114572543455206e-15,
        1.5619206968586225e-16,
        8.22063524662433e-18,
        4.110317623312165e-19,
        1.9572941063391263e-20,
        8.896791392450574e-22,
        3.868170170630684e-23,
        1.6117375710961184e-24,
        6.446950284384474e-26,
        2.4795962632247976e-27,
        9.183689863795546e-29,
        3.279889237069838e-30,
        1.1309962886447716e-31,
        3.7699876288159054e-33,
    ]
)
_IFACT_LO = np.array(
    [
        0.0,
        9.25185853854297e-18,
        2.3129646346357427e-18,
        1.1564823173178714e-19,
        -5.300543954373577e-20,
        1.7209558293420705e-22,
        2.1511947866775882e-23,
        -1.858393274046472e-22,
        2.3767714622250297e-23,
        -1.448814070935912e-24,
        -1.20734505911326e-25,
        1.2585294588752098e-26,
        2.0655512752830745e-28,
        7.03872877733453e-30,
        4.399205485834081e-31,
        1.6508842730861433e-31,
        1.1910679660273754e-32,
        2.2141894119604265e-34,
        1.4412973378659527e-36,
        -1.3643503830087908e-36,
        -7.911402614872376e-38,
        -8.843177655482344e-40,
        -3.6846573564509766e-41,
        -1.9330404233703465e-42,
        -1.2953730964765229e-43,
        1.4303150396787322e-45,
        1.5117542744029879e-46,
        1.0498015412959506e-47,
        2.5870347832750324e-49,
    ]
)


# ------------------------------------------------- double-word primitives
# A double-word scalar is a 2-tuple (hi, lo); a complex one is a 4-tuple
# (re_hi, re_lo, im_hi, im_lo). The algorithms are the ones doubledouble.py
# uses, so kernel and generic results track each other closely.


@njit(inline="always")
def _ts(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


@njit(inline="always")
def _fts(a, b):
    s = a + b
    return s, b - (s - a)


@njit(inline="always")
def _tp(a, b):
    p = a * b
    t = _SPLITTER * a
    ah = t - (t - a)
    al = a - ah
    t = _SPLITTER * b
    bh = t - (t - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


@njit(inline="always")
def _dadd(a, b):
    s1, s2 = _ts(a[0], b[0])
    t1, t2 = _ts(a[1], b[1])
    s2 += t1
    s1, s2 = _fts(s1, s2)
    s2 += t2
    return _fts(s1, s2)


@njit(inline="always")
def _daddf(a, b):
    s1, s2 = _ts(a[0], b)
    s2 += a[1]
    return _fts(s1, s2)


@njit(inline="always")
def _dneg(a):
    return -a[0], -a[1]


@njit(inline="always")
def _dsub(a, b):
    return _dadd(a, (-b[0], -b[1]))


@njit(inline="always")
def _dmul(a, b):
    p1, p2 = _tp(a[0], b[0])
    p2 += a[0] * b[1] + a[1] * b[0]
    return _fts(p1, p2)


@njit(inline="always")
def _dmulf(a, b):
    p1, p2 = _tp(a[0], b)
    p2 += a[1] * b
    return _fts(p1, p2)


@njit(inline="always")
def _ddiv(a, b):
    q1 = a[0] / b[0]
    t = _dmulf(b, q1)
    r = _dadd(a, (-t[0], -t[1]))
    q2 = r[0] / b[0]
    t = _dmulf(b, q2)
    r = _dadd(r, (-t[0], -t[1]))
    q3 = r[0] / b[0]
    s1, s2 = _fts(q1, q2)
    s2 += q3
    return _fts(s1, s2)


@njit(inline="always")
def _ddivf(a, b):
    return _ddiv(a, (b, 0.0))


@njit(inline="always")
def _dge(a, b):
    if a[0] != b[0]:
        return a[0] > b[0]
    return a[1] >= b[1]


@njit(inline="always")
def _dabs(a):
    if a[0] < 0.0:
        return -a[0], -a[1]
    return a[0], a[1]


@njit(cache=True)
def _dsqrt(a):
    if a[0] == 0.0 and a[1] == 0.0:
        return 0.0, 0.0
    y = math.sqrt(a[0])
    p1, p2 = _tp(y, y)
    d = _dadd(a, (-p1, -p2))
    return _fts(y, d[0] / (2.0 * y))


@njit(cache=True)
def _dexp(a):
    if a[0] > 709.0:
        return math.inf, 0.0
    if a[0] < -745.0:
        return 0.0, 0.0
    m = round(a[0] / _LN2_HI)
    r = _dadd(a, _dneg(_dmulf((_LN2_HI, _LN2_LO), m)))
    r = _dmulf(r, 1.0 / 512.0)
    t = (0.0, 0.0)
    pw = (1.0, 0.0)
    for n in range(1, 13):
        pw = _dmul(pw, r)
        if n < 2:
            t = _dadd(t, pw)
        else:
            t = _dadd(t, _dmul(pw, (_IFACT_HI[n - 2], _IFACT_LO[n - 2])))
    for _ in range(9):
        t = _dadd(_dmul(t, t), _dmulf(t, 2.0))
    res = _daddf(t, 1.0)
    im = int(m)
    return math.ldexp(res[0], im), math.ldexp(res[1], im)


@njit(cache=True)
def _dlog(a):
    k = math.frexp(a[0])[1]
    m = (math.ldexp(a[0], -k), math.ldexp(a[1], -k))
    y = math.log(m[0])
    e = _dexp((-y, 0.0))
    corr = _daddf(_dmul(m, e), -1.0)
    r = _dadd((y, 0.0), corr)
    return _dadd(r, _dmulf((_LN2_HI, _LN2_LO), float(k)))


@njit(cache=True)
def _dsincos(a):
    m = round(a[0] / _PI2_HI)
    r = _dadd(a, _dneg(_dmulf((_PI2_HI, _PI2_LO), m)))
    r2 = _dmul(r, r)
    s = r
    pw = r
    sign = 1.0
    for n in range(3, 30, 2):
        pw = _dmul(pw, r2)
        sign = -sign
        s = _dadd(s, _dmulf(_dmul(pw, (_IFACT_HI[n - 2], _IFACT_LO[n - 2])), sign))
    c = (1.0, 0.0)
    pw = (1.0, 0.0)
    sign = 1.0
    for n in range(2, 31, 2):
        pw = _dmul(pw, r2)
        sign = -sign
        c = _dadd(c, _dmulf(_dmul(pw, (_IFACT_HI[n - 2], _IFACT_LO[n - 2])), sign))
    q = int(m) % 4
    if q == 1:
        return c, _dneg(s)
    if q == 2:
        return _dneg(s), _dneg(c)
    if q == 3:
        return _dneg(c), s
    return s, c


@njit(cache=True)
def _datan2(y, x):
    yf = y[0] + y[1]
    xf = x[0] + x[1]
    if yf == 0.0:
        if xf > 0.0:
            return math.copysign(0.0, y[0]), 0.0
        if xf < 0.0:
            sgn = math.copysign(1.0, y[0])
            return sgn * _PI_HI, sgn * _PI_LO
        return math.atan2(y[0], x[0]), 0.0
    if xf == 0.0:
        sgn = math.copysign(1.0, yf)
        return sgn * _PI2_HI, sgn * _PI2_LO
    e = math.frexp(max(abs(yf), abs(xf)))[1]
    if e > 100 or e < -100:
        y = (math.ldexp(y[0], -e), math.ldexp(y[1], -e))
        x = (math.ldexp(x[0], -e), math.ldexp(x[1], -e))
        yf = y[0] + y[1]
        xf = x[0] + x[1]
    t0 = math.atan2(yf, xf)
    s, c = _dsincos((t0, 0.0))
    num = _dadd(_dmul(y, c), _dneg(_dmul(x, s)))
    h = _dsqrt(_dadd(_dmul(x, x), _dmul(y, y)))
    if h[0] == 0.0:
        return t0, 0.0
    return _dadd((t0, 0.0), _ddiv(num, h))


# --------------------------------------------- complex double-word helpers


@njit(inline="always")
def _cre(a):
    return a[0], a[1]


@njit(inline="always")
def _cim(a):
    return a[2], a[3]


@njit(inline="always")
def _cpack(re, im):
    return re[0], re[1], im[0], im[1]


@njit(inline="always")
def _cadd(a, b):
    return _cpack(_dadd(_cre(a), _cre(b)), _dadd(_cim(a), _cim(b)))


@njit(inline="always")
def _csub(a, b):
    return _cpack(_dsub(_cre(a), _cre(b)), _dsub(_cim(a), _cim(b)))


@njit(inline="always")
def _cneg(a):
    return -a[0], -a[1], -a[2], -a[3]


@njit(inline="always")
def _cmul(a, b):
    re = _dsub(_dmul(_cre(a), _cre(b)), _dmul(_cim(a), _cim(b)))
    im = _dadd(_dmul(_cre(a), _cim(b)), _dmul(_cim(a), _cre(b)))
    return _cpack(re, im)


@njit(inline="always")
def _cmulf(a, f):
    return _cpack(_dmulf(_cre(a), f), _dmulf(_cim(a), f))


@njit(inline="always")
def _cmul_imf(a, f):
    # times the purely imaginary f*i
    return _cpack(_dneg(_dmulf(_cim(a), f)), _dmulf(_cre(a), f))


@njit(inline="always")
def _cdivf(a, f):
    return _cpack(_ddivf(_cre(a), f), _ddivf(_cim(a), f))


@njit(inline="always")
def _caddf(a, f):
    return _cpack(_daddf(_cre(a), f), _cim(a))


@njit(inline="always")
def _crsubf(a, f):
    # f - a for real f
    return _cpack(_daddf(_dneg(_cre(a)), f), _dneg(_cim(a)))


@njit(inline="always")
def _cshift_re(a, f):
    return _cpack(_daddf(_cre(a), f), _cim(a))


@njit(inline="always")
def _cshift_im(a, f):
    return _cpack(_cre(a), _daddf(_cim(a), f))


@njit(inline="always")
def _crot_minus_i(a):
    return a[2], a[3], -a[0], -a[1]


@njit(cache=True)
def _cdlog(a):
    # principal branch; the sign bit of a zero imaginary part picks the side
    theta = _datan2(_cim(a), _cre(a))
    ar = _dabs(_cre(a))
    ai = _dabs(_cim(a))
    big = ar if _dge(ar, ai) else ai
    sre = _ddiv(_cre(a), big)
    sim = _ddiv(_cim(a), big)
    ab2 = _dadd(_dmul(sre, sre), _dmul(sim, sim))
    mod = _dadd(_dmulf(_dlog(ab2), 0.5), _dlog(big))
    return _cpack(mod, theta)


@njit(cache=True)
def _cwlogw(a, minus):
    # w log w with the limit value 0 at w = 0
    if a[0] + a[1] == 0.0 and a[2] + a[3] == 0.0:
        return 0.0, 0.0, 0.0, 0.0
    lg = _cdlog(a)
    if minus and a[2] + a[3] == 0.0 and a[0] + a[1] < 0.0:
        lg = (lg[0], lg[1], -_PI_HI, -_PI_LO)
    return _cmul(a, lg)


# ------------------------------------------------------- native sequences


@njit(cache=True)
def _modlog_native(w, m0, mu0, strip, fac, y, n, out):
    out[0] = m0
    if n == 0:
        return
    prev = 0.0j
    cp = 1.0
    cc = -y
    for k in range(n):
        if k == 0:
            tmu = 3.0 * mu0
        elif k == 1:
            tmu = complex(0.0, -2.0)
        else:
            tmu = 0.0j
        if strip:
            tmu = tmu + 3.0 * complex(0.0, fac * cc)
        step = (2 * k + 1) * (3.0 * (w * out[k]) - tmu) - 3j * (k - 1) * prev
        prev = out[k]
        out[k + 1] = step * complex(0.0, -1.0) / (3.0 * (k + 2))
        cn = ((2 * k + 1) * y * cc - (k - 1) * cp) / (k + 2)
        cp = cc
        cc = cn


@njit(cache=True)
def _log_seq_native(v, l0, lam0, n, out):
    out[0] = l0
    prev = 0.0j
    for k in range(n):
        if k == 0:
            tl = 3.0 * lam0
        elif k == 1:
            tl = complex(-2.0, 0.0)
        else:
            tl = 0.0j
        nxt = ((2 * k + 1) * (3.0 * (v * out[k]) - tl) - 3.0 * (k - 1) * prev) / (
            3.0 * (k + 2)
        )
        prev = out[k]
        out[k + 1] = nxt


@njit(cache=True)
def _ultra_native(twolam, x, n, out):
    out[0] = 1.0
    if n == 0:
        return
    out[1] = twolam * x
    for k in range(1, n):
        out[k + 1] = ((2 * k + twolam) * x * out[k] - (k + twolam - 1) * out[k - 1]) / (
            k + 1
        )


@njit(cache=True)
def _beta_arrays_native(region, x, y, p, bu, bv):
    if region == 0:
        return
    cm = np.empty(p + 2)
    _ultra_native(-1, y, p + 1, cm)
    two_pi = 2.0 * math.pi
    for j in range(p + 1):
        bv[j] = two_pi * cm[j + 1]
    if region == 1:
        c32 = np.empty(p + 3)
        _ultra_native(-3, x, p + 2, c32)
        for k in range(p + 1):
            b = c32[k + 2]
            if k == 0:
                b = b - 3.0 * x
            elif k == 1:
                b = b + 1.0
            bu[k] = b
    else:
        bu[0] = -6.0 * x
        if p >= 1:
            bu[1] = 2.0


# ---------------------------------------------------- native table kernels


@njit(cache=True)
def _log_table_native_core(
    p,
    z,
    wm,
    m0m,
    mu0m,
    stripm,
    facm,
    ym,
    wp,
    m0p,
    mu0p,
    stripp,
    facp,
    yp,
    vm,
    l0m,
    lam0m,
    vp,
    l0p,
    lam0p,
    region,
    x,
    y,
):
    n = p + 1
    mm = np.empty(n + 1, dtype=np.complex128)
    mp = np.empty(n + 1, dtype=np.complex128)
    _modlog_native(wm, m0m, mu0m, stripm, facm, ym, n, mm)
    _modlog_native(wp, m0p, mu0p, stripp, facp, yp, n, mp)
    lm = np.empty(n + 1, dtype=np.complex128)
    lp = np.empty(n + 1, dtype=np.complex128)
    _log_seq_native(vm, l0m, lam0m, n, lm)
    _log_seq_native(vp, l0p, lam0p, n, lp)

    bu = np.zeros(p + 1)
    bv = np.zeros(p + 1)
    _beta_arrays_native(region, x, y, p, bu, bv)

    f1row = np.empty(p + 1, dtype=np.complex128)
    cpm = 1.0
    ccm = -ym
    cpp = 1.0
    ccp = -yp
    for j in range(p + 1):
        low = mm[j - 1] + mp[j - 1] if j >= 1 else 0.0j
        v = (mm[j + 1] + mp[j + 1] - low) * 1j / (2 * j + 1)
        mum = complex(0.0, facm * ccm) if stripm else 0.0j
        mup = complex(0.0, facp * ccp) if stripp else 0.0j
        if j == 0:
            v = v + (mu0m + mum) + (mu0p + mup)
        elif j == 1:
            third = complex(0.0, -2.0 / 3.0)
            v = v + (third + mum) + (third + mup)
        else:
            v = v + mum + mup
        f1row[j] = v
        cnm = ((2 * j + 1) * ym * ccm - (j - 1) * cpm) / (j + 2)
        cpm = ccm
        ccm = cnm
        cnp = ((2 * j + 1) * yp * ccp - (j - 1) * cpp) / (j + 2)
        cpp = ccp
        ccp = cnp

    f2col = np.empty(p + 1, dtype=np.complex128)
    for k in range(p + 1):
        low = lm[k - 1] + lp[k - 1] if k >= 1 else 0.0j
        v = (lm[k + 1] + lp[k + 1] - low) / (2 * k + 1)
        if k == 0:
            v = v + lam0m + lam0p
        elif k == 1:
            v = (v + complex(-2.0 / 3.0, 0.0)) + complex(-2.0 / 3.0, 0.0)
        f2col[k] = v + complex(0.0, bu[k] * bv[0] / 3.0)

    out = np.zeros((p + 1, p + 1), dtype=np.complex128)
    out[0, 0] = (1.0 - z) * mm[0] + mm[1] * 1j + (1.0 + z) * mp[0] - mp[1] * 1j - 4.0

    for k in range(p):
        prev = out[k - 1, 0] if k >= 1 else 0.0j
        if k == 0:
            fa = f1row[0]
        elif k == 1:
            fa = complex(-4.0 / 3.0, 0.0)
        else:
            fa = 0.0j
        step = (2 * k + 1) * (z * out[k, 0] - 2.0 * fa + f2col[k]) - (k - 2) * prev
        out[k + 1, 0] = step / (k + 3)

    for j in range(p):
        prev = out[0, j - 1] if j >= 1 else 0.0j
        if j == 0:
            fb = f2col[0]
        else:
            fb = complex(0.0, bu[0] * bv[j] / 3.0)
            if j == 1:
                fb = fb + complex(0.0, -4.0 / 3.0)
        step = (2 * j + 1) * (z * out[0, j] - 2.0 * fb + f1row[j]) - (
            (j - 2) * prev
        ) * 1j
        out[0, j + 1] = step * (-1j) / (j + 3)

    for l in range(p // 2):
        for r in range(l + 1, p - l):
            cl = (out[r + 1, l] - out[r - 1, l]) / (2 * r + 1)
            prev = out[r, l - 1] if l >= 1 else 0.0j
            if l == 0:
                fv = f2col[r]
                if r == 1:
                    fv = fv + 4.0 / 3.0
            else:
                fv = complex(0.0, bu[r] * bv[l] / 3.0)
            out[r, l + 1] = prev + (fv - cl) * complex(0.0, 2 * l + 1)
        for c in range(l + 2, p - l):
            prev = out[l - 1, c] if l >= 1 else 0.0j
            cross = (out[l, c + 1] - out[l, c - 1]) * complex(0.0, 2 * l + 1) / (
                2 * c + 1
            )
            if l == 0:
                fv = complex(0.0, bu[0] * bv[c] / 3.0) - f1row[c]
            else:
                fv = complex(0.0, bu[l] * bv[c] / 3.0)
            out[l + 1, c] = prev + (2 * l + 1) * fv + cross
    return out


@njit(cache=True)
def _stieltjes_table_native_core(
    p,
    z,
    w1,
    m01,
    mu01,
    s1,
    f1,
    y1,
    w2,
    m02,
    mu02,
    s2,
    f2,
    y2,
    w3,
    m03,
    mu03,
    s3,
    f3,
    y3,
    w4,
    m04,
    mu04,
    s4,
    f4,
    y4,
):
    a1 = np.empty(p + 1, dtype=np.complex128)
    a2 = np.empty(p + 1, dtype=np.complex128)
    a3 = np.empty(p + 1, dtype=np.complex128)
    a4 = np.empty(p + 1, dtype=np.complex128)
    _modlog_native(w1, m01, mu01, s1, f1, y1, p, a1)
    _modlog_native(w2, m02, mu02, s2, f2, y2, p, a2)
    _modlog_native(w3, m03, mu03, s3, f3, y3, p, a3)
    _modlog_native(w4, m04, mu04, s4, f4, y4, p, a4)

    out = np.zeros((p + 1, p + 1), dtype=np.complex128)
    for k in range(p + 1):
        v = (a1[k] - a2[k]) * 1j
        out[k, 0] = v if k % 2 == 0 else -v
    for j in range(p + 1):
        out[0, j] = a3[j] - a4[j]

    for l in range(p // 2):
        for r in range(l + 1, p - l):
            bs = (r * out[r - 1, l] + (r + 1) * out[r + 1, l]) / (2 * r + 1)
            step = (z * out[r, l] - bs) * complex(0.0, -(2 * l + 1))
            if l >= 1:
                step = step - l * out[r, l - 1]
            out[r, l + 1] = step / (l + 1)
        for c in range(l + 2, p - l):
            cross = (c * out[l, c - 1] + (c + 1) * out[l, c + 1]) * 1j / (2 * c + 1)
            step = (2 * l + 1) * (z * out[l, c] - cross)
            if l >= 1:
                step = step - l * out[l - 1, c]
            out[l + 1, c] = step / (l + 1)
    return out


# ----------------------------------------------- double-word sequences


@njit(cache=True)
def _modlog_dw(w, creg, strip, n, out):
    # seed: rotate, take branch logs, add the region constant
    v = _crot_minus_i(w)
    la = _cdlog(_cshift_re(v, -1.0))
    lb = _cdlog(_cshift_re(v, 1.0))
    l0 = _caddf(_cadd(_cmul(_crsubf(v, 1.0), la), _cmul(_caddf(v, 1.0), lb)), -2.0)
    pic = _dmulf((_PI_HI, _PI_LO), float(creg))
    m0 = _cpack(_cre(l0), _dadd(_cim(l0), pic))
    y = _cim(w)
    pi2 = _dmulf((_PI_HI, _PI_LO), 2.0)
    if strip:
        c1 = _dmulf(y, -1.0)
        m0 = _cpack(_cre(m0), _dadd(_cim(m0), _dneg(_dmul(pi2, c1))))
    out[0, 0] = m0[0]
    out[0, 1] = m0[1]
    out[0, 2] = m0[2]
    out[0, 3] = m0[3]
    if n == 0:
        return
    mu0 = _cadd(
        _cwlogw(_cshift_im(w, -1.0), False), _cwlogw(_cshift_im(w, 1.0), True)
    )
    fac = _dmul(pi2, _cre(w))
    prev = (0.0, 0.0, 0.0, 0.0)
    cp = (1.0, 0.0)
    cc = _dmulf(y, -1.0)
    for k in range(n):
        if k == 0:
            tmu = _cmulf(mu0, 3.0)
        elif k == 1:
            tmu = (0.0, 0.0, -2.0, 0.0)
        else:
            tmu = (0.0, 0.0, 0.0, 0.0)
        if strip:
            stim = _dmulf(_dneg(_dmul(fac, cc)), 3.0)
            tmu = _cpack(_cre(tmu), _dadd(_cim(tmu), stim))
        mk = (out[k, 0], out[k, 1], out[k, 2], out[k, 3])
        a = _csub(_cmulf(_cmul(w, mk), 3.0), tmu)
        a = _cmulf(a, float(2 * k + 1))
        b = _cmul_imf(prev, 3.0 * (k - 1))
        step = _csub(a, b)
        nxt = _cdivf(_cmul_imf(step, -1.0), float(3 * (k + 2)))
        prev = mk
        out[k + 1, 0] = nxt[0]
        out[k + 1, 1] = nxt[1]
        out[k + 1, 2] = nxt[2]
        out[k + 1, 3] = nxt[3]
        cn = _ddivf(
            _dsub(_dmul(_dmulf(y, float(2 * k + 1)), cc), _dmulf(cp, float(k - 1))),
            float(k + 2),
        )
        cp = cc
        cc = cn


@njit(cache=True)
def _log_seq_dw(v, n, out):
    la = _cdlog(_cshift_re(v, -1.0))
    lb = _cdlog(_cshift_re(v, 1.0))
    l0 = _caddf(_cadd(_cmul(_crsubf(v, 1.0), la), _cmul(_caddf(v, 1.0), lb)), -2.0)
    out[0, 0] = l0[0]
    out[0, 1] = l0[1]
    out[0, 2] = l0[2]
    out[0, 3] = l0[3]
    if n == 0:
        return
    lam0 = _cadd(
        _cwlogw(_cshift_re(v, -1.0), False), _cwlogw(_cshift_re(v, 1.0), False)
    )
    prev = (0.0, 0.0, 0.0, 0.0)
    for k in range(n):
        if k == 0:
            tl = _cmulf(lam0, 3.0)
        elif k == 1:
            tl = (-2.0, 0.0, 0.0, 0.0)
        else:
            tl = (0.0, 0.0, 0.0, 0.0)
        lk = (out[k, 0], out[k, 1], out[k, 2], out[k, 3])
        a = _csub(_cmulf(_cmul(v, lk), 3.0), tl)
        a = _cmulf(a, float(2 * k + 1))
        step = _csub(a, _cmulf(prev, float(3 * (k - 1))))
        nxt = _cdivf(step, float(3 * (k + 2)))
        prev = lk
        out[k + 1, 0] = nxt[0]
        out[k + 1, 1] = nxt[1]
        out[k + 1, 2] = nxt[2]
        out[k + 1, 3] = nxt[3]


@njit(cache=True)
def _beta_arrays_dw(region, x, y, p, bu, bv):
    # bu, bv: (p+1, 2) hi/lo arrays, pre-zeroed
    if region == 0:
        return
    two_pi = _dmulf((_PI_HI, _PI_LO), 2.0)
    cm_p = (1.0, 0.0)
    cm_c = _dmulf(y, -1.0)
    for j in range(p + 1):
        # bv[j] = 2 pi C_{j+1}^{(-1/2)}(y); cm_c tracks C_{j+1}
        t = _dmul(two_pi, cm_c)
        bv[j, 0] = t[0]
        bv[j, 1] = t[1]
        cn = _ddivf(
            _dsub(_dmul(_dmulf(y, float(2 * j + 1)), cm_c), _dmulf(cm_p, float(j - 1))),
            float(j + 2),
        )
        cm_p = cm_c
        cm_c = cn
    if region == 1:
        # C^{(-3/2)} recurrence; track C_{k+2}
        c0 = (1.0, 0.0)
        c1 = _dmulf(x, -3.0)
        # advance to C_2
        cprev = c0
        ccur = c1
        for k in range(1, p + 2):
            cn = _ddivf(
                _dsub(
                    _dmul(_dmulf(x, float(2 * k - 3)), ccur),
                    _dmulf(cprev, float(k - 4)),
                ),
                float(k + 1),
            )
            cprev = ccur
            ccur = cn
            idx = k - 1  # ccur is now C_{k+1}; entry k-1 wants C_{k+1}
            if idx <= p:
                b = ccur
                if idx == 0:
                    b = _dsub(b, _dmulf(x, 3.0))
                elif idx == 1:
                    b = _daddf(b, 1.0)
                bu[idx, 0] = b[0]
                bu[idx, 1] = b[1]
    else:
        t = _dmulf(x, -6.0)
        bu[0, 0] = t[0]
        bu[0, 1] = t[1]
        if p >= 1:
            bu[1, 0] = 2.0
            bu[1, 1] = 0.0


@njit(inline="always")
def _beta_dw(bu, bv, k, j):
    pr = _ddivf(_dmul((bu[k, 0], bu[k, 1]), (bv[j, 0], bv[j, 1])), 3.0)
    return 0.0, 0.0, pr[0], pr[1]


@njit(inline="always")
def _ldt(rh, rl, ih, il, k, j):
    return rh[k, j], rl[k, j], ih[k, j], il[k, j]


@njit(inline="always")
def _stt(rh, rl, ih, il, k, j, v):
    rh[k, j] = v[0]
    rl[k, j] = v[1]
    ih[k, j] = v[2]
    il[k, j] = v[3]


# ------------------------------------------ double-word table kernels


@njit(cache=True)
def _log_table_dw_core(p, z, wm, cm, sm, wp, cp_, sp, vm, vp, region):
    n = p + 1
    mm = np.empty((n + 1, 4))
    mp = np.empty((n + 1, 4))
    _modlog_dw(wm, cm, sm, n, mm)
    _modlog_dw(wp, cp_, sp, n, mp)
    lm = np.empty((n + 1, 4))
    lp = np.empty((n + 1, 4))
    _log_seq_dw(vm, n, lm)
    _log_seq_dw(vp, n, lp)

    bu = np.zeros((p + 1, 2))
    bv = np.zeros((p + 1, 2))
    x = _cre(z)
    y = _cim(z)
    _beta_arrays_dw(region, x, y, p, bu, bv)

    pi2 = _dmulf((_PI_HI, _PI_LO), 2.0)
    mu0m = _cadd(
        _cwlogw(_cshift_im(wm, -1.0), False), _cwlogw(_cshift_im(wm, 1.0), True)
    )
    mu0p = _cadd(
        _cwlogw(_cshift_im(wp, -1.0), False), _cwlogw(_cshift_im(wp, 1.0), True)
    )
    facm = _dmul(pi2, _cre(wm))
    facp = _dmul(pi2, _cre(wp))
    ym = _cim(wm)
    yp = _cim(wp)

    f1row = np.empty((p + 1, 4))
    cpm = (1.0, 0.0)
    ccm = _dmulf(ym, -1.0)
    cpp = (1.0, 0.0)
    ccp = _dmulf(yp, -1.0)
    zero4 = (0.0, 0.0, 0.0, 0.0)
    for j in range(p + 1):
        if j >= 1:
            low = _cadd(_ld4(mm, j - 1), _ld4(mp, j - 1))
        else:
            low = zero4
        diff = _csub(_cadd(_ld4(mm, j + 1), _ld4(mp, j + 1)), low)
        v = _cdivf(_cmul_imf(diff, 1.0), float(2 * j + 1))
        if sm:
            mum = _cpack((0.0, 0.0), _dneg(_dmul(facm, ccm)))
        else:
            mum = zero4
        if sp:
            mup = _cpack((0.0, 0.0), _dneg(_dmul(facp, ccp)))
        else:
            mup = zero4
        if j == 0:
            v = _cadd(_cadd(v, _cadd(mu0m, mum)), _cadd(mu0p, mup))
        elif j == 1:
            third = (0.0, 0.0, _M23_HI, _M23_LO)
            v = _cadd(_cadd(v, _cadd(third, mum)), _cadd(third, mup))
        else:
            v = _cadd(_cadd(v, mum), mup)
        _st4(f1row, j, v)
        ccm, cpm = _cadvance(ym, ccm, cpm, j)
        ccp, cpp = _cadvance(yp, ccp, cpp, j)

    lam0m = _cadd(
        _cwlogw(_cshift_re(vm, -1.0), False), _cwlogw(_cshift_re(vm, 1.0), False)
    )
    lam0p = _cadd(
        _cwlogw(_cshift_re(vp, -1.0), False), _cwlogw(_cshift_re(vp, 1.0), False)
    )
    f2col = np.empty((p + 1, 4))
    for k in range(p + 1):
        if k >= 1:
            low = _cadd(_ld4(lm, k - 1), _ld4(lp, k - 1))
        else:
            low = zero4
        v = _cdivf(_csub(_cadd(_ld4(lm, k + 1), _ld4(lp, k + 1)), low), float(2 * k + 1))
        if k == 0:
            v = _cadd(_cadd(v, lam0m), lam0p)
        elif k == 1:
            lam1 = (_M23_HI, _M23_LO, 0.0, 0.0)
            v = _cadd(_cadd(v, lam1), lam1)
        v = _cadd(v, _beta_dw(bu, bv, k, 0))
        _st4(f2col, k, v)

    rh = np.zeros((p + 1, p + 1))
    rl = np.zeros((p + 1, p + 1))
    ih = np.zeros((p + 1, p + 1))
    il = np.zeros((p + 1, p + 1))

    m0m = _ld4(mm, 0)
    m1m = _ld4(mm, 1)
    m0p = _ld4(mp, 0)
    m1p = _ld4(mp, 1)
    l00 = _cadd(_cmul(_crsubf(z, 1.0), m0m), _cmul_imf(m1m, 1.0))
    l00 = _cadd(l00, _cmul(_caddf(z, 1.0), m0p))
    l00 = _csub(l00, _cmul_imf(m1p, 1.0))
    l00 = _caddf(l00, -4.0)
    _stt(rh, rl, ih, il, 0, 0, l00)

    for k in range(p):
        prev = _ldt(rh, rl, ih, il, k - 1, 0) if k >= 1 else zero4
        if k == 0:
            fa = _ld4(f1row, 0)
        elif k == 1:
            fa = (_M43_HI, _M43_LO, 0.0, 0.0)
        else:
            fa = zero4
        t = _csub(_cmul(z, _ldt(rh, rl, ih, il, k, 0)), _cmulf(fa, 2.0))
        t = _cadd(t, _ld4(f2col, k))
        step = _csub(_cmulf(t, float(2 * k + 1)), _cmulf(prev, float(k - 2)))
        _stt(rh, rl, ih, il, k + 1, 0, _cdivf(step, float(k + 3)))

    for j in range(p):
        prev = _ldt(rh, rl, ih, il, 0, j - 1) if j >= 1 else zero4
        if j == 0:
            fb = _ld4(f2col, 0)
        else:
            fb = _beta_dw(bu, bv, 0, j)
            if j == 1:
                fb = _cpack(_cre(fb), _dadd(_cim(fb), (_M43_HI, _M43_LO)))
        t = _csub(_cmul(z, _ldt(rh, rl, ih, il, 0, j)), _cmulf(fb, 2.0))
        t = _cadd(t, _ld4(f1row, j))
        step = _csub(_cmulf(t, float(2 * j + 1)), _cmul_imf(prev, float(j - 2)))
        _stt(rh, rl, ih, il, 0, j + 1, _cdivf(_cmul_imf(step, -1.0), float(j + 3)))

    for l in range(p // 2):
        for r in range(l + 1, p - l):
            cl = _cdivf(
                _csub(
                    _ldt(rh, rl, ih, il, r + 1, l), _ldt(rh, rl, ih, il, r - 1, l)
                ),
                float(2 * r + 1),
            )
            prev = _ldt(rh, rl, ih, il, r, l - 1) if l >= 1 else zero4
            if l == 0:
                fv = _ld4(f2col, r)
                if r == 1:
                    fv = _csub(fv, (_M43_HI, _M43_LO, 0.0, 0.0))
            else:
                fv = _beta_dw(bu, bv, r, l)
            val = _cadd(prev, _cmul_imf(_csub(fv, cl), float(2 * l + 1)))
            _stt(rh, rl, ih, il, r, l + 1, val)
        for c in range(l + 2, p - l):
            prev = _ldt(rh, rl, ih, il, l - 1, c) if l >= 1 else zero4
            cross = _cdivf(
                _cmul_imf(
                    _csub(
                        _ldt(rh, rl, ih, il, l, c + 1), _ldt(rh, rl, ih, il, l, c - 1)
                    ),
                    float(2 * l + 1),
                ),
                float(2 * c + 1),
            )
            if l == 0:
                fv = _csub(_beta_dw(bu, bv, 0, c), _ld4(f1row, c))
            else:
                fv = _beta_dw(bu, bv, l, c)
            val = _cadd(_cadd(prev, _cmulf(fv, float(2 * l + 1))), cross)
            _stt(rh, rl, ih, il, l + 1, c, val)
    return rh, rl, ih, il


@njit(inline="always")
def _ld4(arr, i):
    return arr[i, 0], arr[i, 1], arr[i, 2], arr[i, 3]


@njit(inline="always")
def _st4(arr, i, v):
    arr[i, 0] = v[0]
    arr[i, 1] = v[1]
    arr[i, 2] = v[2]
    arr[i, 3] = v[3]


@njit(inline="always")
def _cadvance(y, cc, cp, k):
    cn = _ddivf(
        _dsub(_dmul(_dmulf(y, float(2 * k + 1)), cc), _dmulf(cp, float(k - 1))),
        float(k + 2),
    )
    return cn, cc


@njit(cache=True)
def _stieltjes_table_dw_core(
    p, z, w1, c1, s1, w2, c2, s2, w3, c3, s3, w4, c4, s4
):
    a1 = np.empty((p + 1, 4))
    a2 = np.empty((p + 1, 4))
    a3 = np.empty((p + 1, 4))
    a4 = np.empty((p + 1, 4))
    _modlog_dw(w1, c1, s1, p, a1)
    _modlog_dw(w2, c2, s2, p, a2)
    _modlog_dw(w3, c3, s3, p, a3)
    _modlog_dw(w4, c4, s4, p, a4)

    rh = np.zeros((p + 1, p + 1))
    rl = np.zeros((p + 1, p + 1))
    ih = np.zeros((p + 1, p + 1))
    il = np.zeros((p + 1, p + 1))
    zero4 = (0.0, 0.0, 0.0, 0.0)

    for k in range(p + 1):
        v = _cmul_imf(_csub(_ld4(a1, k), _ld4(a2, k)), 1.0)
        if k % 2 == 1:
            v = _cneg(v)
        _stt(rh, rl, ih, il, k, 0, v)
    for j in range(p + 1):
        _stt(rh, rl, ih, il, 0, j, _csub(_ld4(a3, j), _ld4(a4, j)))

    for l in range(p // 2):
        for r in range(l + 1, p - l):
            bs = _cdivf(
                _cadd(
                    _cmulf(_ldt(rh, rl, ih, il, r - 1, l), float(r)),
                    _cmulf(_ldt(rh, rl, ih, il, r + 1, l), float(r + 1)),
                ),
                float(2 * r + 1),
            )
            step = _cmul_imf(
                _csub(_cmul(z, _ldt(rh, rl, ih, il, r, l)), bs), -float(2 * l + 1)
            )
            if l >= 1:
                step = _csub(step, _cmulf(_ldt(rh, rl, ih, il, r, l - 1), float(l)))
            _stt(rh, rl, ih, il, r, l + 1, _cdivf(step, float(l + 1)))
        for c in range(l + 2, p - l):
            cross = _cdivf(
                _cmul_imf(
                    _cadd(
                        _cmulf(_ldt(rh, rl, ih, il, l, c - 1), float(c)),
                        _cmulf(_ldt(rh, rl, ih, il, l, c + 1), float(c + 1)),
                    ),
                    1.0,
                ),
                float(2 * c + 1),
            )
            step = _cmulf(
                _csub(_cmul(z, _ldt(rh, rl, ih, il, l, c)), cross), float(2 * l + 1)
            )
            if l >= 1:
                step = _csub(step, _cmulf(_ldt(rh, rl, ih, il, l - 1, c), float(l)))
            _stt(rh, rl, ih, il, l + 1, c, _cdivf(step, float(l + 1)))
    return rh, rl, ih, il


# ------------------------------------------------------------- wrappers


def _modlog_args_native(w):
    return (
        w,
        modlog_seq(w, 0)[0],
        _mu_base(0, w),
        in_mu_strip(w),
        -2.0 * math.pi * w.real,
        w.imag,
    )


def log_table_native(z, p):
    z = complex(z)
    wm = shift_re(z, -1.0)
    wp = shift_re(z, 1.0)
    vm = shift_im(z, -1.0)
    vp = shift_im(z, 1.0)
    return _log_table_native_core(
        p,
        z,
        *_modlog_args_native(wm),
        *_modlog_args_native(wp),
        vm,
        log_seq(vm, 0)[0],
        lambda_coeff(0, vm),
        vp,
        log_seq(vp, 0)[0],
        lambda_coeff(0, vp),
        _BETA_CODE[classify_beta_region(z)],
        z.real,
        z.imag,
    )


def stieltjes_table_native(z, p):
    z = complex(z)
    rot = rotate_minus_i(z)
    args = []
    for w in (
        shift_re(rot, -1.0),
        shift_re(rot, 1.0),
        shift_re(z, 1.0),
        shift_re(z, -1.0),
    ):
        args.extend(_modlog_args_native(w))
    return _stieltjes_table_native_core(p, z, *args)


def _c4(w):
    return (w.re.hi, w.re.lo, w.im.hi, w.im.lo)


def _mreg(w):
    return _REGION_CONSTANT[classify_m_region(w)]


def log_table_dw(z, p):
    zz = cdw(z)
    wm = shift_re(zz, -1.0)
    wp = shift_re(zz, 1.0)
    return _log_table_dw_core(
        p,
        _c4(zz),
        _c4(wm),
        _mreg(wm),
        in_mu_strip(wm),
        _c4(wp),
        _mreg(wp),
        in_mu_strip(wp),
        _c4(shift_im(zz, -1.0)),
        _c4(shift_im(zz, 1.0)),
        _BETA_CODE[classify_beta_region(zz)],
    )


def stieltjes_table_dw(z, p):
    zz = cdw(z)
    rot = rotate_minus_i(zz)
    args = []
    for w in (
        shift_re(rot, -1.0),
        shift_re(rot, 1.0),
        shift_re(zz, 1.0),
        shift_re(zz, -1.0),
    ):
        args.extend((_c4(w), _mreg(w), in_mu_strip(w)))
    return _stieltjes_table_dw_core(p, _c4(zz), *args)
