import math
from fractions import Fraction

import numpy as np
import pytest

from potrec.doubledouble import DW, dw
from potrec.orthopoly import legendre_seq, ultra_mhalf_explicit, ultra_seq


def frac_legendre(x, n):
    # exact rational forward recurrence; x is taken at its binary value
    xf = Fraction(x)
    seq = [Fraction(1)]
    if n >= 1:
        seq.append(xf)
    for k in range(1, n):
        seq.append(((2 * k + 1) * xf * seq[k] - k * seq[k - 1]) / (k + 1))
    return seq


def frac_ultra(twolam, x, n):
    xf = Fraction(x)
    seq = [Fraction(1)]
    if n >= 1:
        seq.append(twolam * xf)
    for k in range(1, n):
        seq.append(
            ((2 * k + twolam) * xf * seq[k] - (k + twolam - 1) * seq[k - 1])
            / (k + 1)
        )
    return seq


def seq_scaled_ulps(got, want):
    # worst entry error in ulps of the sequence's largest magnitude;
    # per-entry relative error is meaningless next to a polynomial root
    scale = max(max(abs(v) for v in want), 1e-300)
    return max(
        abs(g - w) / math.ulp(scale) for g, w in zip(got, want)
    )


def frac_to_mpf(q, mp):
    return mp.mpf(q.numerator) / mp.mpf(q.denominator)


# ---------------------------------------------------------------- legendre


def test_legendre_low_degrees_exact():
    x = 0.5
    p = legendre_seq(x, 3)
    assert p[0] == 1.0
    assert p[1] == 0.5
    assert p[2] == (3 * x * x - 1) / 2
    assert p[3] == (5 * x ** 3 - 3 * x) / 2


@pytest.mark.parametrize("x", [0.37, -0.82, 0.999, -1.0, 0.0])
def test_legendre_matches_exact_rational(x):
    n = 40
    got = legendre_seq(x, n)
    want = [float(v) for v in frac_legendre(x, n)]
    assert seq_scaled_ulps(got, want) <= 100.0


def test_legendre_degree_ten_near_point_three():
    # P_10(3/10) = 643779454761/2560000000000; the float argument sits a
    # hair below 3/10 but the value still pins sign and leading digits
    val = legendre_seq(0.3, 10)[10]
    assert abs(val - 0.2514763495160156) < 1e-12


def test_legendre_endpoint_values():
    p = legendre_seq(1.0, 12)
    assert all(v == 1.0 for v in p)
    q = legendre_seq(-1.0, 12)
    assert all(q[k] == (-1.0) ** k for k in range(13))


def test_legendre_parity_exact():
    for x in [0.37, 0.82, 0.05]:
        a = legendre_seq(x, 25)
        b = legendre_seq(-x, 25)
        for k in range(26):
            assert b[k] == (-1.0) ** k * a[k]


def test_legendre_rejects_negative_degree():
    with pytest.raises(ValueError):
        legendre_seq(0.5, -1)


# ------------------------------------------------------------ ultraspherical


@pytest.mark.parametrize("lam", [1.5, -0.5, -1.5])
def test_ultra_degree_two_closed_form(lam):
    # C_2 = 2 lam (lam+1) x^2 - lam
    for x in [0.3, -0.7, 1.0]:
        c = ultra_seq(lam, x, 2)
        assert c[0] == 1.0
        assert c[1] == 2 * lam * x
        assert abs(c[2] - (2 * lam * (lam + 1) * x * x - lam)) < 1e-15


@pytest.mark.parametrize("lam,twolam", [(1.5, 3), (-0.5, -1), (-1.5, -3)])
@pytest.mark.parametrize("x", [0.37, -0.82, 0.0])
def test_ultra_matches_exact_rational(lam, twolam, x):
    n = 40
    got = ultra_seq(lam, x, n)
    want = [float(v) for v in frac_ultra(twolam, x, n)]
    assert seq_scaled_ulps(got, want) <= 100.0


def test_ultra_mthreehalf_at_one():
    c = ultra_seq(-1.5, 1.0, 8)
    assert c[2] == 3.0
    assert c[3] == -1.0
    assert all(c[k] == 0.0 for k in range(4, 9))


def test_ultra_parity_exact():
    for lam in [1.5, -0.5, -1.5]:
        a = ultra_seq(lam, 0.61, 25)
        b = ultra_seq(lam, -0.61, 25)
        for k in range(26):
            assert b[k] == (-1.0) ** k * a[k]


def test_ultra_rejects_unsupported_order():
    with pytest.raises(ValueError):
        ultra_seq(0.5, 0.3, 5)
    with pytest.raises(ValueError):
        ultra_seq(-1.5, 0.3, -2)


def test_explicit_mhalf_agrees_with_recurrence():
    # both routes to C^(-1/2), required to track each other to 10 ulp of
    # the sequence scale out to degree 50
    for i in range(81):
        x = -1.0 + i * 0.025
        a = ultra_seq(-0.5, x, 50)
        b = ultra_mhalf_explicit(x, 50)
        assert seq_scaled_ulps(a, b) <= 10.0


def test_mhalf_moments():
    # integral over [-1,1] of C_k^(-1/2) is 2 for k=0, 2/3 for k=2, else 0
    nodes, weights = np.polynomial.legendre.leggauss(40)
    want = {0: 2.0, 2: 2.0 / 3.0}
    c = ultra_seq(-0.5, nodes, 12)
    for k in range(13):
        moment = float(np.dot(weights, c[k]))
        assert abs(moment - want.get(k, 0.0)) < 1e-14


def test_threehalf_is_legendre_derivative():
    # C_k^(3/2) = P'_{k+1}, with the derivative taken from
    # (1-x^2) P'_n = n (P_{n-1} - x P_n)
    for x in [0.37, -0.82]:
        p = legendre_seq(x, 32)
        c = ultra_seq(1.5, x, 30)
        for k in range(31):
            n = k + 1
            deriv = n * (p[n - 1] - x * p[n]) / (1 - x * x)
            assert abs(c[k] - deriv) <= 1e-12 * max(1.0, abs(deriv))


# ------------------------------------------------------------ generic inputs


def test_array_input_matches_scalars_bitwise():
    xs = np.array([0.37, -0.82, 1.0, 0.0])
    pa = legendre_seq(xs, 20)
    ca = ultra_seq(-1.5, xs, 20)
    for i, x in enumerate(xs):
        ps = legendre_seq(float(x), 20)
        cs = ultra_seq(-1.5, float(x), 20)
        for k in range(21):
            assert pa[k][i] == ps[k]
            assert ca[k][i] == cs[k]


def test_doubleword_input_beats_double_precision():
    import mpmath as mp

    mp.mp.dps = 60
    x = 0.37
    n = 30
    exact_p = frac_legendre(x, n)
    exact_c = frac_ultra(-3, x, n)
    p = legendre_seq(dw(x), n)
    c = ultra_seq(-1.5, dw(x), n)
    for k in range(n + 1):
        for got, want in ((p[k], exact_p[k]), (c[k], exact_c[k])):
            assert isinstance(got, DW)
            err = abs(mp.mpf(got.hi) + mp.mpf(got.lo) - frac_to_mpf(want, mp))
            assert err <= 1e-21 * max(1.0, abs(float(want)))


def test_explicit_mhalf_accepts_doubleword():
    import mpmath as mp

    mp.mp.dps = 60
    x = 0.37
    b = ultra_mhalf_explicit(dw(x), 12)
    exact = frac_ultra(-1, x, 12)
    for k in range(13):
        err = abs(mp.mpf(b[k].hi) + mp.mpf(b[k].lo) - frac_to_mpf(exact[k], mp))
        assert err <= 1e-21
