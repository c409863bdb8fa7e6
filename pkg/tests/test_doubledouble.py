"""Double-word arithmetic: frozen values, error-free transforms, error bounds.

Frozen (hi, lo) pairs were produced with mpmath at 50 significant digits;
lo is the rounding residual of hi against the exact value.
"""

import math
import random

import pytest

from potrec.doubledouble import (
    DW,
    DW_LN2,
    DW_PI,
    HAVE_FMA,
    dw,
    dw_add,
    dw_arith,
    dw_atan2,
    dw_div,
    dw_elementary,
    dw_exp,
    dw_log,
    dw_mul,
    dw_sincos,
    dw_sqrt,
    exact_two_sum,
    scalar_atan2,
    scalar_log,
    scalar_signbit,
    split,
    two_prod,
    two_prod_split,
)

mpmath = pytest.importorskip("mpmath")
mpmath.mp.dps = 50


def mpval(a: DW):
    return mpmath.mpf(a.hi) + mpmath.mpf(a.lo)


def rel_err(a: DW, exact) -> float:
    if exact == 0:
        return abs(float(mpval(a)))
    return abs(float((mpval(a) - exact) / exact))


def test_two_sum_residual_capture():
    assert exact_two_sum(1.0, 1e-30) == (1.0, 1e-30)


def test_two_sum_exact_cancellation():
    assert exact_two_sum(1.0, -1.0) == (0.0, 0.0)


def test_two_sum_large_small_exact():
    a, b = 2.0 ** 53, 1.0
    s, e = exact_two_sum(a, b)
    # integer arithmetic reproduces the exact sum
    assert int(s) + int(e) == 2 ** 53 + 1
    assert s == 2.0 ** 53 and e == 1.0


def test_split_reassembles():
    for x in [1.0, -3.7, 1e300 / 1e10, 6.02214076e23, 1 / 3]:
        hi, lo = split(x)
        assert hi + lo == x


def test_two_prod_exact():
    rng = random.Random(42)
    for _ in range(1000):
        a = rng.uniform(-1e10, 1e10)
        b = rng.uniform(-1e10, 1e10)
        p, e = two_prod_split(a, b)
        exact = mpmath.mpf(a) * mpmath.mpf(b)
        assert mpmath.mpf(p) + mpmath.mpf(e) == exact


@pytest.mark.skipif(not HAVE_FMA, reason="platform math.fma not available")
def test_two_prod_fma_matches_split():
    from potrec.doubledouble import two_prod_fma

    rng = random.Random(7)
    for _ in range(1000):
        a = rng.uniform(-1e8, 1e8)
        b = rng.uniform(-1e8, 1e8)
        assert two_prod_fma(a, b) == two_prod_split(a, b)


def test_add_keeps_tiny_term():
    r = dw_add(DW(1.0), DW(2.0 ** -60))
    assert r.hi == 1.0 and r.lo == 2.0 ** -60


def test_mul_identity():
    x = DW(0.1, 0.1 * 2 ** -55)
    r = dw_mul(x, DW(1.0))
    assert r.hi == x.hi and r.lo == x.lo


def test_div_one_third_frozen():
    r = dw_div(DW(1.0), DW(3.0))
    assert r.hi == 0.3333333333333333
    assert r.lo == pytest.approx(1.850371707708594e-17, rel=1e-10)
    assert rel_err(r, mpmath.mpf(1) / 3) < 2.0 ** -85


def test_arith_random_error_bounds():
    rng = random.Random(123)
    for _ in range(500):
        a = DW(rng.uniform(-10, 10), rng.uniform(-1e-16, 1e-16))
        b = DW(rng.uniform(-10, 10), rng.uniform(-1e-16, 1e-16))
        ea, eb = mpval(a), mpval(b)
        assert rel_err(dw_add(a, b), ea + eb) < 2.0 ** -84 or abs(ea + eb) < 1e-14
        assert rel_err(dw_mul(a, b), ea * eb) < 2.0 ** -84
        if abs(eb) > 1e-3:
            assert rel_err(dw_div(a, b), ea / eb) < 2.0 ** -82


def test_round_trip_add_sub():
    rng = random.Random(5)
    for _ in range(200):
        a = DW(rng.uniform(-100, 100), rng.uniform(-1e-15, 1e-15))
        b = DW(rng.uniform(-100, 100), rng.uniform(-1e-15, 1e-15))
        r = dw_arith(dw_arith(a, b, "add"), b, "sub")
        assert rel_err(r, mpval(a)) < 2.0 ** -80


def test_native_embedding_identity():
    for x in [0.0, -0.0, 1.5, -math.pi, 1e-300]:
        assert float(dw(x)) == x


def test_sqrt_frozen():
    r = dw_sqrt(DW(2.0))
    assert (r.hi, r.lo) == (1.4142135623730951, pytest.approx(-9.667293313452913e-17))
    assert dw_sqrt(DW(4.0)).hi == 2.0 and dw_sqrt(DW(4.0)).lo == 0.0
    r = dw_sqrt(DW(0.5))
    assert (r.hi, r.lo) == (0.7071067811865476, pytest.approx(-4.833646656726457e-17))


def test_exp_frozen():
    r = dw_exp(DW(3.25))
    assert r.hi == 25.790339917193062
    assert r.lo == pytest.approx(-2.0220949927714329e-16, abs=3e-30)
    r = dw_exp(DW(-0.1))
    assert r.hi == 0.9048374180359595
    assert r.lo == pytest.approx(5.055984668733208e-17, abs=2e-31)
    assert dw_exp(DW(0.0)).hi == 1.0 and dw_exp(DW(0.0)).lo == 0.0
    # double-word argument: exp(pi as hi+lo)
    r = dw_exp(DW_PI)
    assert r.hi == 23.14069263277927
    assert r.lo == pytest.approx(-1.3488747091995788e-15, abs=3e-29)


def test_log_frozen():
    assert dw_log(DW(1.0)).hi == 0.0
    r = dw_log(DW(3.0))
    assert r.hi == 1.0986122886681098
    assert r.lo == pytest.approx(-9.07129723500153e-17, abs=2e-31)
    r = dw_elementary(DW_PI, "log")
    assert r.hi == 1.1447298858494002
    assert r.lo == pytest.approx(1.0265951162707828e-17, abs=2e-31)
    with pytest.raises(ValueError):
        dw_log(DW(-1.0))


def test_exp_log_newton_residual():
    rng = random.Random(99)
    for _ in range(400):
        x = DW(math.exp(rng.uniform(-10 * math.log(2), 10 * math.log(2))))
        y = dw_exp(dw_log(x))
        assert rel_err(y, mpval(x)) < 2.0 ** -80


def test_exp_random_vs_mpmath():
    rng = random.Random(17)
    for _ in range(200):
        a = DW(rng.uniform(-30, 30))
        assert rel_err(dw_exp(a), mpmath.exp(mpval(a))) < 2.0 ** -85


def test_log_random_vs_mpmath():
    rng = random.Random(18)
    for _ in range(200):
        a = DW(math.exp(rng.uniform(-20, 20)))
        r = dw_log(a)
        exact = mpmath.log(mpval(a))
        if abs(exact) > 1e-3:
            assert rel_err(r, exact) < 2.0 ** -80
        else:
            assert abs(float(mpval(r) - exact)) < 2.0 ** -100


def test_sincos_frozen():
    s, c = dw_sincos(DW(1.0))
    assert s.hi == 0.8414709848078965
    assert s.lo == pytest.approx(1.776845092935536e-18, abs=2e-32)
    assert c.hi == 0.5403023058681398
    assert c.lo == pytest.approx(-4.760954612604417e-17, abs=2e-31)
    s, c = dw_sincos(DW(2.9))  # lands in the second quadrant reduction
    assert s.hi == 0.23924932921398243
    assert s.lo == pytest.approx(-1.1267666643498124e-17, abs=2e-31)
    assert c.hi == -0.9709581651495905
    assert c.lo == pytest.approx(4.579633153232696e-17, abs=2e-31)
    s, c = dw_sincos(DW(-2.3))
    assert s.hi == -0.7457052121767203
    assert c.hi == -0.6662760212798241


def test_atan2_frozen():
    r = dw_atan2(DW(3.0), DW(4.0))
    assert r.hi == 0.6435011087932844
    assert r.lo == pytest.approx(1.5834785051444286e-17, abs=2e-31)
    r = dw_atan2(DW(-0.3), DW(0.7))
    assert r.hi == -0.40489178628508343
    assert r.lo == pytest.approx(-2.7690323179934683e-19, abs=2e-31)
    r = dw_atan2(DW(0.7), DW(-0.2))  # second quadrant
    assert r.hi == 1.849095985800008
    assert r.lo == pytest.approx(1.4952903628636544e-19, abs=2e-31)
    r = dw_atan2(DW(-2.5), DW(-1.5))  # third quadrant
    assert r.hi == -2.1112158270654806
    assert r.lo == pytest.approx(-1.6441648116420377e-16, abs=2e-30)
    # double-word components
    r = dw_atan2(dw_div(DW(1.0), DW(3.0)), dw_sqrt(DW(2.0)))
    assert r.hi == 0.23147736397017837
    assert r.lo == pytest.approx(-1.0871697407471706e-17, abs=2e-31)


def test_atan2_axes_and_signed_zero():
    assert float(dw_atan2(DW(0.0), DW(2.0))) == 0.0
    assert float(dw_atan2(DW(-0.0), DW(2.0))) == 0.0
    assert scalar_signbit(dw_atan2(DW(-0.0), DW(2.0)))
    # on the negative real axis the zero sign picks the branch side
    up = dw_atan2(DW(0.0), DW(-2.0))
    dn = dw_atan2(DW(-0.0), DW(-2.0))
    assert up.hi == DW_PI.hi and up.lo == pytest.approx(DW_PI.lo)
    assert dn.hi == -DW_PI.hi and dn.lo == pytest.approx(-DW_PI.lo)
    half = dw_atan2(DW(3.0), DW(0.0))
    assert half.hi == math.pi / 2
    assert float(dw_atan2(DW(0.0), DW(0.0))) == 0.0
    assert dw_atan2(DW(0.0), DW(-0.0)).hi == math.pi


def test_atan2_random_vs_mpmath():
    rng = random.Random(31)
    for _ in range(300):
        y = DW(rng.uniform(-5, 5), rng.uniform(-1e-16, 1e-16))
        x = DW(rng.uniform(-5, 5), rng.uniform(-1e-16, 1e-16))
        if abs(float(x)) + abs(float(y)) < 1e-3:
            continue
        r = dw_atan2(y, x)
        exact = mpmath.atan2(mpval(y), mpval(x))
        assert abs(float(mpval(r) - exact)) < 2.0 ** -80 * max(1.0, abs(float(exact)))


def test_constants_vs_mpmath():
    assert abs(float(mpval(DW_PI) - mpmath.pi)) < 2.0 ** -104
    assert abs(float(mpval(DW_LN2) - mpmath.log(2))) < 2.0 ** -104


def test_comparisons_and_normalization():
    a = DW(1.0, 2.0 ** -60)
    assert a > 1.0 and a >= 1.0 and not (a < 1.0)
    assert DW(2.0) == 2.0
    assert abs(DW(-3.0, 1e-20)).hi == 3.0
    # public ops keep |lo| <= ulp(hi)/2
    rng = random.Random(77)
    for _ in range(200):
        a = DW(rng.uniform(-1e5, 1e5), rng.uniform(-1e-12, 1e-12))
        b = DW(rng.uniform(-1e5, 1e5), rng.uniform(-1e-12, 1e-12))
        for r in (dw_add(a, b), dw_mul(a, b), dw_div(a, b)):
            if r.hi != 0.0:
                assert abs(r.lo) <= math.ulp(r.hi) / 2 + 1e-300


def test_scalar_dispatch():
    assert scalar_log(math.e) == pytest.approx(1.0)
    assert isinstance(scalar_log(DW(3.0)), DW)
    assert scalar_atan2(1.0, 1.0) == pytest.approx(math.pi / 4)
    assert isinstance(scalar_atan2(DW(1.0), 1.0), DW)
    assert scalar_signbit(-0.0) and not scalar_signbit(0.0)
    assert scalar_signbit(DW(-0.0)) and not scalar_signbit(DW(0.0))


def test_operator_mixing():
    a = dw(1.0) / 3
    b = 1 - a * 3
    assert abs(float(b)) < 1e-31
    assert float(2.0 + dw(0.5)) == 2.5
    assert float(1.0 - dw(0.25)) == 0.75
    assert float(6 / dw(2.0)) == 3.0
