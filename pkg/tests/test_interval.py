import cmath
import math

import mpmath as mp
import pytest

from potrec.complexbranch import CDW, cdw, clog
from potrec.errors import SingularPointError
from potrec.interval import (
    lambda_coeff,
    log_seq,
    modlog_direct,
    modlog_seq,
    mu_coeff,
    stieltjes_seq,
    ultra_stieltjes_mhalf_seq,
)

mp.mp.dps = 40

# reference values computed with 50-digit adaptive quadrature against the
# defining integrals (see the frozen-value notes); strings keep ~22 digits
FROZEN_S_2P1J = [
    ("0.8047189562170501873004", "-0.4636476090008061162143"),
    ("0.07308552143490649081502", "-0.1225762617845620451281"),
    ("0.0007614788730374464870561", "-0.02627669870092334105475"),
    ("-0.002390920211607270495245", "-0.004602356358307362618641"),
    ("-0.0008852062683656470160287", "-0.0005848335986959867408631"),
    ("-0.0002213059191777367279534", "-0.00001688715171782680104573"),
    ("-0.00004282336853097968722151", "0.00001971425745544001230359"),
]
FROZEN_L_2P1J = [
    ("1.570951658211901987533", "0.9845724560095284578889"),
    ("-0.2679858257813375802711", "0.1457903034332942583865"),
    ("-0.01509528832930275226205", "0.0235947810852509365019"),
    ("-0.0002352407344861562147264", "0.003670266443175336330555"),
    ("0.0002410682547143926408102", "0.0005094965785099484241773"),
    ("0.00007658026362133339352792", "0.0000549588960137660684697"),
    ("0.00001656356066576247731526", "0.000001927471156818162633058"),
]
FROZEN_L_03P04J = [
    ("-0.8213243121208708434748", "2.432954899638859803662"),
    ("-0.3009228755805180409234", "0.9060700834610049521834"),
    ("0.2139617706081092735163", "0.1514518748060942692856"),
    ("0.07974044547012335315665", "-0.06274218250891125030558"),
    ("-0.0169580989408016009096", "-0.04227781711291135507488"),
    ("-0.02213467699067558394272", "0.002171214189164554823338"),
    ("-0.002109340105478152085037", "0.01126909950241655455265"),
]
FROZEN_SM_2P1J = [
    ("0.8047189562170501873004", "-0.4636476090008061162143"),
    ("-0.07308552143490649081502", "0.1225762617845620451281"),
    ("0.2679858257813375802711", "-0.1457903034332942583865"),
    ("0.01509528832930275226205", "-0.0235947810852509365019"),
    ("0.0002352407344861562147264", "-0.003670266443175336330555"),
    ("-0.0002410682547143926408102", "-0.0005094965785099484241773"),
    ("-0.00007658026362133339352792", "-0.0000549588960137660684697"),
]
FROZEN_SM_3 = [
    ("0.6931471805599453094172", "0"),
    ("-0.0794415416798359282517", "0"),
    ("0.2274112777602187623311", "0"),
    ("0.01556716661398962032655", "0"),
]
FROZEN_M_2 = [
    ("1.464028348437324839457784", "0"),
    ("0", "-0.3182380450040305810712812"),
    ("0.03019057665860550452410435", "0"),
    ("0", "0.004083069604493883957559409"),
    ("-0.0006436357708593267284753951", "0"),
]
FROZEN_M_STRIP = [
    ("-0.5975549330810923947133636", "1.226577406317437461150926"),
    ("-0.2563745890308430371004776", "-2.037146621229798501050367"),
    ("0.1789029431889570749439283", "-0.7393312808843610462484780"),
    ("0.05723005498753685840232568", "0.3438517644689124150196503"),
    ("-0.01305654276276000690050087", "0.4802112919219634283447422"),
]
FROZEN_M_BELOW = [
    ("1.010690067904089123967567", "-2.620083984316888029223783"),
    ("0.3921277437571816595276931", "-0.1074203510722594385374484"),
    ("-0.04291863814944591491663192", "0.02576349931996836822517818"),
    ("0.006051919788261336761126392", "-0.006433029212144962764432548"),
    ("-0.0008386101950847944966260719", "0.001616134715491314914958513"),
]


def as_mpc(v):
    if isinstance(v, CDW):
        return mp.mpc(mp.mpf(v.re.hi) + mp.mpf(v.re.lo),
                      mp.mpf(v.im.hi) + mp.mpf(v.im.lo))
    return mp.mpc(v)


def check_against(seq, frozen, tol):
    for got, (re_s, im_s) in zip(seq, frozen):
        diff = as_mpc(got) - mp.mpc(mp.mpf(re_s), mp.mpf(im_s))
        assert abs(diff) <= tol, (got, re_s, im_s)


# ------------------------------------------------------------- frozen values


def test_stieltjes_frozen():
    check_against(stieltjes_seq(2 + 1j, 6), FROZEN_S_2P1J, 5e-12)


def test_stieltjes_frozen_doubleword():
    check_against(stieltjes_seq(cdw(2 + 1j), 6), FROZEN_S_2P1J, 1e-20)


def test_log_frozen_outside():
    check_against(log_seq(2 + 1j, 6), FROZEN_L_2P1J, 5e-12)
    check_against(log_seq(cdw(2 + 1j), 6), FROZEN_L_2P1J, 1e-20)


def test_log_frozen_inside():
    check_against(log_seq(0.3 + 0.4j, 6), FROZEN_L_03P04J, 1e-13)


def test_mhalf_stieltjes_frozen():
    check_against(ultra_stieltjes_mhalf_seq(2 + 1j, 6), FROZEN_SM_2P1J, 5e-12)
    check_against(ultra_stieltjes_mhalf_seq(3 + 0j, 3), FROZEN_SM_3, 1e-12)


def test_modlog_frozen():
    check_against(modlog_seq(2 + 0j, 4), FROZEN_M_2, 1e-12)
    check_against(modlog_seq(-0.5 + 0.3j, 4), FROZEN_M_STRIP, 1e-13)
    check_against(modlog_seq(0.4 - 1.7j, 4), FROZEN_M_BELOW, 1e-12)


def test_modlog_frozen_doubleword():
    check_against(modlog_seq(cdw(-0.5 + 0.3j), 4), FROZEN_M_STRIP, 1e-19)


# --------------------------------------------------------------- closed forms


def test_hand_anchors_on_real_axis():
    ln2 = math.log(2.0)
    assert abs(lambda_coeff(0, 3 + 0j) - 10 * ln2) < 1e-14
    L = log_seq(3 + 0j, 1)
    assert abs(L[0] - (6 * ln2 - 2)) < 1e-14
    assert abs(L[1] - (4 * ln2 - 3)) < 1e-14
    sm = ultra_stieltjes_mhalf_seq(3 + 0j, 1)
    assert abs(sm[1] - (2 - 3 * ln2)) < 1e-14


def test_stieltjes_seed_at_i():
    s0 = stieltjes_seq(1j, 0)[0]
    assert abs(s0 - complex(0, -math.pi / 2)) < 1e-15


def test_far_field_decay():
    got = 1000.0 * stieltjes_seq(1000 + 0j, 0)[0]
    assert abs(got - 2.000000666667066666952) < 1e-12


def test_lambda_limit_values():
    # endpoint limits use w log w -> 0
    ln2 = math.log(2.0)
    assert abs(lambda_coeff(0, 1 + 0j) - 2 * ln2) < 1e-15
    want = complex(-2 * ln2, -2 * math.pi)
    assert abs(lambda_coeff(0, -1 + 0j) - want) < 1e-15


def test_mu_limit_and_strip_values():
    ln2 = math.log(2.0)
    got = mu_coeff(0, 1j)
    assert abs(got - complex(-math.pi, 2 * ln2)) < 1e-15
    got = mu_coeff(1, -0.5 + 0j)
    assert abs(got - complex(0, -2.0 / 3.0 + math.pi / 2)) < 1e-15


def test_coeff_tails():
    z = 0.7 + 0.2j
    for k in range(2, 6):
        assert lambda_coeff(k, z) == 0
        assert mu_coeff(k, z) == 0
    # inside the strip the mu tail carries the cut correction
    z = -0.5 + 0.3j
    c3 = (1 - 0.09) * (3 * 0.3) / 6.0
    want = complex(0, -2 * math.pi * (-0.5) * c3)
    assert abs(mu_coeff(2, z) - want) < 1e-15


# ----------------------------------------------------------------- invariants


def test_log_vs_mhalf_identity():
    # L_k + S_{k+1} telescopes to the endpoint logs at k = 0 and to zero
    # beyond; run in extended precision so the forward growth at distant
    # points stays under the stated bound
    for z in (2 + 1j, 3 + 0j, 1.1 + 0.1j):
        zd = cdw(z)
        L = log_seq(zd, 20)
        S = ultra_stieltjes_mhalf_seq(zd, 21)
        anchor = as_mpc(clog(zd + 1) + clog(zd - 1))
        for k in range(21):
            resid = as_mpc(L[k]) + as_mpc(S[k + 1])
            if k == 0:
                resid -= anchor
            assert abs(resid) <= 1e-12 * (1 + abs(as_mpc(L[k])))


def test_modlog_recurrence_matches_direct_on_grid():
    # whole-plane agreement of the recurrence against entrywise rotation;
    # extended precision keeps forward growth below the tolerance at the
    # far corners
    worst = 0.0
    for ix in range(21):
        x = -2.0 + 0.2 * ix
        for iy in range(21):
            y = -2.0 + 0.2 * iy
            if x == 0.0 and abs(y) == 1.0:
                continue
            z = cdw(complex(x, y))
            a = modlog_seq(z, 20)
            b = modlog_direct(z, 20)
            diff = max(abs(complex(u) - complex(v)) for u, v in zip(a, b))
            worst = max(worst, diff)
    assert worst <= 1e-11, worst


def test_modlog_continuous_across_region_boundaries():
    # the region constant and strip corrections must cancel the branch
    # jumps of the rotated seed: step across each boundary and compare
    eps = 1e-9
    pairs = [
        (complex(+eps, 0.5), complex(-eps, 0.5)),     # into the strip
        (complex(+eps, -1.5), complex(-eps, -1.5)),   # into the lower left
        (complex(-0.5, 1 - eps), complex(-0.5, 1 + eps)),   # strip top
        (complex(-0.5, -1 + eps), complex(-0.5, -1 - eps)),  # strip bottom
    ]
    for za, zb in pairs:
        a = modlog_seq(za, 8)
        b = modlog_seq(zb, 8)
        for u, v in zip(a, b):
            assert abs(u - v) < 1e-6


def test_sequences_preserve_flavor():
    z = 0.7 - 0.4j
    for fn in (stieltjes_seq, ultra_stieltjes_mhalf_seq, log_seq,
               modlog_seq, modlog_direct):
        assert all(isinstance(v, complex) for v in fn(z, 5))
        assert all(isinstance(v, CDW) for v in fn(cdw(z), 5))
    assert isinstance(lambda_coeff(0, z), complex)
    assert isinstance(lambda_coeff(1, cdw(z)), CDW)
    assert isinstance(mu_coeff(0, cdw(z)), CDW)


# ------------------------------------------------------------ singular points


@pytest.mark.parametrize("bad", [1 + 0j, -1 + 0j, 1 - 0j])
def test_interval_endpoints_raise(bad):
    for fn in (stieltjes_seq, ultra_stieltjes_mhalf_seq, log_seq):
        with pytest.raises(SingularPointError):
            fn(bad, 5)
        with pytest.raises(SingularPointError):
            fn(cdw(bad), 5)


@pytest.mark.parametrize("bad", [1j, -1j, complex(-0.0, 1.0)])
def test_rotated_endpoints_raise(bad):
    for fn in (modlog_seq, modlog_direct):
        with pytest.raises(SingularPointError):
            fn(bad, 5)
        with pytest.raises(SingularPointError):
            fn(cdw(bad), 5)


def test_near_singular_still_evaluates():
    v = log_seq(1 + 1e-12 + 0j, 3)
    assert all(cmath.isfinite(u) for u in v)
