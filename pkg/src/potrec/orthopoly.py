"""Legendre and ultraspherical (Gegenbauer) sequences by forward recurrence.

Every routine returns the whole sequence [C_0(x), ..., C_n(x)] as a list and
works generically: x may be a float, a complex number, a numpy array, or a
double-word value from the doubledouble module. Recurrence coefficients are
kept as integer multiply/divide pairs so nothing is lost to a pre-rounded
ratio when x carries extended precision.
"""


def _one_like(x):
    # generic multiplicative identity matching x's type/shape
    return x * 0 + 1


def legendre_seq(x, n):
    """Legendre polynomials P_0..P_n at x.

    Forward recurrence (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    seq = [_one_like(x)]
    if n == 0:
        return seq
    seq.append(x * 1)
    for k in range(1, n):
        seq.append(((2 * k + 1) * x * seq[k] - k * seq[k - 1]) / (k + 1))
    return seq


# supported ultraspherical orders; each makes 2*lam an integer so the
# recurrence coefficients stay exact
_TWOLAM = {1.5: 3, -0.5: -1, -1.5: -3}


def ultra_seq(lam, x, n):
    """Ultraspherical polynomials C_0^(lam)..C_n^(lam) at x.

    lam must be one of 3/2, -1/2, -3/2. Forward recurrence
    (k+1) C_{k+1} = (2k+2lam) x C_k - (k+2lam-1) C_{k-1}, which stays
    well defined at the negative half-integer orders because the leading
    division is always by k+1.
    """
    twolam = _TWOLAM.get(float(lam))
    if twolam is None:
        raise ValueError("order must be 3/2, -1/2 or -3/2")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    seq = [_one_like(x)]
    if n == 0:
        return seq
    seq.append(twolam * x)
    for k in range(1, n):
        seq.append(
            ((2 * k + twolam) * x * seq[k] - (k + twolam - 1) * seq[k - 1])
            / (k + 1)
        )
    return seq


def ultra_mhalf_explicit(x, n):
    """C_0^(-1/2)..C_n^(-1/2) at x through the closed form.

    C_0 = 1, C_1 = -x, and C_k = (1-x^2) C_{k-2}^(3/2)(x) / (k(k-1)) for
    k >= 2. Cross-check partner for ultra_seq(-1/2, ...).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    seq = [_one_like(x)]
    if n == 0:
        return seq
    seq.append(-x)
    if n == 1:
        return seq
    w = _one_like(x) - x * x
    three_half = ultra_seq(1.5, x, n - 2)
    for k in range(2, n + 1):
        seq.append(w * three_half[k - 2] / (k * (k - 1)))
    return seq
