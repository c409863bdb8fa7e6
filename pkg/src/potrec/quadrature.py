"""Reference quadrature: slow, independent evaluations of the kernel
integrals for validating the recurrence paths.

The line oracles integrate the defining 1D integrands directly with
adaptive bisection on fixed-order Gauss panels. The square oracle goes
semi-analytic: the inner variable is folded into a 1D sequence evaluation
and only the outer variable is integrated numerically. Branch-sensitive
splits happen at the cut-crossing ordinate so no panel straddles a jump.
"""

import heapq
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, CapacityError, SingularPointError
from .interval import log_seq, stieltjes_seq
from .orthopoly import legendre_seq

_MAX_NODES = 200
_PANEL_ORDER = 20
_MAX_DEPTH = 40


@dataclass(frozen=True)
class QuadRule:
    nodes: np.ndarray
    weights: np.ndarray


def gauss_nodes(n):
    """Gauss-Legendre rule on [-1, 1] by Newton iteration on P_n.

    The derivative comes from (1-x^2) P_n' = n (P_{n-1} - x P_n) and the
    weights from 2 / ((1-x^2) P_n'^2). Supports n up to 200.
    """
    if n < 1:
        raise ValueError("rule order must be positive")
    if n > _MAX_NODES:
        raise CapacityError("rule order capped at %d" % _MAX_NODES)
    i = np.arange(n, dtype=float)
    x = np.cos(math.pi * (i + 0.75) / (n + 0.5))
    dp = np.ones_like(x)
    for _ in range(100):
        seq = legendre_seq(x, n)
        pn, pnm1 = seq[n], seq[n - 1]
        dp = n * (pnm1 - x * pn) / (1.0 - x * x)
        dx = pn / dp
        x -= dx
        if np.max(np.abs(dx)) < 1e-14:
            break
    else:
        raise AccuracyError("node iteration failed to converge")
    for _ in range(2):
        seq = legendre_seq(x, n)
        dp = n * (seq[n - 1] - x * seq[n]) / (1.0 - x * x)
        x -= seq[n] / dp
    # enforce the exact symmetry of the rule
    x = 0.5 * (x - x[::-1])
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    w = 0.5 * (w + w[::-1])
    return QuadRule(nodes=x[::-1].copy(), weights=w[::-1].copy())


_panel_rules = None
_MAX_PANELS = 20000


def _rules():
    global _panel_rules
    if _panel_rules is None:
        _panel_rules = (gauss_nodes(_PANEL_ORDER), gauss_nodes(_PANEL_ORDER // 2))
    return _panel_rules


def _adaptive_vec(f, breakpoints, tol):
    """Integrate a vector-valued integrand over chained segments.

    f maps a node array to an (m, len(nodes)) value array. Globally
    adaptive: every panel carries an embedded low-order error estimate
    and the worst panel splits until the summed estimate drops under
    tol. Integrable endpoint singularities refine geometrically, so the
    panel count stays modest.
    """
    hi, lo = _rules()

    def panel(a, b):
        half = 0.5 * (b - a)
        mid = 0.5 * (a + b)
        vals = f(half * hi.nodes + mid)
        coarse = f(half * lo.nodes + mid)
        v = vals @ (half * hi.weights)
        est = float(np.max(np.abs(v - coarse @ (half * lo.weights))))
        return v, est

    tag = itertools.count()
    heap = []
    total_err = 0.0
    npanels = 0
    for a, b in zip(breakpoints, breakpoints[1:]):
        if b <= a:
            continue
        v, est = panel(a, b)
        heapq.heappush(heap, (-est, next(tag), a, b, 0, v))
        total_err += est
        npanels += 1
    while total_err > tol:
        neg_est, _, a, b, depth, _v = heapq.heappop(heap)
        if depth >= _MAX_DEPTH or npanels >= _MAX_PANELS:
            raise AccuracyError(
                "refinement stalled at estimated error %.3g (tol %.3g)"
                % (total_err, tol)
            )
        total_err += neg_est
        mid = 0.5 * (a + b)
        for lo_end, hi_end in ((a, mid), (mid, b)):
            v, est = panel(lo_end, hi_end)
            heapq.heappush(heap, (-est, next(tag), lo_end, hi_end, depth + 1, v))
            total_err += est
        npanels += 1
    return sum(item[5] for item in heap)


def _line_breaks(split):
    if split is not None and -1.0 < split < 1.0:
        return [-1.0, split, 1.0]
    return [-1.0, 1.0]


def _line_integrand(kind, kmax, z):
    if kind == "stieltjes":
        def f(t):
            legs = legendre_seq(t, kmax)
            core = 1.0 / (z - t)
            return np.array([p * core for p in legs])
        return f, _line_breaks(z.real)
    if kind == "log":
        def f(t):
            legs = legendre_seq(t, kmax)
            core = np.log(z - t)
            return np.array([p * core for p in legs])
        return f, _line_breaks(z.real)
    if kind == "rotated_log":
        def f(t):
            legs = legendre_seq(t, kmax)
            # build z - it componentwise: the real part must keep its
            # sign bit for nodes above and below the crossing
            core = np.log(np.full_like(t, z.real) + 1j * (z.imag - t))
            return np.array([p * core for p in legs])
        return f, _line_breaks(z.imag)
    raise ValueError("unknown line kind %r" % (kind,))


def ref_line_seq(kind, kmax, z, tol):
    """All line moments of one kernel up to degree kmax, by quadrature.

    kind is "stieltjes", "log" or "rotated_log". The integration splits
    at the kernel's cut-crossing parameter. Raises AccuracyError when the
    refinement cannot reach tol.
    """
    z = complex(z)
    if kind in ("stieltjes", "log") and z.imag == 0.0 and abs(z.real) <= 1.0:
        if kind == "stieltjes" or abs(z.real) == 1.0:
            raise SingularPointError("line integral singular at %r" % (z,))
    if kind == "rotated_log" and z.real == 0.0 and abs(z.imag) == 1.0:
        raise SingularPointError("line integral singular at %r" % (z,))
    f, breaks = _line_integrand(kind, kmax, z)
    vals = _adaptive_vec(f, breaks, tol)
    return list(vals)


def ref_line(kind, k, z, tol):
    """One line moment by quadrature; see ref_line_seq."""
    return ref_line_seq(kind, k, z, tol)[k]


def _square_integrand(kind, kmax, jmax, z):
    if kind not in ("log", "stieltjes"):
        raise ValueError("unknown square kind %r" % (kind,))
    seq_fn = log_seq if kind == "log" else stieltjes_seq
    x, y = z.real, z.imag

    def f(t):
        legs = np.array(legendre_seq(t, jmax))
        inner = np.empty((kmax + 1, t.size), dtype=complex)
        for i, ti in enumerate(t):
            # keep x bit-identical (sign of zero decides the branch side)
            inner[:, i] = seq_fn(complex(x, y - ti), kmax)
        return (inner[:, None, :] * legs[None, :, :]).reshape(
            (kmax + 1) * (jmax + 1), t.size
        )

    return f


def ref_square_table(kind, kmax, jmax, z, tol):
    """Rectangle of square moments by semi-analytic quadrature.

    The inner integral is a line sequence at z - it; the outer one runs
    adaptively over t, split at t = Im z when that ordinate crosses the
    cut inside the integration range. kind is "log" or "stieltjes".
    """
    z = complex(z)
    f = _square_integrand(kind, kmax, jmax, z)
    vals = _adaptive_vec(f, _line_breaks(z.imag), tol)
    return vals.reshape(kmax + 1, jmax + 1)


def ref_square(kind, k, j, z, tol):
    """One square moment by quadrature; see ref_square_table."""
    return ref_square_table(kind, k, j, z, tol)[k, j]
