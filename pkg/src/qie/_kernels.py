"""Numerical kernels for displaced-Fock statistics.

Two interchangeable backends live here: numba-jitted loops (default) and a
pure-numpy fallback selected with the environment variable ``QIE_NO_NUMBA=1``
(or used automatically when numba is not importable). ``qie.benchmarks``
times both on identical workloads.

All Laguerre-type evaluation is done in the log domain seeded by log-gamma,
with stable recurrences:

* single squared displacement matrix elements |<n|D(alpha)|m>|^2 use the
  normalized three-term recurrence along the diagonal k = |n-m| (amplitude
  domain, coefficients O(1), no overflow for alpha_sq up to 1e6);
* the full Fock diagonal of a displaced thermal state uses the Laguerre
  ratio recurrence at negative argument, where every term is positive, so
  the recurrence cannot cancel.
"""

from __future__ import annotations

import math
import os

import numpy as np
from scipy.special import gammaln

_LOG_TINY = -745.0  # below this, exp() underflows even in the subnormal range


# ---------------------------------------------------------------------------
# pure-numpy backend
# ---------------------------------------------------------------------------

def poisson_logpmf_numpy(x, n_max):
    """ln[x^n e^{-x} / n!] for n = 0..n_max; x = 0 gives a point mass at 0.

    Same compensated incremental scheme as the displaced-thermal case so
    the column stays accurate for x in the thousands.
    """
    out = np.empty(n_max + 1)
    if x == 0.0:
        out[:] = -np.inf
        out[0] = 0.0
        return out
    lx = math.log(x)
    s = -x
    comp = 0.0
    out[0] = s
    for n in range(1, n_max + 1):
        delta = (lx - math.log(n)) - comp
        total = s + delta
        comp = (total - s) - delta
        s = total
        out[n] = s
    return out


def displaced_thermal_logpmf_numpy(x, q, n_max):
    """ln P(n) for the Fock diagonal of a displaced thermal state.

    P(n) = (1-q) q^n exp(-x(1-q)) L_n(-x(1-q)^2/q) with q = e^{-beta hw}
    in (0, 1) and x = |alpha|^2 >= 0. The caller handles q = 0 (Poisson).
    The log accumulates increment-wise with Kahan compensation so the
    left-tail climb (order x) does not contaminate the peak entries.
    """
    out = np.empty(n_max + 1)
    lq = math.log(q)
    z = -x * (1.0 - q) * (1.0 - q) / q
    s = math.log1p(-q) - x * (1.0 - q)
    comp = 0.0
    out[0] = s
    r = 1.0
    for n in range(1, n_max + 1):
        if n == 1:
            r = 1.0 - z
        else:
            r = ((2.0 * (n - 1) + 1.0 - z) - (n - 1.0) / r) / n
        delta = (lq + math.log(r)) - comp
        total = s + delta
        comp = (total - s) - delta
        s = total
        out[n] = s
    return out


def displacement_prob_numpy(n, m, x):
    """|<n|D(alpha)|m>|^2 as a function of |alpha|^2 = x only."""
    if x == 0.0:
        return 1.0 if n == m else 0.0
    k = abs(n - m)
    steps = min(n, m)
    lw0 = 0.5 * (k * math.log(x) - x - math.lgamma(k + 1.0))
    w_cur = math.exp(lw0) if lw0 > _LOG_TINY else 0.0
    w_prev = 0.0
    for j in range(steps):
        coef = (2.0 * j + k + 1.0 - x) / math.sqrt((j + 1.0) * (j + k + 1.0))
        back = math.sqrt(j * (j + k) / ((j + 1.0) * (j + k + 1.0)))
        w_prev, w_cur = w_cur, coef * w_cur - back * w_prev
    return w_cur * w_cur


def mixture_diagonals_numpy(x, q, n_max, m_top):
    """sum_m (1-q) q^m |<n|D|m>|^2 for n = 0..n_max, thermal sum cut at m_top.

    Vectorized across diagonals k = n - m; the recurrence index is the
    smaller of the two Fock labels. Used as a cross-check of the closed
    form, not on the hot path.
    """
    weights = np.zeros(m_top + 1)
    if q == 0.0:
        weights[0] = 1.0
    else:
        weights[:] = (1.0 - q) * q ** np.arange(m_top + 1)
    out = np.zeros(n_max + 1)
    if x == 0.0:
        top = min(m_top, n_max)
        out[: top + 1] = weights[: top + 1]
        return out
    k_top = max(n_max, m_top)
    k = np.arange(k_top + 1)
    lw0 = 0.5 * (k * math.log(x) - x - gammaln(k + 1.0))
    w_cur = np.where(lw0 > _LOG_TINY, np.exp(lw0), 0.0)
    w_prev = np.zeros_like(w_cur)
    steps = int(min(m_top, n_max))
    for j in range(steps + 1):
        w2 = w_cur * w_cur
        # upper triangle: out[j+k] += w_j(k)^2 * weight_j, needs j <= m_top
        if j <= m_top:
            hi = n_max - j
            if hi >= 0:
                out[j:] += weights[j] * w2[: hi + 1]
        # lower triangle: out[j] += sum_k>=1 w_j(k)^2 * weight_{j+k}
        if j <= n_max:
            span = m_top - j
            if span >= 1:
                out[j] += np.dot(weights[j + 1 : j + span + 1], w2[1 : span + 1])
        coef = (2.0 * j + k + 1.0 - x) / np.sqrt((j + 1.0) * (j + k + 1.0))
        back = np.sqrt(j * (j + k) / ((j + 1.0) * (j + k + 1.0)))
        w_prev, w_cur = w_cur, coef * w_cur - back * w_prev
    return out


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------

_DISABLED = os.environ.get("QIE_NO_NUMBA", "").strip() not in ("", "0")

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via QIE_NO_NUMBA instead
    numba = None
    HAVE_NUMBA = False

if HAVE_NUMBA:

    @numba.njit(cache=True, nogil=True)
    def poisson_logpmf_numba(x, n_max):
        out = np.empty(n_max + 1)
        if x == 0.0:
            out[0] = 0.0
            for n in range(1, n_max + 1):
                out[n] = -np.inf
            return out
        lx = math.log(x)
        s = -x
        comp = 0.0
        out[0] = s
        for n in range(1, n_max + 1):
            delta = (lx - math.log(n)) - comp
            total = s + delta
            comp = (total - s) - delta
            s = total
            out[n] = s
        return out

    @numba.njit(cache=True, nogil=True)
    def displaced_thermal_logpmf_numba(x, q, n_max):
        out = np.empty(n_max + 1)
        lq = math.log(q)
        z = -x * (1.0 - q) * (1.0 - q) / q
        s = math.log1p(-q) - x * (1.0 - q)
        comp = 0.0
        out[0] = s
        r = 1.0
        for n in range(1, n_max + 1):
            if n == 1:
                r = 1.0 - z
            else:
                r = ((2.0 * (n - 1) + 1.0 - z) - (n - 1.0) / r) / n
            delta = (lq + math.log(r)) - comp
            total = s + delta
            comp = (total - s) - delta
            s = total
            out[n] = s
        return out

    @numba.njit(cache=True, nogil=True)
    def displacement_prob_numba(n, m, x):
        if x == 0.0:
            return 1.0 if n == m else 0.0
        k = abs(n - m)
        steps = min(n, m)
        lw0 = 0.5 * (k * math.log(x) - x - math.lgamma(k + 1.0))
        w_cur = math.exp(lw0) if lw0 > _LOG_TINY else 0.0
        w_prev = 0.0
        for j in range(steps):
            coef = (2.0 * j + k + 1.0 - x) / math.sqrt((j + 1.0) * (j + k + 1.0))
            back = math.sqrt(j * (j + k) / ((j + 1.0) * (j + k + 1.0)))
            w_nxt = coef * w_cur - back * w_prev
            w_prev = w_cur
            w_cur = w_nxt
        return w_cur * w_cur

    @numba.njit(cache=True, nogil=True)
    def mixture_diagonals_numba(x, q, n_max, m_top):
        weights = np.zeros(m_top + 1)
        if q == 0.0:
            weights[0] = 1.0
        else:
            t = 1.0 - q
            for m in range(m_top + 1):
                weights[m] = t
                t *= q
        out = np.zeros(n_max + 1)
        if x == 0.0:
            top = min(m_top, n_max)
            for m in range(top + 1):
                out[m] = weights[m]
            return out
        lx = math.log(x)
        k_top = max(n_max, m_top)
        for k in range(k_top + 1):
            hi_upper = min(m_top, n_max - k)
            hi_lower = min(m_top - k, n_max) if k >= 1 else -1
            hi = hi_upper if hi_upper > hi_lower else hi_lower
            if hi < 0:
                continue
            lw0 = 0.5 * (k * lx - x - math.lgamma(k + 1.0))
            w_cur = math.exp(lw0) if lw0 > _LOG_TINY else 0.0
            w_prev = 0.0
            for j in range(hi + 1):
                w2 = w_cur * w_cur
                if j <= hi_upper:
                    out[j + k] += weights[j] * w2
                if j <= hi_lower:
                    out[j] += weights[j + k] * w2
                coef = (2.0 * j + k + 1.0 - x) / math.sqrt((j + 1.0) * (j + k + 1.0))
                back = math.sqrt(j * (j + k) / ((j + 1.0) * (j + k + 1.0)))
                w_nxt = coef * w_cur - back * w_prev
                w_prev = w_cur
                w_cur = w_nxt
        return out


USE_NUMBA = HAVE_NUMBA and not _DISABLED

if USE_NUMBA:
    poisson_logpmf = poisson_logpmf_numba
    displaced_thermal_logpmf = displaced_thermal_logpmf_numba
    displacement_prob_kernel = displacement_prob_numba
    mixture_diagonals = mixture_diagonals_numba
else:
    poisson_logpmf = poisson_logpmf_numpy
    displaced_thermal_logpmf = displaced_thermal_logpmf_numpy
    displacement_prob_kernel = displacement_prob_numpy
    mixture_diagonals = mixture_diagonals_numpy


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
