"""Exact post-measurement outcome statistics of the coupled TLS-oscillator.

The premeasurement coupling displaces the meter conditioned on the excited
state, so the joint outcome table splits into a bare geometric column for
the ground state and a displaced thermal column for the excited state:

    P(0, n) = a (1-q) q^n
    P(1, n) = b <n| D(alpha) rho_thermal D(alpha)^dag |n>

with q = exp(-hbar*omega / k_B T_M) and |alpha|^2 set by the coupling and
the accumulated oscillator phase.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

import numpy as np

from . import _kernels
from .core import EngineParams, meter_boltzmann_factor, phase, tls_populations
from .errors import ParameterError, TruncationCapError, UndefinedConditionalError

DEFAULT_TAIL_TOL = 1e-12
DEFAULT_HARD_CAP = 20000
# Below this the thermal weights are all in the meter ground state to well
# under any tail tolerance, and 1/q in the closed form would overflow.
_Q_FLOOR = 1e-250


@dataclass(frozen=True)
class JointDistribution:
    """Truncated table of joint probabilities P(i, n, t_m).

    ``p_joint`` has shape (2, n_max+1); row 0 is the ground-state column,
    row 1 the excited-state column. ``tail_mass`` is the probability mass
    outside the truncation, so the table plus tail always sums to one.
    Instances are immutable and safe to share between threads.
    """

    params: EngineParams
    n_max: int
    p_joint: np.ndarray
    tail_mass: float
    alpha_sq: float

    def __post_init__(self):
        self.p_joint.setflags(write=False)

    @property
    def p_ground(self) -> np.ndarray:
        return self.p_joint[0]

    @property
    def p_excited(self) -> np.ndarray:
        return self.p_joint[1]


class ThresholdScan(NamedTuple):
    """First work-enabling meter level plus every sign change encountered."""

    n_prime: Optional[int]
    crossings: Tuple[int, ...]


def alpha_sq(params: EngineParams) -> float:
    """Squared displacement amplitude |alpha(t_m)|^2.

    Equals g_eff^2 (1 - cos(omega t_m)) / (hbar omega); evaluated via
    2 sin^2(phi/2) so the reset points phi = 2 pi k stay numerically clean.
    """
    half = 0.5 * phase(params)
    s = math.sin(half)
    return params.g_eff_sq * 2.0 * s * s / params.hbar_omega


def displacement_prob(n: int, m: int, alpha_sq: float) -> float:
    """|<n|D(alpha)|m>|^2 for Fock states n, m and displacement |alpha|^2.

    Symmetric in (n, m); log-domain evaluation keeps it finite for
    alpha_sq up to 1e6 and indices up to the truncation cap.
    """
    if n < 0 or m < 0:
        raise ParameterError("n,m", "Fock indices must be non-negative")
    if alpha_sq < 0.0:
        raise ParameterError("alpha_sq", f"must be >= 0, got {alpha_sq}")
    return float(_kernels.displacement_prob_kernel(int(n), int(m), float(alpha_sq)))


def _thermal_tail_length(q: float, tol: float) -> int:
    """Smallest L with geometric tail mass q^L below a tenth of tol."""
    if q == 0.0:
        return 0
    return max(0, int(math.ceil(math.log(0.1 * tol) / math.log(q))))


def _excited_column(x, q, n_max, nbar, tol, method):
    """Fock diagonal of the displaced thermal state plus its tail mass.

    The raw column is computed on a padded range and renormalized against
    its own total (head + measured extension + decay-bound residual): the
    infinite column sums to one exactly, so pinning the computed total to
    that identity removes the slow log-accumulation drift at large
    displacement. Returns (column[0..n_max], tail) with tail = inf when
    the padded range did not reach the decaying region (caller doubles).
    """
    if method == "mixture":
        m_top = _thermal_tail_length(q, tol)
        col = np.asarray(_kernels.mixture_diagonals(x, q, n_max, m_top))
        return col, max(1.0 - col.sum(), 0.0)
    pad = int(math.ceil(10.0 * math.sqrt(x + nbar + 1.0))) + 200
    n_ext = n_max + pad
    if q == 0.0:
        logp = _kernels.poisson_logpmf(x, n_ext)
    else:
        logp = _kernels.displaced_thermal_logpmf(x, q, n_ext)
    pmf = np.exp(logp)
    head = float(pmf[: n_max + 1].sum())
    ext = float(pmf[n_max + 1 :].sum())
    last, prev = pmf[-1], pmf[-2]
    if last == 0.0:
        residual = 0.0
    else:
        ratio = max(q, last / prev) if prev > 0.0 else 1.0
        if ratio >= 1.0:
            return pmf[: n_max + 1], math.inf
        residual = last * ratio / (1.0 - ratio)
    tail = ext + residual
    total = head + tail
    return pmf[: n_max + 1] / total, tail / total


def joint_distribution(
    params: EngineParams,
    tol: float = DEFAULT_TAIL_TOL,
    *,
    hard_cap: int = DEFAULT_HARD_CAP,
    method: str = "auto",
) -> JointDistribution:
    """Build the truncated joint table with tail mass at most ``tol``.

    The truncation level starts at the mean thermal occupation plus the
    displacement plus ten standard deviations (widened by the geometric
    tail length when the meter is hot) and doubles until the tail fits.
    ``method="mixture"`` sums the thermal mixture of displacement
    probabilities explicitly instead of using the closed-form diagonal;
    it is slower and exists as a cross-check.

    Raises :class:`~qie.errors.TruncationCapError` when the required level
    exceeds ``hard_cap``, which signals physically extreme parameters.
    """
    if not 0.0 < tol <= 1e-6:
        raise ParameterError("tol", f"must be in (0, 1e-6], got {tol}")
    if method not in ("auto", "mixture"):
        raise ParameterError("method", f"unknown method {method!r}")
    pops = tls_populations(params)
    x = alpha_sq(params)
    q = meter_boltzmann_factor(params)
    if q < _Q_FLOOR:
        q = 0.0
    nbar = q / (1.0 - q)
    start = nbar + x + 10.0 * math.sqrt(x + 1.0) + _thermal_tail_length(q, tol)
    n_max = int(math.ceil(start))
    while True:
        if n_max > hard_cap:
            raise TruncationCapError(n_max, hard_cap)
        if method == "mixture" and _thermal_tail_length(q, tol) > hard_cap:
            raise TruncationCapError(_thermal_tail_length(q, tol), hard_cap)
        levels = np.arange(n_max + 1)
        if q > 0.0:
            p0 = pops.a * (1.0 - q) * np.power(q, levels)
            tail0 = pops.a * q ** (n_max + 1)
        else:
            p0 = np.zeros(n_max + 1)
            p0[0] = pops.a
            tail0 = 0.0
        column, tail1 = _excited_column(x, q, n_max, nbar, tol, method)
        tail = tail0 + pops.b * tail1
        if tail <= tol:
            table = np.vstack([p0, pops.b * column])
            return JointDistribution(
                params=params,
                n_max=n_max,
                p_joint=table,
                tail_mass=float(tail),
                alpha_sq=x,
            )
        n_max *= 2


def meter_marginal(dist: JointDistribution, n: int) -> float:
    """P(n, t_m) = P(0, n) + P(1, n)."""
    if not 0 <= n <= dist.n_max:
        raise ParameterError("n", f"must be in [0, {dist.n_max}], got {n}")
    return float(dist.p_joint[0, n] + dist.p_joint[1, n])


def conditional_excited(dist: JointDistribution, n: int) -> float:
    """P(1 | n, t_m), the excited-state probability given meter outcome n."""
    if not 0 <= n <= dist.n_max:
        raise ParameterError("n", f"must be in [0, {dist.n_max}], got {n}")
    p0 = dist.p_joint[0, n]
    p1 = dist.p_joint[1, n]
    total = p0 + p1
    if total < 1e-300:
        raise UndefinedConditionalError(
            f"outcome n={n} is numerically impossible (P(n) = {total!r})"
        )
    return float(p1 / total)


def work_threshold_level(dist: JointDistribution) -> ThresholdScan:
    """Scan for the smallest n with P(1|n) strictly above P(0|n).

    Ties do not count (they contribute zero extracted work either way).
    Every sign change of P(1|n) - P(0|n) along the scan is reported so a
    non-monotone conditional is visible instead of silently assumed away.
    """
    above = dist.p_joint[1] > dist.p_joint[0]
    crossings = tuple(int(i) for i in np.nonzero(above[1:] != above[:-1])[0] + 1)
    hits = np.nonzero(above)[0]
    n_prime = int(hits[0]) if hits.size else None
    return ThresholdScan(n_prime=n_prime, crossings=crossings)
