"""Closed-form analytic limits used as cross-checks.

Nothing here replaces the full computation; these formulas are consumed
only by the test suite and the ``validate`` CLI command. The short-time
inequalities assume the linear-response regime (small phase, small
coupling-time product) and the low-temperature forms assume a meter
frozen in its ground state with threshold level one.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .core import EngineParams, phase, tls_populations
from .errors import CouplingDomainError, ZeroMeasurementTimeError

_SINH_OVERFLOW = 350.0


class LimitContext(enum.Enum):
    ZENO_NET_WORK = "zeno_net_work"
    LOW_TEMP_HEAT_ENGINE = "low_temp_heat_engine"


@dataclass(frozen=True)
class LimitCheck:
    lhs: float
    rhs: float
    satisfied: bool
    context: LimitContext


class ZenoBound(NamedTuple):
    """Short-time lower bound on the threshold level, tagged with the phase."""

    value: float
    phi: float


def _switch_energy(params: EngineParams) -> float:
    """g_eff^2 (1 - cos(omega t_m)) via the half-angle form."""
    s = math.sin(0.5 * phase(params))
    return params.g_eff_sq * 2.0 * s * s


def low_temp_efficiency(params: EngineParams) -> float:
    """Heat-engine efficiency in the frozen-meter limit (threshold level 1).

    1 - g^2(1-cos phi) / (dE [1 - e^{-g^2(1-cos phi)/hw}]); expm1 keeps the
    denominator stable at small phase, and exactly zero switching energy
    returns the series limit 1 - hw/dE.
    """
    u = _switch_energy(params)
    if u == 0.0:
        return 1.0 - params.hbar_omega / params.delta_e
    denom = params.delta_e * (-math.expm1(-u / params.hbar_omega))
    return 1.0 - u / denom


def low_temp_power(params: EngineParams) -> float:
    """Frozen-meter power [dE b (1-e^{-x}) - b g^2(1-cos phi)] / tau."""
    if params.tau == 0.0:
        raise ZeroMeasurementTimeError("power is undefined at tau = 0")
    pops = tls_populations(params)
    u = _switch_energy(params)
    x = u / params.hbar_omega
    w_ext = params.delta_e * pops.b * (-math.expm1(-x))
    return (w_ext - pops.b * u) / params.tau


def ground_state_joint(n: int, params: EngineParams) -> float:
    """P(1, n) when only the meter ground state is occupied: b * Poisson(n; x)."""
    pops = tls_populations(params)
    x = _switch_energy(params) / params.hbar_omega
    if x == 0.0:
        return pops.b if n == 0 else 0.0
    lp = n * math.log(x) - x - math.lgamma(n + 1.0)
    return pops.b * math.exp(lp) if lp > -745.0 else 0.0


def _sinh_sq_half(y: float) -> float:
    half = 0.5 * y
    if half > _SINH_OVERFLOW:
        return math.inf
    s = math.sinh(half)
    return s * s


def zeno_threshold_bound(params: EngineParams) -> ZenoBound:
    """Short-time lower bound on the work threshold level.

    hw (a-b) / [2 sinh^2(beta_M hw / 2) g^2 b phi^2]; valid while the
    conditional response is linear in the displacement. Returned for any
    parameters, tagged with the phase so the caller can judge the regime.
    """
    pops = tls_populations(params)
    phi = phase(params)
    numer = params.hbar_omega * (pops.a - pops.b)
    if numer == 0.0:
        return ZenoBound(0.0, phi)
    denom = 2.0 * _sinh_sq_half(params.beta_m_hbar_omega) * params.g_eff_sq * pops.b * phi * phi
    if denom == 0.0:
        return ZenoBound(math.inf, phi)
    return ZenoBound(numer / denom, phi)


def zeno_net_work_condition(params: EngineParams, n_prime: int) -> LimitCheck:
    """Short-time condition predicting positive net work.

    4 n' sinh^2(beta_M hw/2)  >  (hw/dE) e^{beta_M hw n'} + 2(a-b)/(g^2 w tm^2 b).
    """
    pops = tls_populations(params)
    y = params.beta_m_hbar_omega
    lhs = 4.0 * n_prime * _sinh_sq_half(y)
    expo = y * n_prime
    first = (params.hbar_omega / params.delta_e) * (math.exp(expo) if expo < 700.0 else math.inf)
    gap = pops.a - pops.b
    denom = params.g_eff_sq * params.hbar_omega * params.tau * params.tau * pops.b
    second = 0.0 if gap == 0.0 else (2.0 * gap / denom if denom > 0.0 else math.inf)
    rhs = first + second
    return LimitCheck(lhs=lhs, rhs=rhs, satisfied=lhs > rhs, context=LimitContext.ZENO_NET_WORK)


def heat_engine_condition_low_temp(params: EngineParams) -> LimitCheck:
    """Coupling condition predicting W_ext > W_meas at every phase, frozen meter.

    2 g^2/hw > ln[1/(1 - 2 g^2/dE)]; the companion bound
    ln[1/(1 - 2 g^2/dE)] >= 2 g^2/dE holds identically in the domain and is
    verified as a sanity check.
    """
    y = 2.0 * params.g_eff_sq / params.delta_e
    if y >= 1.0:
        raise CouplingDomainError(
            f"2 g_eff^2 = {2.0 * params.g_eff_sq} must stay below delta_e = {params.delta_e}"
        )
    lhs = 2.0 * params.g_eff_sq / params.hbar_omega
    rhs = -math.log1p(-y)
    if rhs < y:  # algebraically impossible for y in [0, 1)
        raise ArithmeticError("log bound violated; numerical fault")
    return LimitCheck(
        lhs=lhs, rhs=rhs, satisfied=lhs > rhs, context=LimitContext.LOW_TEMP_HEAT_ENGINE
    )
