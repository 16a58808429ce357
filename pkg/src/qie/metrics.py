"""Performance metrics and regime classification for a single point.

Power is net work per measurement time in units of Omega * k_B T_S with
tau measured in 1/Omega, i.e. ``power * tau == w_net`` exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .core import EngineParams
from .displaced_fock import DEFAULT_TAIL_TOL
from .errors import TailMassError, ZeroMeasurementTimeError
from .thermo import ThermoReport, thermo_report

IDLE_THRESHOLD = 1e-14
INFO_FLOOR = 1e-14  # below this the 0/0 guard of eta_info kicks in
MAX_REPORT_TAIL = 1e-9


class Regime(enum.Enum):
    HEAT_ENGINE = "heat_engine"
    HEAT_VALVE = "heat_valve"
    IDLE = "idle"


@dataclass(frozen=True)
class MetricsReport:
    eta_info: float
    eta_he: Optional[float]
    power: float
    power_star: float
    eta_carnot: float
    eta_ca: float
    regime: Regime


def information_efficiency(report: ThermoReport) -> float:
    """W_ext / (T_S I); defined as 0 below the information floor (0/0 guard).

    The bound W_ext <= T_S I makes the ratio at most 1; just above the
    floor the division amplifies the (absolutely tiny) rounding of the
    entropy difference, so the ratio is capped at exactly 1.
    """
    if report.info < INFO_FLOOR:
        return 0.0
    return min(report.w_ext / report.info, 1.0)


def power(
    params: EngineParams,
    report: Optional[ThermoReport] = None,
    tol: float = DEFAULT_TAIL_TOL,
) -> float:
    """Net work per measurement time; undefined at tau = 0."""
    if params.tau == 0.0:
        raise ZeroMeasurementTimeError("power is undefined at tau = 0")
    if report is None:
        report = thermo_report(params, tol=tol)
    return report.w_net / params.tau


def power_star(
    params: EngineParams,
    report: Optional[ThermoReport] = None,
    tol: float = DEFAULT_TAIL_TOL,
) -> float:
    """Power corrected for the pi-pulse extraction time t_st = pi/Delta_E."""
    value = power(params, report, tol)
    return value / (1.0 + (math.pi / params.delta_e) / params.tau)


def thermo_efficiency(report: ThermoReport) -> Optional[float]:
    """1 - W_meas/W_ext inside the heat-engine regime, absent elsewhere."""
    if report.w_net >= 0.0 and report.w_ext > 0.0:
        return 1.0 - report.w_meas / report.w_ext
    return None


def reference_efficiencies(temp_ratio: float) -> Tuple[float, float]:
    """(Carnot, Curzon-Ahlborn) efficiencies for the bath temperature ratio."""
    return 1.0 - temp_ratio, 1.0 - math.sqrt(temp_ratio)


def classify_regime(report: ThermoReport) -> Regime:
    if abs(report.w_net) <= IDLE_THRESHOLD:
        return Regime.IDLE
    return Regime.HEAT_ENGINE if report.w_net > 0.0 else Regime.HEAT_VALVE


def metrics_report(
    params: EngineParams,
    report: Optional[ThermoReport] = None,
    tol: float = DEFAULT_TAIL_TOL,
) -> MetricsReport:
    """All metrics for one point.

    Refuses to report when the truncation tail is too large to trust the
    sums. At tau = 0 the engine is idle and both powers are reported as 0
    (the strict :func:`power` contract still raises there).
    """
    if report is None:
        report = thermo_report(params, tol=tol)
    if report.tail_mass > MAX_REPORT_TAIL:
        raise TailMassError(
            f"tail mass {report.tail_mass:.3e} exceeds {MAX_REPORT_TAIL:.1e}"
        )
    if params.tau == 0.0:
        pi_val = pi_star = 0.0
    else:
        pi_val = power(params, report)
        pi_star = power_star(params, report)
    eta_c, eta_ca = reference_efficiencies(params.temp_ratio)
    regime = classify_regime(report)
    eta_he = thermo_efficiency(report) if regime is Regime.HEAT_ENGINE else None
    return MetricsReport(
        eta_info=information_efficiency(report),
        eta_he=eta_he,
        power=pi_val,
        power_star=pi_star,
        eta_carnot=eta_c,
        eta_ca=eta_ca,
        regime=regime,
    )
