"""Dimensionless unit system and shared thermal quantities.

Everything in this package works in units hbar = k_B = T_S = 1, so the
inverse time scale Omega = k_B*T_S/hbar is 1 and all quantities below are
plain dimensionless numbers:

* ``temp_ratio``  -- meter over system bath temperature, T_M/T_S
* ``delta_e``     -- two-level splitting in units of k_B*T_S
* ``hbar_omega``  -- oscillator quantum in units of k_B*T_S
* ``g_eff_sq``    -- effective coupling strength (energy) in k_B*T_S
* ``tau``         -- measurement time in units of 1/Omega
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError

# Search box used by the optimizer (log10 ranges for the first four knobs,
# linear range for omega*t_m/2pi). Validation below is deliberately wider.
OPTIMIZER_BOUNDS = {
    "temp_ratio": (1e-4, 1.0),
    "delta_e": (1e-3, 1e2),
    "hbar_omega": (1e-3, 1e2),
    "g_eff_sq": (1e-6, 1e6),
    "cycles": (1e-3, 1.0),  # omega * t_m / 2pi
}


@dataclass(frozen=True)
class EngineParams:
    """The five dimensionless engine knobs."""

    temp_ratio: float
    delta_e: float
    hbar_omega: float
    g_eff_sq: float
    tau: float

    def __post_init__(self):
        for name in ("temp_ratio", "delta_e", "hbar_omega", "g_eff_sq", "tau"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)):
                raise ParameterError(name, f"expected a real number, got {value!r}")
            value = float(value)
            if not math.isfinite(value):
                raise ParameterError(name, f"must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if not 0.0 < self.temp_ratio <= 1.0:
            raise ParameterError("temp_ratio", f"must be in (0, 1], got {self.temp_ratio}")
        if self.delta_e <= 0.0:
            raise ParameterError("delta_e", f"must be > 0, got {self.delta_e}")
        if self.hbar_omega <= 0.0:
            raise ParameterError("hbar_omega", f"must be > 0, got {self.hbar_omega}")
        if self.g_eff_sq < 0.0:
            raise ParameterError("g_eff_sq", f"must be >= 0, got {self.g_eff_sq}")
        if self.tau < 0.0:
            raise ParameterError("tau", f"must be >= 0, got {self.tau}")

    @property
    def beta_m_hbar_omega(self) -> float:
        """Oscillator quantum over meter temperature, hbar*omega/(k_B*T_M)."""
        return self.hbar_omega / self.temp_ratio


@dataclass(frozen=True)
class TlsPopulations:
    """Initial thermal populations of the two-level system."""

    a: float  # ground state
    b: float  # excited state


def validate_params(temp_ratio, delta_e, hbar_omega, g_eff_sq, tau) -> EngineParams:
    """Validate five raw numbers and return them as :class:`EngineParams`.

    Raises :class:`~qie.errors.ParameterError` naming the offending field.
    """
    return EngineParams(temp_ratio, delta_e, hbar_omega, g_eff_sq, tau)


def tls_populations(params: EngineParams) -> TlsPopulations:
    """Thermal ground/excited populations a = 1/(1+e^{-dE}), b = 1/(1+e^{+dE})."""
    a = 1.0 / (1.0 + math.exp(-params.delta_e))
    b = 1.0 / (1.0 + math.exp(params.delta_e))
    return TlsPopulations(a=a, b=b)


def phase(params: EngineParams) -> float:
    """Oscillator phase omega * t_m accumulated during the measurement."""
    return params.hbar_omega * params.tau


def meter_boltzmann_factor(params: EngineParams) -> float:
    """q = exp(-hbar*omega/k_B*T_M); zero when the exponent underflows."""
    y = params.beta_m_hbar_omega
    return math.exp(-y) if y < 745.0 else 0.0
