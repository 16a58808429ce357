"""Finite-time quantum information engine toolkit.

A two-level system is premeasured by a temporarily coupled harmonic
oscillator; this package computes the exact outcome statistics, the
per-cycle energetics and information, the derived performance metrics,
analytic limit cross-checks, a brute-force validation path, and
Pareto-optimal trade-off fronts between power and the two efficiencies.
"""

from .core import (
    OPTIMIZER_BOUNDS,
    EngineParams,
    TlsPopulations,
    phase,
    tls_populations,
    validate_params,
)
from .displaced_fock import (
    JointDistribution,
    ThresholdScan,
    alpha_sq,
    conditional_excited,
    displacement_prob,
    joint_distribution,
    meter_marginal,
    work_threshold_level,
)
from .errors import (
    CouplingDomainError,
    EngineError,
    EvaluationBudgetError,
    InfiniteTemperatureError,
    ParameterError,
    TailMassError,
    TruncationCapError,
    TruncationLeakError,
    UndefinedConditionalError,
    ZeroMeasurementTimeError,
)
from .limits import (
    LimitCheck,
    LimitContext,
    ZenoBound,
    ground_state_joint,
    heat_engine_condition_low_temp,
    low_temp_efficiency,
    low_temp_power,
    zeno_net_work_condition,
    zeno_threshold_bound,
)
from .metrics import (
    MetricsReport,
    Regime,
    classify_regime,
    information_efficiency,
    metrics_report,
    power,
    power_star,
    reference_efficiencies,
    thermo_efficiency,
)
from .pareto import (
    GaConfig,
    ObjectiveVector,
    Orientation,
    Pair,
    ParetoFront,
    Problem,
    crowding_distance,
    dominates,
    engine_problem,
    front_export,
    hypervolume_2d,
    non_dominated_sort,
    nsga2_run,
)
from .thermo import (
    ThermoReport,
    extracted_work,
    free_energy_bound,
    information_gain,
    measurement_work,
    net_work,
    passive_temperature,
    thermal_work,
    thermo_report,
)

__version__ = "0.1.0"

__all__ = [
    "EngineParams", "TlsPopulations", "validate_params", "tls_populations", "phase",
    "OPTIMIZER_BOUNDS",
    "JointDistribution", "ThresholdScan", "alpha_sq", "displacement_prob",
    "joint_distribution", "conditional_excited", "meter_marginal", "work_threshold_level",
    "ThermoReport", "measurement_work", "extracted_work", "information_gain",
    "net_work", "free_energy_bound", "passive_temperature", "thermal_work", "thermo_report",
    "MetricsReport", "Regime", "information_efficiency", "power", "power_star",
    "thermo_efficiency", "reference_efficiencies", "classify_regime", "metrics_report",
    "LimitCheck", "LimitContext", "ZenoBound", "low_temp_efficiency", "low_temp_power",
    "ground_state_joint", "zeno_threshold_bound", "zeno_net_work_condition",
    "heat_engine_condition_low_temp",
    "ObjectiveVector", "ParetoFront", "GaConfig", "Problem", "Pair", "Orientation",
    "dominates", "non_dominated_sort", "crowding_distance", "nsga2_run",
    "engine_problem", "front_export", "hypervolume_2d",
    "EngineError", "ParameterError", "TruncationCapError", "UndefinedConditionalError",
    "ZeroMeasurementTimeError", "InfiniteTemperatureError", "CouplingDomainError",
    "TruncationLeakError", "TailMassError", "EvaluationBudgetError",
]
