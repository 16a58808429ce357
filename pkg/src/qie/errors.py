"""Exception types shared across the package."""


class EngineError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(EngineError, ValueError):
    """A raw engine parameter is out of range or not finite."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class TruncationCapError(EngineError, RuntimeError):
    """The adaptive Fock-space truncation would exceed the hard cap.

    Signals physically extreme parameters (huge displacement or a very
    hot, very soft meter) rather than a numerical bug.
    """

    def __init__(self, needed, cap):
        self.needed = needed
        self.cap = cap
        super().__init__(f"truncation level {needed} exceeds hard cap {cap}")


class UndefinedConditionalError(EngineError, ValueError):
    """Conditional probability requested for a numerically impossible outcome."""


class ZeroMeasurementTimeError(EngineError, ZeroDivisionError):
    """Power-like quantities are undefined at zero measurement time."""


class InfiniteTemperatureError(EngineError, ValueError):
    """Passive temperature diverges for equal conditional populations."""


class CouplingDomainError(EngineError, ValueError):
    """Closed-form inequality evaluated outside its logarithm domain."""


class TruncationLeakError(EngineError, RuntimeError):
    """Brute-force evolution leaked population into the top truncated levels."""


class TailMassError(EngineError, ValueError):
    """Truncation tail too large for downstream metrics to be trustworthy."""


class EvaluationBudgetError(EngineError, RuntimeError):
    """Optimizer exceeded its configured evaluation budget."""
