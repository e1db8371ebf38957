"""
Exception hierarchy shared by the library and the CLI.
"""
from typing import Optional


class KGFSError(Exception):
    """Base class for every error raised by kgfs."""


class DomainError(KGFSError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SupercriticalChargeError(DomainError):
    """No real bound state exists because gamma >= l + 1/2."""

    def __init__(self, gamma: float, l: int):
        self.gamma = gamma
        self.l = l
        super().__init__(
            f"supercritical charge: gamma={gamma:.6g} >= l + 1/2 = {l + 0.5} "
            f"(no bound state with l={l})"
        )


class RangeError(KGFSError, OverflowError):
    """A finite result cannot be represented in double precision."""


class QuadratureError(KGFSError):
    """Base class for numerical integration failures."""


class ConvergenceError(QuadratureError):
    """Level doubling did not reach the requested tolerance."""

    def __init__(self, value: float, error_estimate: float, evaluations: int):
        self.value = value
        self.error_estimate = error_estimate
        self.evaluations = evaluations
        super().__init__(
            f"quadrature did not converge: best estimate {value!r} "
            f"+/- {error_estimate:.3g} after {evaluations} evaluations"
        )


class EvaluationError(QuadratureError):
    """The integrand returned NaN or infinity at an interior node."""

    def __init__(self, node: float, value: float):
        self.node = node
        self.value = value
        super().__init__(f"integrand is {value} at interior node x={node!r}")


class DivergenceError(KGFSError):
    """An information functional is not integrable at the origin."""


class ValidationError(KGFSError):
    """Invalid scan specification or configuration file."""

    def __init__(
        self, message: str, field: Optional[str] = None, line: Optional[int] = None
    ):
        self.field = field
        self.line = line
        location = ""
        if line is not None:
            location += f"line {line}: "
        if field is not None:
            location += f"{field}: "
        super().__init__(f"{location}{message}")
