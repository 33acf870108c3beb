"""
LadderKit — Error Types

Every domain failure raised by the package derives from LadderKitError, so
the command-line front door can map the whole family to exit code 2 while
check functions keep reporting failures as plain booleans.
"""

from typing import FrozenSet, Optional


class LadderKitError(Exception):
    """Base class for all LadderKit errors."""


# =============================================================================
# Exact arithmetic and operator algebra
# =============================================================================
class IncompatibleStrata(LadderKitError, ValueError):
    """Two scalars live in different radicand / π strata and cannot be summed."""


class OperatorPowerError(LadderKitError, ValueError):
    """A non-integer power was requested of something that is not a monomial."""


# =============================================================================
# Systems and chains
# =============================================================================
class UnknownSystem(LadderKitError, KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"unknown system {self.name!r}"


class LevelOutOfRange(LadderKitError, ValueError):
    def __init__(self, level: int, max_level: Optional[int] = None):
        self.level = level
        self.max_level = max_level
        if max_level is None:
            message = f"level must be a non-negative integer, got {level}"
        else:
            message = f"level {level} outside 0..{max_level}"
        super().__init__(message)


class InvalidQuantumNumbers(LadderKitError, ValueError):
    """Quantum numbers that do not describe a bound state of the system."""


class NoGauge(LadderKitError):
    """The operator is not of superpotential form, or the gauge identity fails."""


# =============================================================================
# Polynomials and wavefunctions
# =============================================================================
class NonPolynomialResidue(LadderKitError):
    """A Rodrigues reduction left momentum or an uncancelled exponential behind."""


class WavefunctionError(LadderKitError):
    """A wavefunction could not be assembled from its parts."""


class DomainError(LadderKitError, ValueError):
    """Point evaluation outside the coordinate domain or below the origin cutoff."""


class QuadratureNoConvergence(LadderKitError):
    def __init__(self, estimate: float, change: float, panels: int):
        self.estimate = estimate
        self.change = change
        self.panels = panels
        super().__init__(
            f"quadrature stalled at {panels} panels "
            f"(estimate {estimate:.3e}, last change {change:.3e})"
        )


# =============================================================================
# Operator DSL
# =============================================================================
class ParseError(LadderKitError):
    def __init__(self, offset: int, expected: FrozenSet[str], found: str,
                 message: Optional[str] = None):
        self.offset = offset
        self.expected = frozenset(expected)
        self.found = found
        if message is None:
            wanted = " or ".join(sorted(self.expected)) or "nothing"
            message = f"expected {wanted}, found {found}"
        self.message = message
        super().__init__(f"offset {offset}: {message}")


class LowerError(LadderKitError, ValueError):
    """A well-formed expression that has no meaning in the operator algebra."""
