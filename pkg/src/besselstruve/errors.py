"""Exception types shared across the library.

Domain errors (precondition violations, poles, divergent regimes) derive
from :class:`DomainError` and map to CLI exit status 2.  Budget exhaustion
in adaptive computations raises :class:`NonConvergenceError` and maps to
exit status 3.
"""


class DomainError(ValueError):
    """A parameter lies outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Gamma requested at a nonpositive integer."""


class GammaOverflowError(DomainError):
    """Gamma argument beyond the double-precision overflow threshold."""


class DivergenceError(DomainError):
    """Series parameters lie outside the convergence domain."""


class NumeratorPoleError(DomainError):
    """A numerator gamma factor of a Wright series hits a pole at a summed index."""


class ParameterPoleError(DomainError):
    """A lower series parameter is a nonpositive integer, so every tail term poles."""


class NonConvergenceError(RuntimeError):
    """An adaptive computation exhausted its budget before reaching tolerance."""
