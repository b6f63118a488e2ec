"""Bessel-Struve kernel, modified Bessel/Struve companions, series kernels.

The Bessel-Struve kernel of order alpha is the entire function

    S_alpha(z) = sum_n  c_n z**n,
    c_n = gamma(alpha+1) * gamma((n+1)/2) / (sqrt(pi) * n! * gamma(n/2+alpha+1))

restricted here to alpha > -1 so that gamma(alpha+1) and every denominator
gamma stay finite.  Notable specializations:

    S_{-1/2}(z) = exp(z)
    S_{1/2}(z)  = (exp(z) - 1) / z          (value 1 at z = 0)
    S_0(z)      = I_0(z) + L_0(z)
    z*S_1(z)    = 2*I_1(z) + 2*L_1(z)

(The last of these follows from the Legendre duplication formula applied
to the series coefficients; the frequently quoted variant without the
factor 2 on L_1 does not hold numerically.)

:class:`PowerSeriesKernel` packages any of these (plus exp and its
variants) as a coefficient generator with an exponent offset, the common
integrand contract consumed by the quadrature and proof-series oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator

import numpy as np

from .errors import DomainError, NonConvergenceError
from .gammakit import _require_finite, log_gamma, reciprocal_gamma
from .series import SeriesValue, sum_series

__all__ = [
    "KernelChoice",
    "PowerSeriesKernel",
    "as_power_series",
    "bessel_i",
    "kernel_coeff",
    "kernel_eval",
    "struve_l",
    "unit_kernel",
]

_MAX_TERMS = 500
_HALF_LOG_PI = 0.5723649429247000870717136756766


def _check_alpha(alpha: float) -> float:
    alpha = _require_finite(alpha, "alpha")
    if alpha <= -1.0:
        raise DomainError(f"kernel order must satisfy alpha > -1, got alpha={alpha}")
    return alpha


def _log_kernel_coeff(alpha: float, n: int) -> float:
    return (log_gamma(alpha + 1.0)
            + log_gamma((n + 1) / 2.0)
            - _HALF_LOG_PI
            - log_gamma(n + 1.0)
            - log_gamma(n / 2.0 + alpha + 1.0))


def kernel_coeff(alpha: float, n: int) -> float:
    """n-th power-series coefficient of S_alpha, assembled in log space.

    c_0 = 1 for every admissible alpha.
    """
    alpha = _check_alpha(alpha)
    n = int(n)
    if n < 0:
        raise DomainError(f"coefficient index must be >= 0, got n={n}")
    if n == 0:
        return 1.0
    return math.exp(_log_kernel_coeff(alpha, n))


def kernel_eval(alpha: float, z: float, tol: float = 1e-12) -> SeriesValue:
    """S_alpha(z) by direct summation; S_alpha(0) = 1 exactly.

    Terms are exponentiated once from log space, so large |z| degrades into
    an honest non-converged result instead of overflowing term by term.
    """
    alpha = _check_alpha(alpha)
    z = _require_finite(z, "z")
    if z == 0.0:
        return SeriesValue(1.0, 1, 0.0, True)
    log_abs_z = math.log(abs(z))
    neg = z < 0.0

    def terms() -> Iterator[float]:
        n = 0
        while True:
            if n == 0:
                t = 1.0
            else:
                log_t = _log_kernel_coeff(alpha, n) + n * log_abs_z
                t = math.exp(log_t) if log_t <= 709.0 else math.inf
            yield -t if (neg and n & 1) else t
            n += 1

    return sum_series(terms(), tol, _MAX_TERMS)


def bessel_i(order: int, z: float, tol: float = 1e-12) -> SeriesValue:
    """Modified Bessel function I_0 or I_1 by power series."""
    if order not in (0, 1):
        raise DomainError(f"order must be 0 or 1, got {order}")
    z = _require_finite(z, "z")
    q = z * z / 4.0

    def terms() -> Iterator[float]:
        t = 1.0 if order == 0 else z / 2.0
        k = 0
        while True:
            yield t
            t *= q / ((k + 1.0) * (k + 1.0 + order))
            k += 1

    return sum_series(terms(), tol, _MAX_TERMS)


def struve_l(order: int, z: float, tol: float = 1e-12) -> SeriesValue:
    """Modified Struve function L_0 or L_1 by power series.

    L_v(z) = sum_k (z/2)**(2k+v+1) / (gamma(k+3/2) * gamma(k+v+3/2)), written
    with pole-safe reciprocal gammas.
    """
    if order not in (0, 1):
        raise DomainError(f"order must be 0 or 1, got {order}")
    z = _require_finite(z, "z")
    h = z / 2.0

    def terms() -> Iterator[float]:
        p = h ** (order + 1)
        k = 0
        while True:
            yield p * reciprocal_gamma(k + 1.5) * reciprocal_gamma(k + order + 1.5)
            p *= h * h
            k += 1

    return sum_series(terms(), tol, _MAX_TERMS)


@dataclass
class PowerSeriesKernel:
    """An entire integrand factor f(w) = sum_n coeff(n) * w**(n+offset).

    ``coeff`` must be defined for every n >= 0 with coeff(0) finite.  The
    coefficient cache is written idempotently (same key, same value), so
    instances are safe to share across threads once constructed.
    """

    coeff: Callable[[int], float]
    offset: int
    label: str
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def _c(self, n: int) -> float:
        v = self._cache.get(n)
        if v is None:
            v = float(self.coeff(n))
            self._cache[n] = v
        return v

    def coefficients(self, count: int) -> np.ndarray:
        """First ``count`` coefficients as an array (cached)."""
        return np.asarray([self._c(i) for i in range(count)], dtype=float)

    def _terms_needed(self, wmax: float, tol: float) -> int:
        # Truncation index chosen at the largest |w|; every coefficient in
        # scope is nonnegative, so the same index is valid for smaller |w|.
        if wmax == 0.0:
            return 1
        total = 0.0
        consecutive = 0
        wp = 1.0
        for n in range(_MAX_TERMS):
            c = self._c(n)
            total += abs(c) * wp
            if abs(c) * wp < (tol / 10.0) * max(total, 1e-300):
                consecutive += 1
                if consecutive >= 3 and n >= 10:
                    return n + 1
            else:
                consecutive = 0
            wp *= wmax
        raise NonConvergenceError(
            f"kernel '{self.label}' did not truncate within {_MAX_TERMS} terms "
            f"at |w|={wmax}"
        )

    def evaluate(self, w: float, tol: float = 1e-12) -> SeriesValue:
        """f(w) with truncation diagnostics."""
        w = _require_finite(w, "w")
        if w == 0.0:
            v = self._c(0) if self.offset == 0 else 0.0
            return SeriesValue(v, 1, 0.0, True)

        def terms() -> Iterator[float]:
            wp = 1.0
            n = 0
            while True:
                yield self._c(n) * wp
                wp *= w
                n += 1

        inner = sum_series(terms(), tol, _MAX_TERMS)
        scale = w ** self.offset
        return SeriesValue(inner.value * scale, inner.terms_used,
                           inner.tail_estimate * abs(scale), inner.converged)

    def evaluate_many(self, w: np.ndarray, tol: float = 1e-12) -> np.ndarray:
        """Vectorized f(w) over an array of arguments (Horner on cached
        coefficients, truncated at the largest |w|)."""
        w = np.asarray(w, dtype=float)
        if w.size == 0:
            return np.zeros_like(w)
        wmax = float(np.max(np.abs(w)))
        n_terms = self._terms_needed(wmax, tol)
        c = self.coefficients(n_terms)
        acc = np.zeros_like(w)
        for cn in c[::-1]:
            acc = acc * w + cn
        if self.offset == 0:
            return acc
        return acc * w ** self.offset


class KernelChoice(Enum):
    """Named kernels accepted by :func:`as_power_series`."""

    S_ALPHA = "s_alpha"
    EXP = "exp"
    EXPM1_OVER_W = "expm1_over_w"
    I0_PLUS_L0 = "i0_plus_l0"
    TWO_I1_PLUS_L1 = "two_i1_plus_l1"


def _inv_factorial(n: int) -> float:
    # exact up to the double overflow of n!; beyond that the terms are zero
    # at double precision anyway
    if n > 170:
        return 0.0
    return 1.0 / float(math.factorial(n))


def as_power_series(which: KernelChoice | str, alpha: float | None = None) -> PowerSeriesKernel:
    """Coefficient generator and offset for a named kernel.

    ``S_ALPHA`` needs the order ``alpha``.  ``I0_PLUS_L0`` is exactly the
    S_alpha series at alpha = 0.  ``TWO_I1_PLUS_L1`` is the S_alpha series
    at alpha = 1 with offset 1, i.e. the function w*S_1(w); the name
    mirrors the integrand bracket this kernel stands in for in identity
    T4, although as a function w*S_1(w) = 2*I_1(w) + 2*L_1(w).
    """
    which = KernelChoice(which)
    if which is KernelChoice.S_ALPHA:
        if alpha is None:
            raise DomainError("S_ALPHA kernel requires alpha")
        a = _check_alpha(alpha)
        return PowerSeriesKernel(lambda n: kernel_coeff(a, n), 0, f"S_alpha({a})")
    if which is KernelChoice.EXP:
        return PowerSeriesKernel(_inv_factorial, 0, "exp(w)")
    if which is KernelChoice.EXPM1_OVER_W:
        return PowerSeriesKernel(lambda n: _inv_factorial(n + 1), 0, "(exp(w)-1)/w")
    if which is KernelChoice.I0_PLUS_L0:
        return PowerSeriesKernel(lambda n: kernel_coeff(0.0, n), 0, "I0+L0")
    return PowerSeriesKernel(lambda n: kernel_coeff(1.0, n), 1, "2I1+L1")


def unit_kernel() -> PowerSeriesKernel:
    """The constant kernel f(w) = 1 (reduces any integral to its base form)."""
    return PowerSeriesKernel(lambda n: 1.0 if n == 0 else 0.0, 0, "one")
