"""Generalized Wright and generalized hypergeometric series.

``wright_eval`` sums

    sum_k  prod_i gamma(a_i + alpha_i*k) * prod_j [1/gamma(b_j + beta_j*k)]
           * z**k / k!

with every term assembled in log space (signs tracked separately through
the reflection formula), so gamma factors with weight 2 stay summable far
past the point where they would overflow as plain doubles.  A denominator
pole contributes an exact zero term; a numerator pole aborts with the
offending parameter index unless a denominator pole at the same index
already annihilates the term.

Convergence domain: with delta = sum(beta_j) - sum(alpha_i), the series is
entire for delta > -1.  At delta = -1 it has the finite radius
``prod |alpha_i|**(-alpha_i) * prod beta_j**beta_j`` and summation is only
attempted up to 90% of that radius; below delta = -1 evaluation is refused.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    DivergenceError,
    DomainError,
    NonConvergenceError,
    NumeratorPoleError,
    ParameterPoleError,
)
from .gammakit import _is_nonpositive_integer, _require_finite, signed_log_gamma
from .series import SeriesValue, sum_series

__all__ = [
    "WrightSpec",
    "pfq_eval",
    "wright_delta",
    "wright_eval",
    "wright_radius",
    "wright_reduce_check",
    "wright_terms",
]

_MAX_TERMS = 500
_BOUNDARY_SNAP = 1e-12  # |delta + 1| below this counts as the radius boundary
_RADIUS_SAFETY = 0.9


@dataclass(frozen=True)
class WrightSpec:
    """Parameter lists (a_i, alpha_i) / (b_j, beta_j) of a Wright series."""

    upper: tuple[tuple[float, float], ...]
    lower: tuple[tuple[float, float], ...]

    def __post_init__(self):
        for name in ("upper", "lower"):
            pairs = tuple(
                (_require_finite(v, f"{name} value"), _require_finite(w, f"{name} weight"))
                for v, w in getattr(self, name)
            )
            object.__setattr__(self, name, pairs)

    @property
    def delta(self) -> float:
        return wright_delta(self)


def wright_delta(spec: WrightSpec) -> float:
    """sum of lower weights minus sum of upper weights."""
    return math.fsum(w for _, w in spec.lower) - math.fsum(w for _, w in spec.upper)


def wright_radius(spec: WrightSpec) -> float:
    """Convergence radius: +inf for delta > -1, the finite boundary radius
    at delta = -1, and a :class:`DivergenceError` below."""
    delta = wright_delta(spec)
    if abs(delta + 1.0) <= _BOUNDARY_SNAP:
        log_r = 0.0
        for _, w in spec.upper:
            if w != 0.0:
                log_r -= w * math.log(abs(w))
        for _, w in spec.lower:
            if w < 0.0:
                raise DomainError(
                    "boundary radius undefined for negative lower weights"
                )
            if w != 0.0:
                log_r += w * math.log(w)
        return math.exp(log_r)
    if delta > -1.0:
        return math.inf
    raise DivergenceError(
        f"series diverges: sum(beta) - sum(alpha) = {delta} < -1"
    )


def _term_iter(spec: WrightSpec, z: float) -> Iterator[float]:
    log_abs_z = math.log(abs(z))
    neg = z < 0.0
    log_fact = 0.0
    for k in itertools.count():
        if k > 0:
            log_fact += math.log(k)
        gam = _term_value(spec, k, k * log_abs_z - log_fact)
        yield -gam if (neg and k & 1) else gam


def _term_value(spec: WrightSpec, k: int, log_scale: float = 0.0) -> float:
    """k-th gamma product times exp(log_scale); exact 0.0 when a denominator
    pole kills the term."""
    den_pole = any(_is_nonpositive_integer(b + w * k) for b, w in spec.lower)
    log_acc = log_scale
    sign = 1.0
    for i, (a, w) in enumerate(spec.upper):
        arg = a + w * k
        if _is_nonpositive_integer(arg):
            if den_pole:
                return 0.0
            raise NumeratorPoleError(
                f"numerator gamma pole: upper parameter {i} hits {arg} at term k={k}"
            )
        lg, s = signed_log_gamma(arg)
        log_acc += lg
        sign *= s
    if den_pole:
        return 0.0
    for b, w in spec.lower:
        lg, s = signed_log_gamma(b + w * k)
        log_acc -= lg
        sign *= s
    if log_acc > 700.0:
        raise NonConvergenceError(f"series term overflows at k={k}")
    return sign * math.exp(log_acc)


def _check_domain(spec: WrightSpec, z: float) -> None:
    delta = wright_delta(spec)
    if abs(delta + 1.0) <= _BOUNDARY_SNAP:
        radius = wright_radius(spec)
        if abs(z) > _RADIUS_SAFETY * radius:
            raise DivergenceError(
                f"|z|={abs(z)} too close to the convergence radius {radius} "
                f"(boundary case delta = -1; refusing |z| > {_RADIUS_SAFETY}*radius)"
            )
    elif delta < -1.0:
        raise DivergenceError(
            f"series diverges for z != 0: sum(beta) - sum(alpha) = {delta} < -1"
        )


def wright_eval(spec: WrightSpec, z: float, tol: float = 1e-12,
                max_terms: int = _MAX_TERMS) -> SeriesValue:
    """Evaluate the Wright series at real z with truncation diagnostics.

    At z = 0 the sum is the single k = 0 gamma product regardless of the
    convergence regime.
    """
    z = _require_finite(z, "z")
    if z == 0.0:
        return SeriesValue(_term_value(spec, 0), 1, 0.0, True)
    _check_domain(spec, z)
    return sum_series(_term_iter(spec, z), tol, max_terms)


def wright_terms(spec: WrightSpec, z: float, count: int) -> list[float]:
    """First ``count`` terms of the series at z (diagnostic helper)."""
    z = _require_finite(z, "z")
    if z == 0.0:
        return [_term_value(spec, 0)] + [0.0] * (count - 1)
    return list(itertools.islice(_term_iter(spec, z), count))


def pfq_eval(upper: Sequence[float], lower: Sequence[float], z: float,
             tol: float = 1e-12, max_terms: int = _MAX_TERMS) -> SeriesValue:
    """Generalized hypergeometric series sum_n prod(a_j)_n / prod(b_j)_n * z**n/n!.

    Converges for p <= q (any z) and for p = q + 1 with |z| < 1; other
    regimes raise :class:`DivergenceError`.  A nonpositive-integer lower
    parameter raises :class:`ParameterPoleError`.
    """
    a = [_require_finite(v, "upper parameter") for v in upper]
    b = [_require_finite(v, "lower parameter") for v in lower]
    z = _require_finite(z, "z")
    for j, bv in enumerate(b):
        if _is_nonpositive_integer(bv):
            raise ParameterPoleError(
                f"lower parameter {j} = {bv} is a nonpositive integer"
            )
    if z == 0.0:
        return SeriesValue(1.0, 1, 0.0, True)
    p, q = len(a), len(b)
    if p > q + 1:
        raise DivergenceError(f"series diverges for p > q+1 (p={p}, q={q}, z={z})")
    if p == q + 1 and abs(z) >= 1.0:
        raise DivergenceError(f"p = q+1 requires |z| < 1, got |z|={abs(z)}")

    def terms() -> Iterator[float]:
        t = 1.0
        n = 0
        while True:
            yield t
            num = 1.0
            for av in a:
                num *= av + n
            den = 1.0
            for bv in b:
                den *= bv + n
            t *= num / den * z / (n + 1)
            n += 1

    return sum_series(terms(), tol, max_terms)


def wright_reduce_check(upper: Sequence[float], lower: Sequence[float], z: float,
                        tol: float = 1e-12) -> tuple[float, float]:
    """Both sides of the weight-1 reduction identity.

    Returns ``(wright_eval with all weights 1,
    prod gamma(a)/prod gamma(b) * pfq_eval)``; the two agree to roughly
    summation accuracy wherever both are defined.
    """
    wspec = WrightSpec(
        upper=tuple((float(v), 1.0) for v in upper),
        lower=tuple((float(v), 1.0) for v in lower),
    )
    lhs = wright_eval(wspec, z, tol).value
    log_pref = 0.0
    sign = 1.0
    for v in upper:
        lg, s = signed_log_gamma(float(v))
        log_pref += lg
        sign *= s
    for v in lower:
        lg, s = signed_log_gamma(float(v))
        log_pref -= lg
        sign *= s
    rhs = sign * math.exp(log_pref) * pfq_eval(upper, lower, z, tol).value
    return lhs, rhs
