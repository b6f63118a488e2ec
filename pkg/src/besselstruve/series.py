"""Shared series summation with the library-wide truncation rule.

Every direct summation in the library (Wright series, kernel series,
term-by-term integral series) stops the same way: after at least ten terms,
three consecutive terms must each fall below ``tol/10`` of the running
partial sum.  A single small term is not evidence of convergence, because
Wright-type terms can grow before they decay.  The reported tail estimate
is ten times the last term, so a converged result always satisfies
``tail_estimate <= tol * max(|value|, 1e-300)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

__all__ = ["SeriesValue", "sum_series"]

_TINY = 1e-300


@dataclass(frozen=True)
class SeriesValue:
    """Result of a truncated series summation.

    Attributes
    ----------
    value : float
        The partial sum at the stopping index.
    terms_used : int
        Number of terms actually summed.
    tail_estimate : float
        Conservative absolute bound on the discarded tail (10x last term).
    converged : bool
        True when the truncation rule fired before the term cap.
    """

    value: float
    terms_used: int
    tail_estimate: float
    converged: bool


def sum_series(terms: Iterable[float], tol: float, max_terms: int,
               min_index: int = 10) -> SeriesValue:
    """Sum ``terms`` until the truncation rule fires or ``max_terms`` is hit."""
    total = 0.0
    last = 0.0
    used = 0
    consecutive = 0
    for k, t in enumerate(terms):
        if k >= max_terms:
            break
        total += t
        last = t
        used = k + 1
        if abs(t) < (tol / 10.0) * max(abs(total), _TINY):
            consecutive += 1
            if consecutive >= 3 and k >= min_index:
                return SeriesValue(total, used, 10.0 * abs(t), True)
        else:
            consecutive = 0
    return SeriesValue(total, used, 10.0 * abs(last), False)
