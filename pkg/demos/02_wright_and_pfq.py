"""Generalized Wright series and its reduction to pFq.

The Wright series attaches a real weight to every gamma-function
parameter.  With delta = sum(lower weights) - sum(upper weights), the
series is entire for delta > -1 and has a finite convergence radius at
delta = -1; the evaluator refuses anything beyond that.  When all weights
are 1 the series is an ordinary pFq up to a ratio of gamma prefactors,
which gives a free cross-check.
"""

import math

from besselstruve import (
    DivergenceError,
    WrightSpec,
    pfq_eval,
    wright_delta,
    wright_eval,
    wright_radius,
    wright_reduce_check,
    wright_terms,
)

spec = WrightSpec(upper=((1.0, 1.0),), lower=((1.0, 1.0),))
print("1Psi1[(1,1);(1,1)](1) collapses to e:", wright_eval(spec, 1.0).value,
      "vs", math.e)

spec = WrightSpec(upper=((0.5, 0.5), (3.0, 1.0), (1.0, 1.0)),
                  lower=((1.0, 0.5), (2.0, 1.0), (4.0, 1.0)))
print("\nA 3Psi3 with half-integer weights:")
print("  delta =", wright_delta(spec), " radius =", wright_radius(spec))
sv = wright_eval(spec, 0.5)
print(f"  value at z=0.5: {sv.value:.15g} ({sv.terms_used} terms, "
      f"tail {sv.tail_estimate:.1e})")

print("\n  first 10 terms (they decay fast in the entire regime):")
for k, t in enumerate(wright_terms(spec, 0.5, 10)):
    print(f"    k={k}: {t: .3e}")

print("\nBoundary of convergence (delta = -1):")
bspec = WrightSpec(upper=((1.0, 2.0),), lower=((1.0, 1.0),))
print("  radius =", wright_radius(bspec))
print("  z=0.2 (inside 0.9*radius):", wright_eval(bspec, 0.2).value)
try:
    wright_eval(bspec, 0.24)
except DivergenceError as exc:
    print("  z=0.24 refused:", exc)

print("\npFq closed forms:")
print("  0F0(0.7) =", pfq_eval([], [], 0.7).value, " exp:", math.exp(0.7))
print("  1F0(2; 0.5) =", pfq_eval([2.0], [], 0.5).value, " (1-z)^-2:", 4.0)

print("\nWeight-1 reduction identity, both routes:")
for upper, lower, z in [([2.0, 3.0], [4.0], 0.3), ([0.5], [1.5], -1.0)]:
    lhs, rhs = wright_reduce_check(upper, lower, z)
    print(f"  upper={upper} lower={lower} z={z}: wright={lhs:.15g} "
          f"prefactored pFq={rhs:.15g} rel diff {abs(lhs-rhs)/abs(lhs):.1e}")
