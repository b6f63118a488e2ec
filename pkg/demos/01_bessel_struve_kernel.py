"""Tour of the Bessel-Struve kernel S_alpha and its companion functions.

The kernel is the entire function

    S_alpha(z) = sum_n gamma(alpha+1) gamma((n+1)/2)
                 / (sqrt(pi) n! gamma(n/2 + alpha + 1)) * z**n,

normalized so S_alpha(0) = 1 for every order alpha > -1.  Particular
orders collapse to elementary and Bessel/Struve combinations; this script
evaluates all of them side by side, including the relation the audit
flagged as misprinted (z*S_1 = 2*I_1 + L_1, which is false: the correct
factor on L_1 is 2).
"""

import math

from besselstruve import bessel_i, kernel_coeff, kernel_eval, struve_l

print("S_alpha(0) = 1 for every order:")
for alpha in (-0.5, 0.0, 0.5, 1.0, 1.7, 4.0):
    print(f"  alpha={alpha:5.2f}: {kernel_eval(alpha, 0.0).value}")

print("\nFirst coefficients at alpha = 0 (these are the I0+L0 coefficients):")
print(" ", [round(kernel_coeff(0.0, n), 10) for n in range(6)])

print("\nExponential specializations on a small grid:")
print("   z      S_{-1/2}(z)        exp(z)             z*S_{1/2}(z)       exp(z)-1")
for z in (-3.0, -1.0, 0.5, 1.0, 2.0, 5.0):
    s_m = kernel_eval(-0.5, z).value
    s_p = z * kernel_eval(0.5, z).value
    print(f"  {z:4} {s_m:18.12g} {math.exp(z):18.12g} {s_p:18.12g} {math.expm1(z):18.12g}")

print("\nRelation S_0(z) = I_0(z) + L_0(z):")
for z in (-3.0, 0.5, 2.0, 5.0):
    lhs = kernel_eval(0.0, z).value
    rhs = bessel_i(0, z).value + struve_l(0, z).value
    print(f"  z={z:4}: S_0={lhs:.15g}  I_0+L_0={rhs:.15g}  rel diff {abs(lhs-rhs)/abs(rhs):.2e}")

print("\nRelation for order 1 -- note the factor 2 on L_1:")
print("   z     z*S_1(z)          2*I_1+2*L_1       2*I_1+L_1 (misprinted variant)")
for z in (-3.0, 0.5, 2.0, 5.0):
    lhs = z * kernel_eval(1.0, z).value
    good = 2.0 * (bessel_i(1, z).value + struve_l(1, z).value)
    printed = 2.0 * bessel_i(1, z).value + struve_l(1, z).value
    print(f"  {z:4} {lhs:17.12g} {good:17.12g} {printed:17.12g}")

print("\nSeries diagnostics (terms used, tail estimate):")
for z in (1.0, 10.0, 50.0):
    sv = kernel_eval(0.3, z)
    print(f"  z={z:5}: value={sv.value:.12g} terms={sv.terms_used} "
          f"tail={sv.tail_estimate:.2e} converged={sv.converged}")
