"""
Hilbert class polynomials and Atkin-Lehner fixed points
=======================================================

H_D(x) is the monic integer polynomial whose roots are the j-invariants of
elliptic curves with CM by the order of discriminant -D; it is computed by
enumerating reduced binary quadratic forms and evaluating j at the CM
points with big floats, escalating precision until the coefficients round
cleanly to integers.
"""

from wplus import class_number, class_poly, fixed_point_poly, reduced_forms
from wplus import ss_polys, verify_fixedlinear
from wplus.fppoly import FpPoly

# Tiny discriminants: the elliptic points themselves.
print("H_3  :", class_poly(3).H_D)      # x        (j = 0)
print("H_4  :", class_poly(4).H_D)      # x - 1728 (j = 1728)
print("H_7  :", class_poly(7).H_D)      # x + 3375

# Class number = number of primitive reduced forms.
print("\nreduced forms of discriminant -20:", reduced_forms(20))
print("h(-67) =", class_number(67), " h(-268) =", class_number(268))

data = class_poly(268)
print(f"\nH_268 (computed at {data.float_precision_bits} bits):")
print(" ", data.H_D)

# The fixed points of the Atkin-Lehner involution on X_0(p) carry CM by
# sqrt(-p); their divisor polynomial is H_{4p}, times H_p when p = 3 mod 4.
hp, sigma = fixed_point_poly(67)
print(f"\nfixed-point polynomial of X_0(67): degree sigma = {sigma}")

# Mod p it collapses onto the square of the linear supersingular part:
ok, hp_mod, _ = verify_fixedlinear(67)
split = ss_polys(67)
print("H_67 mod 67              =", hp_mod)
print("(linear supersingular)^2 =", split.S_l * split.S_l)
print("congruence verified:", ok)
