"""
Modular symbols and the echelon basis of the invariant cusp forms
=================================================================

Weight-2 modular symbols for Gamma_0(p) present the cusp forms exactly over
Q.  Since every form of prime level is new, the Atkin-Lehner involution
acts on the cuspidal subspace as -U_p, and its +1 eigenspace corresponds to
the quotient curve.  Echelonizing the rational eigenform traces gives the
unique basis f_i = q^{c_i} + ... with increasing pivots.
"""

from wplus import ModSymSpace, atkin_lehner_plus, good_basis, wt_infinity

space = ModSymSpace(67)
print("p = 67: quotient dimension", space.dim, " genus of X_0(67) =", space.genus)

plus = atkin_lehner_plus(space)
print("dimension of the +1 eigenspace:", len(plus[0]))

gb = good_basis(67, 12)
print("pivots:", gb.pivots, " p-integral:", gb.p_integral)
for i, f in enumerate(gb.forms):
    print(f"  f_{i + 1} =", [f.coefficient(n) for n in range(1, 9)], "...")

# The cusp of the quotient curve is a Weierstrass point exactly when the
# pivots are not 1..g.  For p = 67 they are; p = 109 is the first prime
# where a pivot is skipped.
print("\nwt(infinity) at 67:", wt_infinity(gb))
gb109 = good_basis(109, 30)
print("p = 109: pivots", gb109.pivots, "-> wt(infinity) =", wt_infinity(gb109))

# The genus-0 quotients (the small "moonshine" primes) have empty bases.
print("\nquotient genus at p = 71:", good_basis(71, 10).g)
