"""
Supersingular polynomials and their linear/quadratic split
==========================================================

S_p(x) is the monic polynomial over F_p whose roots are the supersingular
j-invariants.  Every root lives in F_{p^2}, so S_p factors into linear and
irreducible quadratic pieces; the package computes the split from level-1
series and cross-checks small primes against brute-force point counting.
"""

from wplus import ss_oracle, ss_polys
from wplus.supersingular import is_supersingular_by_counting

# The j = 0 curve over F_5 has exactly 6 points, so j = 0 is supersingular.
print("j = 0 supersingular over F_5:", is_supersingular_by_counting(0, 5))

for p in (5, 11, 13, 67):
    split = ss_polys(p)
    print(f"\np = {p}")
    print("  S_p      =", split.S_p)
    print("  S_l      =", split.S_l, f"(degree {split.S_l.degree()})")
    print("  S_q      =", split.S_q, f"(degree {split.S_q.degree()})")
    print("  j=0 supersingular:", bool(split.alpha_rho),
          " j=1728 supersingular:", bool(split.alpha_i))

# An independent oracle: the Hasse polynomial in the Legendre parameter,
# eliminated against the degree-6 cover lambda -> j by a resultant, with
# membership of j = 0, 1728 corrected by point counts.
print("\noracle agreement for p <= 103:",
      all(ss_oracle(p) == ss_polys(p).S_p
          for p in (5, 7, 11, 13, 17, 37, 67, 101, 103)))

# deg S_p = genus of X_0(p) + 1: six supersingular j-invariants for p = 67,
# two rational and two conjugate quadratic pairs.
split = ss_polys(67)
print("factors of S_67:",
      [(str(f), e) for f, e in split.S_p.factor()])
