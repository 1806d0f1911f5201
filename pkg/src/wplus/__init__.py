"""Weierstrass points on the Atkin-Lehner quotient of X_0(p), mod p.

For a prime p the package computes the reduced echelon basis of the
w_p-invariant weight-2 cusp forms, the supersingular polynomial and its
linear/quadratic split, the Hilbert class polynomials attached to the
w_p-fixed points, and the divisor polynomial F_p(x) of the Weierstrass
points of the quotient curve, verifying the congruence

    F_p(x) = S_q(x)^{g(g-1)} * H(x)^2  (mod p)

together with every identity used along the way.  Everything is exact:
rational arithmetic for q-expansions and linear algebra, F_p arithmetic
for the mod-p pipeline, big floats only inside the class-polynomial
evaluation (with verified integer rounding).
"""

from .config import Config
from .errors import WplusError
from .fppoly import FpPoly, is_prime, legendre, poly_factor, poly_sqrt
from .level1 import (bernoulli, cp_factor, delta, divisor_polynomial,
                     eisenstein, gp_poly, j_function, miller_basis,
                     square_divisor_relation, weight_profile)
from .modsym import (GoodBasis, ModSymSpace, atkin_lehner_plus, build_space,
                     good_basis, wt_infinity)
from .pipeline import scan_primes, verify_prime
from .report import VerificationReport
from .series import FpSeries, QExpansion, series_arith
from .supersingular import (ClassPolyData, SupersingularSplit, class_number,
                            class_poly, fixed_point_poly, reduced_forms,
                            ss_oracle, ss_polys, verify_fixedlinear)
from .weierstrass import (elliptic_exponents, extract_Fp, lift_to_level1,
                          theta, wronskian)

__version__ = "0.1.0"

__all__ = [
    "Config", "WplusError", "FpPoly", "is_prime", "legendre", "poly_factor",
    "poly_sqrt", "bernoulli", "cp_factor", "delta", "divisor_polynomial",
    "eisenstein", "gp_poly", "j_function", "miller_basis",
    "square_divisor_relation", "weight_profile", "GoodBasis", "ModSymSpace",
    "atkin_lehner_plus", "build_space", "good_basis", "wt_infinity",
    "scan_primes", "verify_prime", "VerificationReport", "FpSeries",
    "QExpansion", "series_arith", "ClassPolyData", "SupersingularSplit",
    "class_number", "class_poly", "fixed_point_poly", "reduced_forms",
    "ss_oracle", "ss_polys", "verify_fixedlinear", "elliptic_exponents",
    "extract_Fp", "lift_to_level1", "theta", "wronskian",
]
