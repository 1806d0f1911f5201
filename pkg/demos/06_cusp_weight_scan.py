"""
Scanning the cusp weight across primes
======================================

The Weierstrass weight of the cusp on the quotient curve is read off the
basis pivots: wt = sum(c_j - j).  Scanning primes shows the classical
threshold picture: weight 0 at every prime up to 107, sporadic positive
weights starting at 109, weight 0 again at 389, and positive weight at
every prime beyond.
"""

from wplus import Config, scan_primes

cfg = Config(use_cache=False)

agg = scan_primes(67, 199, cfg, basis_only=True)
print("primes in [67, 199] with a Weierstrass point at the cusp:")
print(" ", agg["summary"]["wt_positive"])

threshold = scan_primes(383, 409, cfg, basis_only=True)
print("\naround the threshold:")
for r in threshold["results"]:
    marker = "<-- weight 0" if r["wt_inf"] == 0 else ""
    print(f"  p = {r['p']:4d}: pivots {r['pivots']}  wt = {r['wt_inf']}  {marker}")

# every prime in (389, 440] has positive weight
tail = scan_primes(390, 440, cfg, basis_only=True)
print("\n(389, 440]:", {r["p"]: r["wt_inf"] for r in tail["results"]})
