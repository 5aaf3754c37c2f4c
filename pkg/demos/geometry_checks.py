"""Exact geometry of parabola points: concyclicity, slopes, crossing orders.

All arithmetic is over Fraction; every claim printed here is an exact
identity, not a float comparison.
"""

from fractions import Fraction

from braidcert.geometry import (
    check_growth_case23,
    circle_through,
    crossing_order,
    delta_det,
    delta_factored,
    fourth_intersection,
    growth_sequence_case1,
    slope_kappa,
    upgrade_to_case23,
)

# Four points (x, x^2) lie on one circle exactly when the abscissas sum to 0;
# the compatibility determinant factors into pairwise differences times that
# sum.
print("delta(1,2,3,4)        =", delta_det(1, 2, 3, 4))
print("factored form         =", delta_factored(1, 2, 3, 4))
print("delta(-6,1,2,3)       =", delta_det(-6, 1, 2, 3), "(concyclic)")

# A circle through three points of the positive branch re-enters the parabola
# only at a negative abscissa: minus the sum of the three.
ts = (Fraction(1), Fraction(2), Fraction(3))
s = fourth_intersection(*ts)
center, r2 = circle_through(*((t, t * t) for t in ts))
onto = (s - center[0]) ** 2 + (s * s - center[1]) ** 2 == r2
print()
print("fourth intersection of the circle through t = 1, 2, 3:", s,
      "| lies on the circle:", onto)

# With rapidly growing abscissas the tangent slope at the top point of a
# triple is pinched between -(tl+tm+1) and -(tl+tm), which freezes the order
# in which a point passing nearby meets the circles.
cfg = growth_sequence_case1(5)
print()
print("growth sequence:", ", ".join(str(t) for t in cfg.ts[:4]), "...")
kappa = slope_kappa(cfg.t(3), cfg.t(1), cfg.t(2))
print("slope at the third point over the pair (1,2):", float(kappa))
print("bounds:", -(cfg.t(1) + cfg.t(2) + 1) < kappa < -(cfg.t(1) + cfg.t(2)))

print()
print("crossing order below point 4 (case 1):", crossing_order(cfg, 4, 1))

# Cases 2 and 3 need the stronger growth condition involving the minimal
# angle and the largest circumradius of the prefix.
cfg23 = upgrade_to_case23(cfg)
print("upgraded sequence passes the case-2/3 condition:", check_growth_case23(cfg23))
print("crossing order straddling point 3 (case 2):", crossing_order(cfg23, 3, 2))
print("crossing order above point 1 (case 3):   ", crossing_order(cfg23, 1, 3))
