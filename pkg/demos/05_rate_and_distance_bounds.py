"""
Rate and distance bounds
========================

rate >= 2r - 1 holds for any d-regular graph whose local codes have rate r.
The distance estimate ((delta - lambda/d) / (1 - lambda/d))^2 needs care when
lambda is negative.
"""

from fractions import Fraction

from twistcode import graphs
from twistcode.codes import relative_distance
from twistcode.realization import build_graph_code, distance_bound, rate_bound, report, uniform_assignment

# rate bound for Hamming local codes
print("rate bound at r = 4/7:", rate_bound(Fraction(4, 7)))

# on K8, lambda = -1 is recognised as an exact integer
K8 = graphs.complete(8)
rep = report(build_graph_code(K8, uniform_assignment(K8, "hamming74")))
print("lambda2 exact:", rep["lambda2_exact"], " bound:", rep["distance_bound"], " measured:", rep["relative_distance"])
print("bound holds here:", rep["distance_bound_holds"])

# the squared estimate overshoots for negative lambda; the unsquared form
# delta (delta - lambda/d) / (1 - lambda/d) matches K8 exactly
delta, lam, d = Fraction(3, 7), Fraction(-1), 7
print("squared form:", distance_bound(delta, lam, d), " unsquared form:", delta * (delta - lam / d) / (1 - lam / d))

# K4 with parity local codes is the smallest counterexample
K4 = graphs.complete(4)
inst = build_graph_code(K4, uniform_assignment(K4, "parity"))
print("K4/parity: relative distance", relative_distance(inst.code), "vs squared bound", distance_bound(Fraction(2, 3), Fraction(-1), 3))

# with lambda >= 0 the squared form is fine, e.g. the Petersen graph with parity codes
P = graphs.petersen()
rep = report(build_graph_code(P, uniform_assignment(P, "parity")))
print("Petersen/parity: bound", rep["distance_bound"], "measured", rep["relative_distance"], "holds", rep["distance_bound_holds"])
