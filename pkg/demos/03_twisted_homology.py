"""
Homology with local coefficients
================================

A local system puts a vector space on each simplex and a linear map on each
face relation.  Homology is computed from the twisted boundary matrices.
"""

from twistcode.homology import (
    SimplicialComplex,
    betti_numbers,
    boundary_matrix,
    constant_local_system,
    gauge_local_system,
    homology,
    random_complex,
)

# a hollow tetrahedron is a 2-sphere: Betti numbers 1, 0, 1
sphere = SimplicialComplex(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
print("sphere f-vector", sphere.f_vector(), "betti", betti_numbers(sphere), "chi", sphere.euler_characteristic())

# constant coefficients F_2^m just multiply every Betti number by m
F3 = constant_local_system(sphere, 3)
print("with F_2^3 coefficients:", [homology(sphere, F3, k).dimension for k in range(3)])

# a gauge system conjugates every fibre by a random invertible matrix
X = random_complex(9, 7, 4, seed=5)
G = gauge_local_system(X, 2, seed=5)
d1, d2 = boundary_matrix(X, G, 1), boundary_matrix(X, G, 2)
print("d1 d2 is zero:", (d1 @ d2).is_zero())
print("gauge dims   ", [homology(X, G, k).dimension for k in range(3)])
print("constant dims", [homology(X, constant_local_system(X, 2), k).dimension for k in range(3)])

# Euler identity: sum (-1)^k f_k = sum (-1)^k b_k
b = betti_numbers(X)
print("chi", X.euler_characteristic(), "=", sum((-1) ** k * v for k, v in enumerate(b)))
