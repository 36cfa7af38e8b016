"""
Graphs, their second eigenvalue and their girth
===============================================

"""

import math

from twistcode import graphs

# K_n has spectrum {n-1, -1, ..., -1}; the second eigenvalue is negative
K8 = graphs.complete(8)
print("K8 spectrum", graphs.spectrum(K8).round(6))
print("lambda2 =", graphs.second_eigenvalue(K8), " max |lambda| below top =", graphs.second_eigenvalue_abs(K8))

# cycles: lambda2 = 2 cos(2 pi / n)
for n in (5, 8, 13):
    C = graphs.cycle(n)
    print(f"C{n}: lambda2 = {graphs.second_eigenvalue(C):.9f}, closed form {2 * math.cos(2 * math.pi / n):.9f}")

# the Petersen graph: 3-regular, girth 5, lambda2 = 1
P = graphs.petersen()
print("Petersen: degree", graphs.is_regular(P), "girth", graphs.girth(P), "lambda2", round(graphs.second_eigenvalue(P), 12))

# a random 4-regular graph and its cycle space
G = graphs.random_regular(20, 4, seed=1)
print("random 4-regular on 20 vertices: girth", graphs.girth(G),
      "cycle space dim", graphs.cycle_space_dimension(G), "= |E|-|V|+c =", G.m - G.n + graphs.components(G))

# sparse random graphs with 1.5N edges have short cycles (Moore bound)
for N in (64, 256, 1024):
    G = graphs.random_graph(N, math.ceil(1.5 * N), seed=0)
    print(f"N={N}: girth {graphs.girth(G)}, 4 log2 N = {4 * math.log2(N):.0f}")

# graphs round-trip through the text format
text = graphs.format_graph(P)
assert graphs.parse_graph(text).edges == P.edges
print(text.splitlines()[0])
