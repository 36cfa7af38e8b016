"""
Bit-packed linear algebra over GF(2) and small linear codes
===========================================================

Matrices store 64 entries per machine word.  Rank, kernels and spans all
come from one XOR row reduction.
"""

import numpy as np

from twistcode import codes
from twistcode.gf2 import BitMatrix, BitVector, kernel_basis, rank, row_reduce

# a random 6 x 10 matrix, then its reduced row echelon form
rng = np.random.default_rng(3)
A = BitMatrix.random(6, 10, rng)
print(A)
R, pivots = row_reduce(A)
print("rank", rank(A), "pivot columns", pivots)

# rank + nullity = number of columns
K = kernel_basis(A)
print("kernel dimension", len(K))
assert rank(A) + len(K) == A.cols
assert all((A @ z).is_zero() for z in K)

# the Hamming [7,4] code: column j of H is j+1 written in binary
H74 = codes.hamming_7_4()
print("Hamming: n =", H74.length, "k =", H74.dimension, "d =", codes.min_distance(H74))
print("rate", codes.rate(H74))

# a single flipped bit is found by its syndrome
c = next(w for w in H74.codewords() if w.weight() == 3)
noisy = c + BitVector.unit(7, 4)
print("syndrome of error in position 4:", (H74.parity_check @ noisy).tolist())

# parity and repetition codes are duals of each other
print("parity(6):", codes.parity(6).dimension, codes.min_distance(codes.parity(6)))
print("repetition(6):", codes.repetition(6).dimension, codes.min_distance(codes.repetition(6)))
