"""Decomposing a single-qudit Clifford into Fourier and phase gates.

A 2x2 matrix over Z_D with determinant 1 represents a qudit Clifford up
to phase. When no entry is a unit mod D the closed form does not apply
directly; a Euclid loop on the right column surfaces the column gcd
(always a unit) in the top-right corner first.
"""

import numpy as np

from cliffsynth import (
    Dimension,
    SymplecticMatrix,
    decompose_single,
    format_gate,
    sequence_matrix,
)

dim = Dimension.of(6)           # matrices live mod D = 12
m = SymplecticMatrix(dim, np.array([[10, 9], [3, 4]]))
print("target over Z_12 (no entry is a unit, det = 13 = 1 mod 12):")
print(m.mat)

seq = decompose_single(m)
print("\nsynthesized program (first line applied first):")
for g in seq:
    print(" ", format_gate(g))
print("gate count:", len(seq))

recomposed = sequence_matrix(seq)
print("\nrecomposed matrix equals the target:", recomposed == m)

# a unit entry admits the five-gate closed form
m2 = SymplecticMatrix(Dimension.of(5), np.array([[1, 1], [0, 1]]))
print("\nclosed-form case over Z_5:", [format_gate(g) for g in decompose_single(m2)])
