"""Building the two-qudit swap from sum and Fourier gates.

The fixed nine-gate program below exchanges two qudits in any dimension.
For qubits, and qubits alone, sandwiching a sum gate between transversal
Fourier pairs reverses its control and target, which is why qubit swaps
can be written with three alternating CNOTs.
"""

import numpy as np

from cliffsynth import (
    Dimension,
    GateSequence,
    format_gate,
    gate_matrix,
    sequence_matrix,
    sequence_unitary,
    swap_sequence,
)
from cliffsynth.symplectic import Fourier, Sum

SWAP = np.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])

for d in (2, 3, 7):
    dim = Dimension.of(d)
    seq = swap_sequence(0, 1, 2, dim)
    print(f"d={d}: program {' '.join(format_gate(g) for g in seq)}")
    print("   matrix equals swap:", np.array_equal(sequence_matrix(seq).mat, SWAP))

# dense action: |i>|j> -> |j>|i> up to a global phase
d = 3
dim = Dimension.of(d)
u = sequence_unitary(swap_sequence(0, 1, 2, dim)).matrix
state = np.zeros(d * d)
state[1 * d + 2] = 1.0          # |1,2>
out = u @ state
print("\n|1,2> maps to basis state index", int(np.argmax(np.abs(out))), "= |2,1>")

# the qubit-only reversal identity, and its failure one dimension up
for d in (2, 3):
    dim = Dimension.of(d)
    rr = sequence_matrix(GateSequence((Fourier(0), Fourier(1)), 2, dim)).mat
    sandwich = rr @ gate_matrix(Sum(0, 1, 1), 2, dim) @ rr % dim.D
    reversed_sum = gate_matrix(Sum(1, 0, 1), 2, dim)
    modulus = 2 if d == 2 else dim.D
    same = np.array_equal(sandwich % modulus, reversed_sum % modulus)
    print(f"d={d}: Fourier-sandwiched sum equals reversed sum (mod {modulus}):", same)
