"""Logical Clifford gates on a small system embedded in a larger qudit.

A qubit can be hidden inside a dimension-24 qudit with logical operators
X_L = X^3 and Z_L = Z^4. Words X^(6a) Z^(8b) act as identity on the
embedded qubit, so a qudit Clifford implements a logical gate whenever
its action matches the target modulo that lattice. The feasibility
search below is exhaustive, so an "infeasible" verdict is a proof.
"""

import numpy as np

from cliffsynth import (
    Embedding,
    check_symmetric_logical_action,
    is_symplectic_embedding,
    logical_basis_state,
    logical_feasible_single,
    logical_feasible_sum,
    verify_single_witness,
)

emb = Embedding(2, 3, 4)
print(f"qubit inside d={emb.d}: X_L = X^{emb.r_x}, Z_L = Z^{emb.r_z}")
print("encoded |0>_L support:",
      np.nonzero(np.abs(logical_basis_state(emb, 0)) > 1e-12)[0].tolist())

qft = logical_feasible_single(emb, "qft")
print("\nlogical Fourier witness:", "none (proof by exhaustion)" if qft is None else qft.mat.tolist())

phase = logical_feasible_single(emb, "phase")
print("logical phase witness:", None if phase is None else phase.mat.tolist())
if phase is not None:
    # the witness is the fourth phase power: X^3 -> X^3 Z^12, and Z^12
    # differs from the Z^4 target by the identity-acting Z^8
    print("witness verifies by substitution:", verify_single_witness(emb, "phase", phase))

print("logical sum witness (always the plain sum gate):")
print(logical_feasible_sum(emb).mat)
print("embedding admits all single-qudit logical gates:", is_symplectic_embedding(emb))

# symmetric embeddings admit everything, and the ambient gates themselves
# act as the logical gates (checked on the dense unitaries)
for n, r in ((2, 2), (3, 2), (3, 3)):
    e = Embedding(n, r, r)
    print(f"\nsymmetric n={n}, r={r} (d={e.d}):",
          "symplectic:", is_symplectic_embedding(e),
          "| ambient gates act logically:", check_symmetric_logical_action(e))
