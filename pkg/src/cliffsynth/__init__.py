"""Exact synthesis of qudit Clifford operations.

Clifford operations on n qudits of dimension d are represented, up to
global phase, by 2n x 2n symplectic matrices over Z_D (D = d for odd d,
2d for even d). This package decomposes any such matrix into an explicit
program over three gate families (Fourier, phase-shift, sum), transports
Pauli words into one another, verifies programs both symplectically and
against a dense-unitary oracle, and decides whether logical Clifford
gates survive an embedding of a small system into a larger qudit.
"""

from .embedding import (
    Embedding,
    check_symmetric_logical_action,
    is_symplectic_embedding,
    logical_basis_state,
    logical_feasible_single,
    logical_feasible_sum,
    verify_single_witness,
)
from .errors import (
    CliffSynthError,
    DegenerateWordError,
    DimensionMismatchError,
    MalformedMatrixError,
    NonSymplecticError,
    ParseError,
    ScaleLimitError,
)
from .modring import Dimension, euclid_steps, gcd0, mod_inverse
from .pauli import PauliWord, commutes, format_word, parse_word, sip, sip_matrix_form
from .symplectic import (
    Fourier,
    Gate,
    GateSequence,
    Phase,
    Sum,
    SymplecticMatrix,
    apply_to_word,
    compose,
    format_gate,
    format_matrix_text,
    gate_matrix,
    inverse,
    is_symplectic,
    merge_gates,
    parse_gate_line,
    parse_matrix_text,
    sequence_matrix,
    symplectic_form,
)
from .synthesis import (
    SynthesisResult,
    decompose,
    decompose_single,
    generalized_peg,
    peg_reduce,
    scale_sequence,
    sum_peg,
    swap_sequence,
    synthesize,
    transport,
)
from .unitary import (
    DenseOperator,
    check_program,
    equal_up_to_phase,
    gate_unitary,
    omega,
    omega_hat,
    pauli_unitaries,
    relative_phase,
    sequence_unitary,
    word_unitary,
)

__version__ = "0.1.0"

__all__ = [
    "CliffSynthError",
    "DegenerateWordError",
    "DenseOperator",
    "Dimension",
    "DimensionMismatchError",
    "Embedding",
    "Fourier",
    "Gate",
    "GateSequence",
    "MalformedMatrixError",
    "NonSymplecticError",
    "ParseError",
    "PauliWord",
    "Phase",
    "ScaleLimitError",
    "Sum",
    "SymplecticMatrix",
    "SynthesisResult",
    "apply_to_word",
    "check_program",
    "check_symmetric_logical_action",
    "commutes",
    "compose",
    "decompose",
    "decompose_single",
    "equal_up_to_phase",
    "euclid_steps",
    "format_gate",
    "format_matrix_text",
    "format_word",
    "gate_matrix",
    "gate_unitary",
    "gcd0",
    "generalized_peg",
    "inverse",
    "is_symplectic",
    "is_symplectic_embedding",
    "logical_basis_state",
    "logical_feasible_single",
    "logical_feasible_sum",
    "merge_gates",
    "mod_inverse",
    "omega",
    "omega_hat",
    "parse_gate_line",
    "parse_matrix_text",
    "parse_word",
    "pauli_unitaries",
    "peg_reduce",
    "relative_phase",
    "scale_sequence",
    "sequence_matrix",
    "sequence_unitary",
    "sip",
    "sip_matrix_form",
    "sum_peg",
    "swap_sequence",
    "symplectic_form",
    "synthesize",
    "transport",
    "verify_single_witness",
    "word_unitary",
]
