"""Dense complex-matrix oracle for the classical representation.

Builds exact unitaries for the shift/clock Pauli operators and the three
generator gates, evaluates gate programs, and checks conjugation actions
up to global phase. Everything here is desk-scale floating point with a
1e-9 default tolerance; the classical modules stay exact.

Phase conventions: omega = exp(2*pi*i/d) and omega_hat = exp(2*pi*i/D),
so omega_hat is the canonical square root of omega when d is even.
The phase-shift gate is diag(omega^(j*(j-1)/2)) for odd d and
diag(omega_hat^(j*j)) for even d; with these choices the conjugation
relations X -> XZ (odd) and X -> omega_hat * XZ (even) hold exactly.
The sum gate is the plain permutation |i, j> -> |i, i+j mod d> in every
dimension, which conjugates all four two-qudit Pauli generators to their
images with no stray phase.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import DimensionMismatchError, ScaleLimitError
from .modring import Dimension
from .pauli import PauliWord
from .symplectic import (
    Fourier,
    Gate,
    GateSequence,
    Phase,
    SymplecticMatrix,
    apply_to_word,
)

# Dense conjugation is O(d^(3n)); keep oracle runs to fractions of a second.
MAX_DENSE_SIDE = 256


@dataclass(frozen=True)
class DenseOperator:
    """A d^n x d^n complex matrix tagged with its qudit layout."""

    dim: Dimension
    n: int
    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=np.complex128)
        side = self.dim.d**self.n
        if m.shape != (side, side):
            raise DimensionMismatchError(
                f"operator for d={self.dim.d}, n={self.n} must be {side}x{side}, "
                f"got {m.shape}"
            )
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def side(self) -> int:
        return self.matrix.shape[0]

    def dagger(self) -> "DenseOperator":
        return DenseOperator(self.dim, self.n, self.matrix.conj().T)

    def __matmul__(self, other: "DenseOperator") -> "DenseOperator":
        if self.dim != other.dim or self.n != other.n:
            raise DimensionMismatchError("cannot compose operators of different layout")
        return DenseOperator(self.dim, self.n, self.matrix @ other.matrix)

    def is_unitary(self, tol: float = 1e-9) -> bool:
        eye = np.eye(self.side)
        return bool(np.max(np.abs(self.matrix @ self.matrix.conj().T - eye)) <= tol)


def omega(dim: Dimension) -> complex:
    """Primitive d-th root of unity."""
    return np.exp(2j * np.pi / dim.d)


def omega_hat(dim: Dimension) -> complex:
    """Primitive D-th root of unity (square root of omega for even d)."""
    return np.exp(2j * np.pi / dim.D)


def pauli_unitaries(dim: Dimension) -> tuple[DenseOperator, DenseOperator]:
    """The single-qudit shift X and clock Z unitaries."""
    d = dim.d
    x = np.zeros((d, d), dtype=np.complex128)
    for col in range(d):
        x[(col + 1) % d, col] = 1.0
    z = np.diag(omega(dim) ** np.arange(d))
    return DenseOperator(dim, 1, x), DenseOperator(dim, 1, z)


def _fourier_1q(dim: Dimension) -> np.ndarray:
    d = dim.d
    j, k = np.meshgrid(np.arange(d), np.arange(d), indexing="xy")
    # column j holds omega^(j*k) / sqrt(d)
    return omega(dim) ** (j * k) / np.sqrt(d)


def _phase_1q(dim: Dimension, power: int) -> np.ndarray:
    d = dim.d
    j = np.arange(d)
    if d % 2 == 1:
        phases = omega(dim) ** ((j * (j - 1) // 2) % d)
    else:
        phases = omega_hat(dim) ** ((j * j) % dim.D)
    return np.diag(phases**power)


def _embed_single(op: np.ndarray, i: int, n: int, d: int) -> np.ndarray:
    acc = np.eye(1, dtype=np.complex128)
    for q in range(n):
        acc = np.kron(acc, op if q == i else np.eye(d, dtype=np.complex128))
    return acc


def _sum_permutation(control: int, target: int, power: int, n: int, d: int) -> np.ndarray:
    side = d**n
    m = np.zeros((side, side), dtype=np.complex128)
    for digits in product(range(d), repeat=n):
        src = 0
        for v in digits:
            src = src * d + v
        out = list(digits)
        out[target] = (out[target] + power * out[control]) % d
        dst = 0
        for v in out:
            dst = dst * d + v
        m[dst, src] = 1.0
    return m


def gate_unitary(g: Gate, n: int, dim: Dimension) -> DenseOperator:
    """Tensor-embedded unitary of a generator gate (qudit 0 leftmost)."""
    d = dim.d
    if isinstance(g, Fourier):
        if g.qudit >= n:
            raise DimensionMismatchError(f"gate {g} out of range for n={n}")
        return DenseOperator(dim, n, _embed_single(_fourier_1q(dim), g.qudit, n, d))
    if isinstance(g, Phase):
        if g.qudit >= n:
            raise DimensionMismatchError(f"gate {g} out of range for n={n}")
        return DenseOperator(dim, n, _embed_single(_phase_1q(dim, g.power), g.qudit, n, d))
    if max(g.control, g.target) >= n:
        raise DimensionMismatchError(f"gate {g} out of range for n={n}")
    return DenseOperator(dim, n, _sum_permutation(g.control, g.target, g.power, n, d))


def word_unitary(w: PauliWord) -> DenseOperator:
    """Tensor product of X^a Z^b factors (X powers left of Z powers)."""
    x, z = pauli_unitaries(w.dim)
    acc = np.eye(1, dtype=np.complex128)
    for a, b in zip(w.xexp, w.zexp):
        factor = np.linalg.matrix_power(x.matrix, a) @ np.linalg.matrix_power(z.matrix, b)
        acc = np.kron(acc, factor)
    return DenseOperator(w.dim, w.n, acc)


def _check_scale(dim: Dimension, n: int) -> None:
    if dim.d**n > MAX_DENSE_SIDE:
        raise ScaleLimitError(
            f"dense oracle capped at side {MAX_DENSE_SIDE}, need {dim.d**n}"
        )


def sequence_unitary(seq: GateSequence) -> DenseOperator:
    """Unitary of a gate program (first gate applied first)."""
    _check_scale(seq.dim, seq.n)
    side = seq.dim.d**seq.n
    acc = np.eye(side, dtype=np.complex128)
    for g in seq.gates:
        acc = gate_unitary(g, seq.n, seq.dim).matrix @ acc
    return DenseOperator(seq.dim, seq.n, acc)


def equal_up_to_phase(a: DenseOperator, b: DenseOperator, tol: float = 1e-9) -> bool:
    """True iff a = lambda*b for a unit scalar, assuming both are unitary.

    Uses |trace(a_dagger b)| >= side*(1-tol), which for unitaries holds
    exactly when they are proportional.
    """
    if a.side != b.side:
        raise DimensionMismatchError(f"operator sizes differ: {a.side} vs {b.side}")
    overlap = abs(np.trace(a.matrix.conj().T @ b.matrix))
    return bool(overlap >= a.side * (1.0 - tol))


def relative_phase(a: DenseOperator, b: DenseOperator) -> complex:
    """The scalar lambda with a ~ lambda*b (meaningful when proportional)."""
    if a.side != b.side:
        raise DimensionMismatchError(f"operator sizes differ: {a.side} vs {b.side}")
    return complex(np.trace(b.matrix.conj().T @ a.matrix) / a.side)


def check_program(seq: GateSequence, m: SymplecticMatrix, tol: float = 1e-9) -> bool:
    """Verify a gate program realizes a classical matrix, up to phases.

    For each generator word g (single X_i, single Z_i), the program's
    conjugation of g must match the word obtained by applying the matrix
    to g's exponent vector, up to a global phase.
    """
    if seq.n != m.n or seq.dim != m.dim:
        raise DimensionMismatchError("program and matrix disagree on layout")
    _check_scale(seq.dim, seq.n)
    u = sequence_unitary(seq)
    u_dag = u.dagger()
    for i in range(seq.n):
        for word in (
            PauliWord.x_generator(i, seq.n, seq.dim),
            PauliWord.z_generator(i, seq.n, seq.dim),
        ):
            conjugated = u @ word_unitary(word) @ u_dag
            expected = word_unitary(apply_to_word(m, word))
            if not equal_up_to_phase(conjugated, expected, tol):
                return False
    return True
