import itertools

import numpy as np
import pytest

from cliffsynth import (
    DenseOperator,
    Dimension,
    GateSequence,
    PauliWord,
    ScaleLimitError,
    SymplecticMatrix,
    check_program,
    equal_up_to_phase,
    gate_matrix,
    gate_unitary,
    omega,
    omega_hat,
    pauli_unitaries,
    relative_phase,
    sequence_unitary,
    sip,
    word_unitary,
)
from cliffsynth.symplectic import Fourier, Phase, Sum


def close(a, b, tol=1e-9):
    return np.max(np.abs(np.asarray(a) - np.asarray(b))) <= tol


class TestPauliUnitaries:
    def test_qubit_matrices(self):
        x, z = pauli_unitaries(Dimension.of(2))
        assert close(x.matrix, [[0, 1], [1, 0]])
        assert close(z.matrix, [[1, 0], [0, -1]])

    @pytest.mark.parametrize("d", range(2, 7))
    def test_order_d(self, d):
        x, z = pauli_unitaries(Dimension.of(d))
        eye = np.eye(d)
        assert close(np.linalg.matrix_power(x.matrix, d), eye)
        assert close(np.linalg.matrix_power(z.matrix, d), eye)
        for r in range(1, d):
            assert not close(np.linalg.matrix_power(x.matrix, r), eye)
            assert not close(np.linalg.matrix_power(z.matrix, r), eye)

    @pytest.mark.parametrize("d", range(2, 7))
    def test_xz_power_scalar_law(self, d):
        dim = Dimension.of(d)
        x, z = pauli_unitaries(dim)
        xz = x.matrix @ z.matrix
        for r in range(2 * d + 1):
            lhs = np.linalg.matrix_power(xz, r)
            scalar = omega(dim) ** (r * (r - 1) // 2)
            rhs = scalar * (
                np.linalg.matrix_power(x.matrix, r) @ np.linalg.matrix_power(z.matrix, r)
            )
            assert close(lhs, rhs)

    @pytest.mark.parametrize("d", [3, 5])
    def test_xz_order_odd(self, d):
        x, z = pauli_unitaries(Dimension.of(d))
        xz = x.matrix @ z.matrix
        assert close(np.linalg.matrix_power(xz, d), np.eye(d))

    @pytest.mark.parametrize("d", [2, 4, 6])
    def test_xz_order_even(self, d):
        dim = Dimension.of(d)
        x, z = pauli_unitaries(dim)
        xz = x.matrix @ z.matrix
        at_d = np.linalg.matrix_power(xz, d)
        # after d steps only a root-of-unity scalar remains; 2d closes it
        lam = relative_phase(
            DenseOperator(dim, 1, at_d), DenseOperator(dim, 1, np.eye(d))
        )
        assert abs(abs(lam) - 1) < 1e-9 and abs(lam - 1) > 1e-6
        assert close(np.linalg.matrix_power(xz, 2 * d), np.eye(d))


class TestGateUnitary:
    def test_qubit_fourier_is_hadamard(self):
        u = gate_unitary(Fourier(0), 1, Dimension.of(2))
        assert close(u.matrix, np.array([[1, 1], [1, -1]]) / np.sqrt(2))

    def test_phase_diagonal_d3(self):
        dim = Dimension.of(3)
        u = gate_unitary(Phase(0, 1), 1, dim)
        assert close(u.matrix, np.diag([1, 1, omega(dim)]))

    def test_phase_diagonal_d2(self):
        u = gate_unitary(Phase(0, 1), 1, Dimension.of(2))
        assert close(u.matrix, np.diag([1, 1j]))

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_every_generator_unitary(self, d):
        dim = Dimension.of(d)
        gates = [Fourier(0)] + [Phase(0, e) for e in range(dim.D)]
        for g in gates:
            assert gate_unitary(g, 1, dim).is_unitary(1e-9)
        two = [Sum(0, 1, e) for e in range(dim.D)] + [Sum(1, 0, 2), Fourier(1)]
        for g in two:
            assert gate_unitary(g, 2, dim).is_unitary(1e-9)

    def test_sum_permutation_action(self):
        d = 3
        u = gate_unitary(Sum(0, 1, 1), 2, Dimension.of(d)).matrix
        for i, j in itertools.product(range(d), repeat=2):
            src = i * d + j
            dst = i * d + (i + j) % d
            assert close(u[:, src], np.eye(d * d)[:, dst])


class TestWordUnitary:
    def test_identity_word(self):
        w = PauliWord.identity(2, Dimension.of(3))
        assert close(word_unitary(w).matrix, np.eye(9))

    def test_two_qubit_tensor(self):
        dim = Dimension.of(2)
        x, z = pauli_unitaries(dim)
        w = PauliWord(dim, (1, 0), (0, 1))
        assert close(word_unitary(w).matrix, np.kron(x.matrix, z.matrix))

    def test_powers_multiply(self):
        dim = Dimension.of(5)
        x, z = pauli_unitaries(dim)
        w = PauliWord(dim, (2,), (3,))
        expected = np.linalg.matrix_power(x.matrix, 2) @ np.linalg.matrix_power(
            z.matrix, 3
        )
        assert close(word_unitary(w).matrix, expected)


class TestEqualUpToPhase:
    def test_reflexive_and_scalar(self):
        u = gate_unitary(Fourier(0), 1, Dimension.of(3))
        assert equal_up_to_phase(u, u)
        scaled = DenseOperator(u.dim, 1, 1j * u.matrix)
        assert equal_up_to_phase(u, scaled)
        assert equal_up_to_phase(scaled, u)

    def test_distinct_paulis(self):
        x, z = pauli_unitaries(Dimension.of(3))
        assert not equal_up_to_phase(x, z)

    def test_transitive_on_sample(self):
        dim = Dimension.of(4)
        u = gate_unitary(Phase(0, 3), 1, dim)
        a = DenseOperator(dim, 1, np.exp(0.7j) * u.matrix)
        b = DenseOperator(dim, 1, np.exp(-1.2j) * u.matrix)
        assert equal_up_to_phase(u, a) and equal_up_to_phase(a, b)
        assert equal_up_to_phase(u, b)


class TestCheckProgram:
    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_fourier_gate(self, d):
        dim = Dimension.of(d)
        seq = GateSequence((Fourier(0),), 1, dim)
        m = SymplecticMatrix(dim, gate_matrix(Fourier(0), 1, dim))
        assert check_program(seq, m)

    @pytest.mark.parametrize("d", [2, 4, 6])
    def test_phase_gate_even_dimension(self, d):
        # conjugating X produces the half-step scalar times XZ, absorbed
        # as a global phase by the oracle
        dim = Dimension.of(d)
        seq = GateSequence((Phase(0, 1),), 1, dim)
        m = SymplecticMatrix(dim, gate_matrix(Phase(0, 1), 1, dim))
        assert check_program(seq, m)
        p = gate_unitary(Phase(0, 1), 1, dim)
        x, _ = pauli_unitaries(dim)
        conj = p @ x @ p.dagger()
        lam = relative_phase(conj, word_unitary(PauliWord(dim, (1,), (1,))))
        assert abs(lam - omega_hat(dim)) < 1e-9

    @pytest.mark.parametrize("d", [2, 3])
    def test_sum_gate(self, d):
        dim = Dimension.of(d)
        seq = GateSequence((Sum(0, 1, 1),), 2, dim)
        m = SymplecticMatrix(dim, gate_matrix(Sum(0, 1, 1), 2, dim))
        assert check_program(seq, m)

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_all_generators_correspond(self, d):
        dim = Dimension.of(d)
        singles = [Fourier(0)] + [Phase(0, e) for e in range(1, dim.D)]
        for g in singles:
            seq = GateSequence((g,), 1, dim)
            assert check_program(seq, SymplecticMatrix(dim, gate_matrix(g, 1, dim)))
        twos = [Sum(0, 1, e) for e in range(1, dim.D)] + [Sum(1, 0, 1)]
        for g in twos:
            seq = GateSequence((g,), 2, dim)
            assert check_program(seq, SymplecticMatrix(dim, gate_matrix(g, 2, dim)))

    def test_wrong_matrix_detected(self):
        dim = Dimension.of(3)
        seq = GateSequence((Fourier(0),), 1, dim)
        wrong = SymplecticMatrix(dim, gate_matrix(Phase(0, 1), 1, dim))
        assert not check_program(seq, wrong)

    def test_scale_cap(self):
        dim = Dimension.of(17)
        seq = GateSequence((Fourier(0), Fourier(1)), 2, dim)
        m = SymplecticMatrix.identity(2, dim)
        with pytest.raises(ScaleLimitError):
            check_program(seq + seq.inverse(), m)


class TestSequenceUnitary:
    def test_matches_composition(self):
        dim = Dimension.of(3)
        seq = GateSequence((Fourier(0), Phase(0, 2), Fourier(0)), 1, dim)
        u = sequence_unitary(seq).matrix
        f = gate_unitary(Fourier(0), 1, dim).matrix
        p = gate_unitary(Phase(0, 2), 1, dim).matrix
        assert close(u, f @ p @ f)

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_commutation_scalar_direction(self, d):
        # U_u U_v = omega^(sip(v,u)) U_v U_u for X-left-of-Z word unitaries
        dim = Dimension.of(d)
        w = omega(dim)
        for a, b, ap, bp in itertools.product(range(d), repeat=4):
            u = PauliWord(dim, (a,), (b,))
            v = PauliWord(dim, (ap,), (bp,))
            uu, vv = word_unitary(u).matrix, word_unitary(v).matrix
            assert close(uu @ vv, w ** sip(v, u) * (vv @ uu))
