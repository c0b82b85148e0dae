import itertools

import numpy as np
import pytest

from cliffsynth import (
    CliffSynthError,
    Dimension,
    Embedding,
    PauliWord,
    ScaleLimitError,
    check_symmetric_logical_action,
    gate_matrix,
    is_symplectic_embedding,
    logical_basis_state,
    logical_feasible_single,
    logical_feasible_sum,
    verify_single_witness,
    word_unitary,
)
from cliffsynth.embedding import _lattice_match, _single_gate_targets
from cliffsynth.symplectic import Sum

QUBIT_IN_24 = Embedding(2, 3, 4)


def all_embeddings(max_d=24):
    out = []
    for n in range(2, max_d + 1):
        for rx in range(1, max_d + 1):
            for rz in range(1, max_d + 1):
                if n * rx * rz <= max_d:
                    out.append(Embedding(n, rx, rz))
    return out


def brute_force_feasible(e, gate):
    """Independent oracle: scan every 2x2 matrix with det 1 mod D."""
    d, D = e.d, e.dim.D
    t1, t2 = _single_gate_targets(e, gate)
    g1 = np.array([e.r_x, 0], dtype=np.int64)
    g2 = np.array([0, e.r_z], dtype=np.int64)
    for a, b, c, ee in itertools.product(range(D), repeat=4):
        if (a * ee - b * c) % D != 1:
            continue
        m = np.array([[a, b], [c, ee]])
        if _lattice_match(m @ g1 % d, np.array(t1), e) and _lattice_match(
            m @ g2 % d, np.array(t2), e
        ):
            return True
    return False


class TestEmbeddingType:
    def test_ambient_dimension(self):
        assert QUBIT_IN_24.d == 24
        assert QUBIT_IN_24.dim == Dimension.of(24)

    def test_validation(self):
        with pytest.raises(CliffSynthError):
            Embedding(1, 2, 2)
        with pytest.raises(CliffSynthError):
            Embedding(2, 0, 1)

    def test_shift_protection_metadata(self):
        assert QUBIT_IN_24.shift_protection == (1.5, 2.0)


class TestLogicalBasis:
    def test_trivial_embedding_is_computational(self):
        e = Embedding(2, 1, 1)
        assert np.allclose(logical_basis_state(e, 0), [1, 0])
        assert np.allclose(logical_basis_state(e, 1), [0, 1])

    def test_worked_d24_state(self):
        s = logical_basis_state(QUBIT_IN_24, 0)
        expected = np.zeros(24)
        expected[[0, 6, 12, 18]] = 0.5
        assert np.allclose(s, expected)

    @pytest.mark.parametrize("e", [QUBIT_IN_24, Embedding(2, 2, 2), Embedding(3, 2, 2)])
    def test_orthonormal(self, e):
        states = [logical_basis_state(e, j) for j in range(e.n)]
        for i, si in enumerate(states):
            for j, sj in enumerate(states):
                assert abs(np.vdot(si, sj) - (1.0 if i == j else 0.0)) < 1e-12

    def test_range_checked(self):
        with pytest.raises(CliffSynthError):
            logical_basis_state(QUBIT_IN_24, 2)

    @pytest.mark.parametrize(
        "e", [QUBIT_IN_24, Embedding(2, 2, 2), Embedding(3, 2, 2), Embedding(2, 1, 3)]
    )
    def test_stabilizers_fix_basis_states(self, e):
        dim = e.dim
        xs = word_unitary(PauliWord(dim, (e.n * e.r_x % e.d,), (0,))).matrix
        zs = word_unitary(PauliWord(dim, (0,), (e.n * e.r_z % e.d,))).matrix
        for j in range(e.n):
            s = logical_basis_state(e, j)
            assert np.max(np.abs(xs @ s - s)) < 1e-9
            assert np.max(np.abs(zs @ s - s)) < 1e-9


class TestFeasibility:
    def test_d24_qft_absent(self):
        assert logical_feasible_single(QUBIT_IN_24, "qft") is None

    def test_d24_phase_witness(self):
        # the coset search finds the fourth phase-shift power as a witness:
        # it sends the X generator to X^3 Z^12, and Z^12 differs from the
        # Z^4 target by the identity-acting Z^8
        w = logical_feasible_single(QUBIT_IN_24, "phase")
        assert w is not None
        assert verify_single_witness(QUBIT_IN_24, "phase", w)
        assert np.array_equal(w.mat, [[1, 0], [4, 1]])

    def test_d24_brute_force_agreement(self):
        assert brute_force_feasible(QUBIT_IN_24, "qft") is False
        assert brute_force_feasible(QUBIT_IN_24, "phase") is True

    def test_d24_not_symplectic(self):
        assert not is_symplectic_embedding(QUBIT_IN_24)

    def test_sum_always_feasible(self):
        for e in [QUBIT_IN_24, Embedding(2, 2, 2), Embedding(2, 1, 1), Embedding(3, 1, 2)]:
            w = logical_feasible_sum(e)
            assert np.array_equal(w.mat, gate_matrix(Sum(0, 1, 1), 2, e.dim))

    @pytest.mark.parametrize("e", [Embedding(2, 2, 2), Embedding(3, 2, 2), Embedding(2, 1, 1)])
    def test_symmetric_feasible_with_standard_witnesses(self, e):
        q = logical_feasible_single(e, "qft")
        p = logical_feasible_single(e, "phase")
        assert q is not None and p is not None
        assert verify_single_witness(e, "qft", q)
        assert verify_single_witness(e, "phase", p)

    def test_symmetric_implies_symplectic_up_to_36(self):
        for n in range(2, 37):
            for r in range(1, 7):
                if n * r * r > 36:
                    continue
                assert is_symplectic_embedding(Embedding(n, r, r))

    def test_asymmetric_example_decided(self):
        # 2b = 1 or 3 (mod 4) has no solution, so the transform is blocked
        e = Embedding(2, 1, 2)
        assert logical_feasible_single(e, "qft") is None
        assert not is_symplectic_embedding(e)

    def test_all_witnesses_verify(self):
        for e in all_embeddings(20):
            for gate in ("qft", "phase"):
                w = logical_feasible_single(e, gate)
                if w is not None:
                    assert verify_single_witness(e, gate, w), (e, gate)

    @pytest.mark.parametrize("e", [Embedding(2, 1, 2), Embedding(3, 2, 3), QUBIT_IN_24])
    def test_search_agrees_with_brute_force(self, e):
        if e.dim.D > 48:
            pytest.skip("brute force too large")
        for gate in ("qft", "phase"):
            assert (logical_feasible_single(e, gate) is not None) == brute_force_feasible(
                e, gate
            )


class TestSymmetricLogicalAction:
    def test_trivial_embedding(self):
        assert check_symmetric_logical_action(Embedding(2, 1, 1))

    def test_qubit_in_d8(self):
        assert check_symmetric_logical_action(Embedding(2, 2, 2))

    def test_qutrit_in_d12(self):
        assert check_symmetric_logical_action(Embedding(3, 2, 2))

    def test_odd_symmetric(self):
        assert check_symmetric_logical_action(Embedding(3, 3, 3))

    def test_requires_symmetry(self):
        with pytest.raises(CliffSynthError):
            check_symmetric_logical_action(QUBIT_IN_24)

    def test_scale_cap(self):
        with pytest.raises(ScaleLimitError):
            check_symmetric_logical_action(Embedding(2, 5, 5))
