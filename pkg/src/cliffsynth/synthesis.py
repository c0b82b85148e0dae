"""Decomposition of symplectic matrices into Fourier / phase / sum programs.

The single-qudit engine is Euclid's algorithm driven by two elementary
row operations: left-multiplying by [[1,0],[m,1]] (a phase power) or by
[[1,-m],[0,1]] (a Fourier-conjugated phase power) subtracts multiples of
one exponent from the other. The same loop, run with sum gates on a pair
of qudits, reduces a Z (x) Z exponent pair to its gcd. Stacking the two
gives the word normal form, word-to-word transport, and the full n-qudit
decomposition by column elimination and recursion.

All quotients are taken from canonical representatives, so every routine
is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DegenerateWordError, DimensionMismatchError, NonSymplecticError
from .modring import Dimension, gcd0, mod_inverse
from .pauli import PauliWord
from .symplectic import (
    Fourier,
    Gate,
    GateSequence,
    Phase,
    Sum,
    SymplecticMatrix,
    gate_matrix,
    invert_gate,
    merge_gates,
    sequence_matrix,
)


@dataclass(frozen=True)
class SynthesisResult:
    """A decomposition together with its target matrix and gate count."""

    program: GateSequence
    target: SymplecticMatrix

    @property
    def gate_count(self) -> int:
        return len(self.program)


# ---------------------------------------------------------------------------
# elementary Euclid loops


def _peg_vector(a: int, b: int, D: int) -> tuple[list[Gate], int]:
    """Single-qudit gates mapping exponent vector (a, b) to (0, g).

    ``a`` and ``b`` are canonical representatives; the loop never leaves
    canonical range, so it is plain integer Euclid. Returns the gates in
    application order and the final exponent g = gcd0(a, b).
    """
    if a == 0 and b == 0:
        raise DegenerateWordError("cannot reduce the zero exponent pair")
    gates: list[Gate] = []
    while a != 0 and b != 0:
        if a >= b:
            q = a // b
            # [[1,-q],[0,1]] = F.P(q).F.F.F applied right-to-left
            gates.extend([Fourier(0), Fourier(0), Fourier(0), Phase(0, q), Fourier(0)])
            a -= q * b
        else:
            q = b // a
            gates.append(Phase(0, (-q) % D))
            b -= q * a
    if b == 0:
        gates.append(Fourier(0))  # (a, 0) -> (0, a)
        a, b = 0, a
    return gates, b


def _sum_peg_vector(
    a: int, b: int, D: int, slot: Literal["first", "second"]
) -> tuple[list[Gate], int]:
    """Two-qudit sum-only gates mapping z-exponents (a, b) to the gcd.

    The gcd lands on qudit 0 (slot "first") or qudit 1 (slot "second");
    a two-gate fix-up moves it over when the loop stops in the wrong slot.
    """
    if a == 0 and b == 0:
        raise DegenerateWordError("cannot reduce the zero exponent pair")
    gates: list[Gate] = []
    while a != 0 and b != 0:
        if a >= b:
            q = a // b
            gates.append(Sum(0, 1, q))  # z-block [[1,-q],[0,1]]
            a -= q * b
        else:
            q = b // a
            gates.append(Sum(1, 0, q))  # z-block [[1,0],[-q,1]]
            b -= q * a
    g = a or b
    if slot == "second" and b == 0:
        gates.extend([Sum(1, 0, D - 1), Sum(0, 1, 1)])  # (g,0) -> (g,g) -> (0,g)
    elif slot == "first" and a == 0:
        gates.extend([Sum(0, 1, D - 1), Sum(1, 0, 1)])  # (0,g) -> (g,g) -> (g,0)
    return gates, g


def _embed(gates: list[Gate], mapping: dict[int, int]) -> list[Gate]:
    """Remap gate indices onto a larger register."""
    out: list[Gate] = []
    for g in gates:
        if isinstance(g, Fourier):
            out.append(Fourier(mapping[g.qudit]))
        elif isinstance(g, Phase):
            out.append(Phase(mapping[g.qudit], g.power))
        else:
            out.append(Sum(mapping[g.control], mapping[g.target], g.power))
    return out


def _invert_gates(gates: list[Gate], dim: Dimension) -> list[Gate]:
    inv: list[Gate] = []
    for g in reversed(gates):
        inv.extend(invert_gate(g, dim))
    return merge_gates(inv, dim)


# ---------------------------------------------------------------------------
# single-qudit word reduction and transport building blocks


def peg_reduce(a: int, b: int, dim: Dimension) -> tuple[GateSequence, int]:
    """Single-qudit program mapping the word X^a Z^b to Z^gcd0(a, b)."""
    a, b = a % dim.d, b % dim.d
    if a == 0 and b == 0:
        raise DegenerateWordError("the identity word has no reduction target")
    gates, g = _peg_vector(a, b, dim.D)
    return GateSequence(tuple(merge_gates(gates, dim)), 1, dim), g


def scale_sequence(k: int, dim: Dimension) -> GateSequence:
    """Single-qudit program for diag(k^-1, k), mapping Z to Z^k.

    ``k`` must be a unit mod D. The program is the fixed six-gate pattern
    F.P(k).F.P(k^-1).F.P(k) read right-to-left, i.e. the matrix
    F P^(k^-1) F P^k F P^(k^-1).
    """
    k = k % dim.D
    kinv = mod_inverse(k, dim.D)
    if kinv is None:
        raise NonSymplecticError(f"scale factor {k} is not a unit mod {dim.D}")
    return GateSequence(
        (
            Phase(0, kinv),
            Fourier(0),
            Phase(0, k),
            Fourier(0),
            Phase(0, kinv),
            Fourier(0),
        ),
        1,
        dim,
    )


def sum_peg(
    a: int, b: int, dim: Dimension, slot: Literal["first", "second"] = "second"
) -> GateSequence:
    """Two-qudit sum-only program mapping Z^a (x) Z^b to the gcd word.

    The surviving exponent gcd0(a, b) ends on qudit 0 for slot "first"
    or qudit 1 for slot "second".
    """
    a, b = a % dim.d, b % dim.d
    if a == 0 and b == 0:
        raise DegenerateWordError("the identity word has no reduction target")
    gates, _ = _sum_peg_vector(a, b, dim.D, slot)
    return GateSequence(tuple(merge_gates(gates, dim)), 2, dim)


def generalized_peg(w: PauliWord) -> tuple[GateSequence, int]:
    """Program mapping a word to I x ... x I x Z^k, k = gcd of all exponents.

    Each qudit is first reduced to a pure Z power, then the sum-gate loop
    folds the Z exponents left to right onto the last qudit.
    """
    if w.is_identity:
        raise DegenerateWordError("the identity word has no reduction target")
    n, dim = w.n, w.dim
    gates: list[Gate] = []
    zvals: list[int] = []
    for i in range(n):
        a, b = w.xexp[i], w.zexp[i]
        if (a, b) == (0, 0):
            zvals.append(0)
            continue
        chunk, g = _peg_vector(a, b, dim.D)
        gates.extend(_embed(chunk, {0: i}))
        zvals.append(g)
    cur = zvals[0]
    for i in range(n - 1):
        nxt = zvals[i + 1]
        if (cur, nxt) != (0, 0):
            chunk, _ = _sum_peg_vector(cur, nxt, dim.D, "second")
            gates.extend(_embed(chunk, {0: i, 1: i + 1}))
        cur = gcd0(cur, nxt)
    return GateSequence(tuple(merge_gates(gates, dim)), n, dim), cur % dim.d


def transport(p: PauliWord, q: PauliWord) -> GateSequence | None:
    """A program whose conjugation action maps word p to word q, if any.

    Feasible exactly when gcd(q's exponents) = k * gcd(p's exponents)
    mod d for some unit k mod d; returns None otherwise.
    """
    if p.dim != q.dim or p.n != q.n:
        raise DimensionMismatchError("transport endpoints disagree on layout")
    if p.is_identity or q.is_identity:
        raise DegenerateWordError("transport endpoints must be nonidentity words")
    if p == q:
        return GateSequence((), p.n, p.dim)
    d = p.dim.d
    to_tail, gp = generalized_peg(p)
    from_tail, gq = generalized_peg(q)
    k = next(
        (k for k in range(1, d) if gcd0(k, d) == 1 and (k * gp) % d == gq % d),
        None,
    )
    if k is None:
        return None
    gates = list(to_tail.gates)
    if k != 1:
        gates.extend(_embed(list(scale_sequence(k, p.dim).gates), {0: p.n - 1}))
    gates.extend(from_tail.inverse().gates)
    return GateSequence(tuple(merge_gates(gates, p.dim)), p.n, p.dim)


# ---------------------------------------------------------------------------
# 2x2 decomposition


def _case1(mat: np.ndarray, dim: Dimension) -> list[Gate]:
    """Closed-form program for a 2x2 symplectic matrix with invertible
    top-right entry: P^m F P^q F P^n with m, n read off the entries."""
    D = dim.D
    p, q = int(mat[0, 0]), int(mat[0, 1])
    s = int(mat[1, 1])
    qinv = mod_inverse(q, D)
    if qinv is None:
        raise NonSymplecticError(f"top-right entry {q} is not a unit mod {D}")
    m = qinv * (s + 1) % D
    n = qinv * (p + 1) % D
    gates = [Phase(0, n), Fourier(0), Phase(0, q), Fourier(0), Phase(0, m)]
    return merge_gates(gates, dim)


_R2 = np.array([[0, -1], [1, 0]], dtype=np.int64)


def decompose_single(m: SymplecticMatrix) -> GateSequence:
    """Fourier/phase program for any 2x2 symplectic matrix.

    If some entry is a unit mod D the closed form applies, after at most
    a few framing Fourier gates to rotate that entry into the top-right
    corner. Otherwise the Euclid loop is run on the right column until
    its gcd (always a unit) surfaces there, the closed form is applied,
    and the loop's inverses are appended.
    """
    if m.n != 1:
        raise DimensionMismatchError(f"decompose_single needs a 2x2 matrix, got n={m.n}")
    dim = m.dim
    D = dim.D
    mat = m.mat
    if np.array_equal(mat, np.eye(2, dtype=np.int64)):
        return GateSequence((), 1, dim)

    def unit(v: int) -> bool:
        return gcd0(int(v) % D, D) == 1

    p, q, r, s = int(mat[0, 0]), int(mat[0, 1]), int(mat[1, 0]), int(mat[1, 1])
    f = Fourier(0)
    if unit(q):
        gates = _case1(mat, dim)
    elif unit(r):
        inner = _case1(_R2 @ mat @ _R2 % D, dim)  # top-right entry becomes r
        gates = [f] + inner + [f]
    elif unit(p):
        inner = _case1(mat @ _R2 % D, dim)  # top-right entry becomes -p
        gates = [f, f, f] + inner
    elif unit(s):
        inner = _case1(_R2 @ mat % D, dim)  # top-right entry becomes -s
        gates = inner + [f, f, f]
    else:
        # Euclid on the right column (q, s): left-multiply by [[1,-m],[0,1]]
        # to reduce q, by [[1,0],[-m,1]] to reduce s, until one hits zero.
        work = mat.copy()
        ops: list[tuple[str, int]] = []
        while work[0, 1] != 0 and work[1, 1] != 0:
            qv, sv = int(work[0, 1]), int(work[1, 1])
            if qv >= sv:
                step = qv // sv
                work = np.array([[1, -step], [0, 1]], dtype=np.int64) @ work % D
                ops.append(("upper", step))
            else:
                step = sv // qv
                work = np.array([[1, 0], [-step, 1]], dtype=np.int64) @ work % D
                ops.append(("lower", step))
        if work[0, 1] == 0:
            # gcd sits in the bottom slot; rotate it up with F^3
            work = _R2 @ _R2 @ _R2 @ work % D
            ops.append(("rfix", 0))
        gates = _case1(work, dim)
        for kind, step in reversed(ops):
            if kind == "upper":
                gates.extend([f, f, f, Phase(0, (-step) % D), f])
            elif kind == "lower":
                gates.append(Phase(0, step))
            else:
                gates.append(f)
    return GateSequence(tuple(merge_gates(gates, dim)), 1, dim)


# ---------------------------------------------------------------------------
# full decomposition


def decompose(m: SymplecticMatrix) -> GateSequence:
    """Fourier/phase/sum program for any symplectic matrix, any n.

    The last qudit's Z column is reduced to a single unit entry with the
    Euclid loops, the unit is rescaled to 1, the bottom row is cleared
    with right-multiplied sum and phase powers (repeating the sum pass
    once after the column swaps re-dirty it), and the survivor is an
    embedded matrix on one fewer qudit, handled recursively.
    """
    n, dim = m.n, m.dim
    if n == 1:
        return decompose_single(m)
    D = dim.D
    work = m.mat.copy()
    if np.array_equal(work, np.eye(2 * n, dtype=np.int64)):
        return GateSequence((), n, dim)

    left_gates: list[Gate] = []
    right_ops: list[list[Gate]] = []

    def apply_left(gates: list[Gate]) -> None:
        nonlocal work
        for g in gates:
            work = gate_matrix(g, n, dim) @ work % D
        left_gates.extend(gates)

    def apply_right(gates: list[Gate]) -> None:
        nonlocal work
        acc = np.eye(2 * n, dtype=np.int64)
        for g in gates:
            acc = gate_matrix(g, n, dim) @ acc % D
        work = work @ acc % D
        right_ops.append(gates)

    last = 2 * n - 1
    # reduce the last column to (0, ..., 0, k)
    for i in range(n):
        a, b = int(work[i, last]), int(work[n + i, last])
        if (a, b) != (0, 0):
            chunk, _ = _peg_vector(a, b, D)
            apply_left(_embed(chunk, {0: i}))
    for i in range(n - 1):
        a, b = int(work[n + i, last]), int(work[n + i + 1, last])
        if (a, b) != (0, 0):
            chunk, _ = _sum_peg_vector(a, b, D, "second")
            apply_left(_embed(chunk, {0: i, 1: i + 1}))
    k = int(work[last, last])
    kinv = mod_inverse(k, D)
    if kinv is None:
        raise NonSymplecticError(f"column gcd {k} is not a unit mod {D}")
    if k != 1:
        apply_left(_embed(list(scale_sequence(kinv, dim).gates), {0: n - 1}))
    assert work[last, last] == 1 and not work[:last, last].any()

    # clear the bottom row: sum powers, the corner phase power, column
    # swaps for the left block, then one repeat pass of the sum powers
    for i in range(n - 1):
        e = int(work[last, n + i])
        if e:
            apply_right([Sum(n - 1, i, e)])
    e = int(work[last, n - 1])
    if e:
        apply_right([Phase(n - 1, (-e) % D)])
    for i in range(n - 1):
        if work[last, i]:
            apply_right(
                [Fourier(i), Fourier(i), Phase(i, 1), Fourier(i), Phase(i, 1), Fourier(i)]
            )
    for i in range(n - 1):
        e = int(work[last, n + i])
        if e:
            apply_right([Sum(n - 1, i, e)])

    unit_last = np.zeros(2 * n, dtype=np.int64)
    unit_last[last] = 1
    unit_mid = np.zeros(2 * n, dtype=np.int64)
    unit_mid[n - 1] = 1
    assert np.array_equal(work[last], unit_last) and np.array_equal(work[:, last], unit_last)
    assert np.array_equal(work[n - 1], unit_mid) and np.array_equal(work[:, n - 1], unit_mid)

    keep = list(range(n - 1)) + list(range(n, last))
    sub = SymplecticMatrix(dim, work[np.ix_(keep, keep)])
    gates: list[Gate] = []
    for op in right_ops:
        gates.extend(_invert_gates(op, dim))
    gates.extend(decompose(sub).gates)
    gates.extend(_invert_gates(left_gates, dim))
    seq = GateSequence(tuple(merge_gates(gates, dim)), n, dim)
    assert sequence_matrix(seq) == m
    return seq


def synthesize(m: SymplecticMatrix) -> SynthesisResult:
    """Decompose ``m`` and bundle the program with its target."""
    return SynthesisResult(decompose(m), m)


def swap_sequence(i: int, j: int, n: int, dim: Dimension) -> GateSequence:
    """The fixed nine-gate program exchanging qudits i and j.

    Three sum gates interleaved with transversal Fourier pairs, then two
    closing Fourier gates on the target qudit.
    """
    if i == j or not (0 <= i < n) or not (0 <= j < n):
        raise DimensionMismatchError(f"swap needs distinct indices below {n}, got ({i}, {j})")
    return GateSequence(
        (
            Sum(i, j, 1),
            Fourier(i),
            Fourier(j),
            Sum(i, j, 1),
            Fourier(i),
            Fourier(j),
            Sum(i, j, 1),
            Fourier(j),
            Fourier(j),
        ),
        n,
        dim,
    )
