"""Phase-free classical representation of n-qudit Pauli operators.

A word X^a Z^b (tensor factors X^{a_i} Z^{b_i}) is represented by its
exponent vector (a_1..a_n, b_1..b_n) over Z_d: all X exponents first, then
all Z exponents. Global phases are deliberately absent here; exact phases
only exist at the dense-unitary level.

The group product of two words becomes componentwise exponent addition
mod d, and commutation is captured by the symplectic inner product.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, ParseError
from .modring import Dimension

_WORD_RE = re.compile(
    r"^\s*d=(\d+)\s+n=(\d+)\s+a=([0-9,\s]*?)\s+b=([0-9,\s]*?)\s*$"
)


@dataclass(frozen=True)
class PauliWord:
    """Exponent-vector form of an n-qudit Pauli operator, modulo phase."""

    dim: Dimension
    xexp: tuple[int, ...]
    zexp: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.xexp) != len(self.zexp) or len(self.xexp) < 1:
            raise DimensionMismatchError(
                f"exponent vectors must share a positive length, got "
                f"{len(self.xexp)} and {len(self.zexp)}"
            )
        d = self.dim.d
        object.__setattr__(self, "xexp", tuple(int(a) % d for a in self.xexp))
        object.__setattr__(self, "zexp", tuple(int(b) % d for b in self.zexp))

    @property
    def n(self) -> int:
        return len(self.xexp)

    @property
    def is_identity(self) -> bool:
        return not any(self.xexp) and not any(self.zexp)

    def vector(self) -> np.ndarray:
        """Exponent vector (a_1..a_n, b_1..b_n) as an int64 array."""
        return np.array(self.xexp + self.zexp, dtype=np.int64)

    @classmethod
    def from_vector(cls, vec: np.ndarray | list[int], dim: Dimension) -> "PauliWord":
        vec = np.asarray(vec, dtype=np.int64)
        if vec.ndim != 1 or vec.size % 2 != 0 or vec.size == 0:
            raise DimensionMismatchError(
                f"exponent vector must have even positive length, got shape {vec.shape}"
            )
        n = vec.size // 2
        return cls(dim, tuple(vec[:n].tolist()), tuple(vec[n:].tolist()))

    @classmethod
    def x_generator(cls, i: int, n: int, dim: Dimension) -> "PauliWord":
        """The word with a single X on qudit ``i``."""
        xs = [0] * n
        xs[i] = 1
        return cls(dim, tuple(xs), (0,) * n)

    @classmethod
    def z_generator(cls, i: int, n: int, dim: Dimension) -> "PauliWord":
        """The word with a single Z on qudit ``i``."""
        zs = [0] * n
        zs[i] = 1
        return cls(dim, (0,) * n, tuple(zs))

    @classmethod
    def identity(cls, n: int, dim: Dimension) -> "PauliWord":
        return cls(dim, (0,) * n, (0,) * n)

    def __add__(self, other: "PauliWord") -> "PauliWord":
        """Group product in the phase-free quotient: exponents add mod d."""
        _check_compatible(self, other)
        d = self.dim.d
        return PauliWord(
            self.dim,
            tuple((a + c) % d for a, c in zip(self.xexp, other.xexp)),
            tuple((b + e) % d for b, e in zip(self.zexp, other.zexp)),
        )

    def scale(self, r: int) -> "PauliWord":
        """The r-th power of the word: exponents scale mod d."""
        d = self.dim.d
        return PauliWord(
            self.dim,
            tuple((r * a) % d for a in self.xexp),
            tuple((r * b) % d for b in self.zexp),
        )


def _check_compatible(u: PauliWord, v: PauliWord) -> None:
    if u.dim != v.dim:
        raise DimensionMismatchError(f"words have different dimensions: {u.dim} vs {v.dim}")
    if u.n != v.n:
        raise DimensionMismatchError(f"words have different qudit counts: {u.n} vs {v.n}")


def sip(u: PauliWord, v: PauliWord) -> int:
    """Symplectic inner product: sum of a_i b'_i - a'_i b_i, mod d.

    This is the exponent c such that the unitaries of u and v satisfy
    U_u U_v = omega^c U_v U_u.
    """
    _check_compatible(u, v)
    d = u.dim.d
    total = sum(a * bp - ap * b for a, b, ap, bp in zip(u.xexp, u.zexp, v.xexp, v.zexp))
    return total % d


def commutes(u: PauliWord, v: PauliWord) -> bool:
    """True iff any unitary representatives of u and v commute exactly."""
    return sip(u, v) == 0


def sip_matrix_form(u: PauliWord, v: PauliWord) -> int:
    """The same inner product computed through the block form matrix.

    Exists purely as an independent cross-check path for :func:`sip`.
    """
    _check_compatible(u, v)
    n, d = u.n, u.dim.d
    form = np.zeros((2 * n, 2 * n), dtype=np.int64)
    form[:n, n:] = np.eye(n, dtype=np.int64)
    form[n:, :n] = (d - 1) * np.eye(n, dtype=np.int64)
    return int(u.vector() @ form @ v.vector()) % d


def format_word(w: PauliWord) -> str:
    """Render a word in the CLI text form ``d=<d> n=<n> a=... b=...``."""
    return (
        f"d={w.dim.d} n={w.n} "
        f"a={','.join(str(a) for a in w.xexp)} "
        f"b={','.join(str(b) for b in w.zexp)}"
    )


def parse_word(text: str) -> PauliWord:
    """Parse the CLI text form, e.g. ``d=6 n=2 a=1,0 b=0,3``."""
    m = _WORD_RE.match(text)
    if m is None:
        raise ParseError(f"cannot parse Pauli word: {text!r}")
    d, n = int(m.group(1)), int(m.group(2))
    try:
        xs = [int(tok) for tok in m.group(3).split(",")]
        zs = [int(tok) for tok in m.group(4).split(",")]
    except ValueError as exc:
        raise ParseError(f"bad exponent list in Pauli word: {text!r}") from exc
    if len(xs) != n or len(zs) != n:
        raise ParseError(
            f"Pauli word declares n={n} but has {len(xs)} X and {len(zs)} Z exponents"
        )
    bad = [e for e in xs + zs if not 0 <= e < d]
    if bad:
        raise ParseError(f"Pauli word exponents out of range [0, {d}): {bad}")
    return PauliWord(Dimension.of(d), tuple(xs), tuple(zs))
