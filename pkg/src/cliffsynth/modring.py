"""Exact arithmetic over the rings Z_d and Z_D.

A qudit of Hilbert-space dimension ``d`` carries two moduli: Pauli exponents
live in Z_d, while classical gate matrices and phases live in Z_D where
D = d for odd d and D = 2d for even d. ``Dimension`` bundles the pair.

All values are kept as canonical representatives in ``[0, modulus)``;
negative intermediates are reduced immediately so equality tests are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CliffSynthError

# Keeps 2n * (D-1)^2 far below 2^63 for any plausible qudit count, so all
# int64 matrix products are overflow-free.
MAX_DIMENSION = 1_000_000


@dataclass(frozen=True)
class Dimension:
    """The pair (d, D): Hilbert-space dimension and phase/matrix modulus."""

    d: int
    D: int

    def __post_init__(self) -> None:
        if not isinstance(self.d, int) or self.d < 2:
            raise CliffSynthError(f"dimension d must be an integer >= 2, got {self.d}")
        if self.d > MAX_DIMENSION:
            raise CliffSynthError(
                f"dimension d={self.d} exceeds the supported cap {MAX_DIMENSION}"
            )
        expected = self.d if self.d % 2 == 1 else 2 * self.d
        if self.D != expected:
            raise CliffSynthError(
                f"phase modulus must be {expected} for d={self.d}, got {self.D}"
            )

    @classmethod
    def of(cls, d: int) -> "Dimension":
        """Build the dimension pair for Hilbert-space dimension ``d``."""
        d = int(d)
        if d < 2:
            raise CliffSynthError(f"dimension d must be an integer >= 2, got {d}")
        return cls(d, d if d % 2 == 1 else 2 * d)

    @property
    def even(self) -> bool:
        return self.d % 2 == 0


def gcd0(a: int, b: int) -> int:
    """Greatest common divisor extended to zero arguments.

    Returns the ordinary gcd for positive inputs, ``m`` for ``(0, m)`` and
    ``(m, 0)``, and 0 for ``(0, 0)``.
    """
    if a < 0 or b < 0:
        raise CliffSynthError(f"gcd0 expects nonnegative inputs, got ({a}, {b})")
    return math.gcd(a, b)


def euclid_steps(a: int, b: int) -> list[int]:
    """Quotient sequence of the Euclidean remainder chain for ``(a, b)``.

    The chain is a = m1*b + c1, b = m2*c1 + c2, ... ending at remainder 0;
    the last nonzero remainder is gcd0(a, b). Degenerate starts (either
    argument zero) have an empty chain.
    """
    if a < 0 or b < 0:
        raise CliffSynthError(f"euclid_steps expects nonnegative inputs, got ({a}, {b})")
    if a == 0 and b == 0:
        raise CliffSynthError("euclid_steps(0, 0): no quotient chain exists")
    if a == 0 or b == 0:
        return []
    quotients = []
    while b != 0:
        quotients.append(a // b)
        a, b = b, a % b
    return quotients


def mod_inverse(a: int, m: int) -> int | None:
    """Inverse of ``a`` modulo ``m`` in ``[0, m)``, or None if not a unit."""
    if m < 2:
        raise CliffSynthError(f"modulus must be >= 2, got {m}")
    try:
        return pow(a, -1, m)
    except ValueError:
        return None
