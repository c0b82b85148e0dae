import random

from cliffsynth import Dimension, GateSequence
from cliffsynth.symplectic import Fourier, Phase, Sum


def random_gate_sequence(n: int, dim: Dimension, length: int, seed: int) -> GateSequence:
    """Seeded random product of generator gates (valid indices/exponents)."""
    rng = random.Random(seed)
    gates = []
    for _ in range(length):
        kind = rng.randrange(3 if n > 1 else 2)
        if kind == 0:
            gates.append(Fourier(rng.randrange(n)))
        elif kind == 1:
            gates.append(Phase(rng.randrange(n), rng.randrange(dim.D)))
        else:
            c = rng.randrange(n)
            t = rng.randrange(n - 1)
            if t >= c:
                t += 1
            gates.append(Sum(c, t, rng.randrange(dim.D)))
    return GateSequence(tuple(gates), n, dim)


def random_word_exponents(n: int, d: int, seed: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    rng = random.Random(seed)
    return (
        tuple(rng.randrange(d) for _ in range(n)),
        tuple(rng.randrange(d) for _ in range(n)),
    )
