from typing import List, Sequence, TypeVar

import numpy as np

T = TypeVar("T")

SEED_MASK = (1 << 64) - 1


class RngStream:
    """Seeded random stream owned by exactly one run

    Draws come from NumPy's ``PCG64`` bit generator (PCG XSL-RR 128/64), which is defined
    algorithmically and produces the same sequence on every platform for a given seed.

    Args:
        seed (``int``):
            A 64-bit seed. Larger or negative values are reduced modulo 2**64
    """

    def __init__(self, seed: int) -> None:
        if not isinstance(seed, (int, np.integer)):
            raise TypeError("seed must be int")
        self.seed = int(seed) & SEED_MASK
        self._generator = np.random.Generator(np.random.PCG64(self.seed))

    def __repr__(self) -> str:
        return "RngStream(seed={})".format(self.seed)

    @property
    def generator(self) -> np.random.Generator:
        """The underlying generator, for vectorised draws"""
        return self._generator

    def random(self) -> float:
        """Uniform real in ``[0, 1)``"""
        return float(self._generator.random())

    def integer(self, a: int, b: int) -> int:
        """Uniform integer in ``[a, b]``, both ends included"""
        if b < a:
            raise ValueError("empty range [{}, {}]".format(a, b))
        return int(self._generator.integers(a, b, endpoint=True))

    def sample(self, n: int, k: int) -> List[int]:
        """``k`` distinct indices drawn from ``range(n)``, in draw order"""
        if not 0 <= k <= n:
            raise ValueError("cannot sample {} distinct indices from {}".format(k, n))
        return [int(i) for i in self._generator.choice(n, size=k, replace=False)]

    def shuffle(self, items: Sequence[T]) -> List[T]:
        """A shuffled copy of ``items``"""
        order = self._generator.permutation(len(items))
        return [items[i] for i in order]

    def permutation(self, n: int) -> List[int]:
        """A uniform random permutation of ``range(n)``"""
        return [int(i) for i in self._generator.permutation(n)]
