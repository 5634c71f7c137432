from typing import Sequence

import numpy as np

from ..exception import InvalidGenomeError, InvalidParametersError
from ..types import Genome


class BinaryCodec:
    """Plain (non-Gray) binary code mapping bit genomes onto a box

    Dimension ``d`` is read from bits ``[d*B, (d+1)*B)``, most significant bit first.

    Args:
        bits_per_dim (``int``):
            Bits per continuous variable ``B``, between 2 and 52

        n_dims (``int``):
            Number of continuous variables

        lower (``float`` | ``Sequence[float]``), upper (``float`` | ``Sequence[float]``):
            Per-dimension bounds
    """

    def __init__(
        self,
        bits_per_dim: int,
        n_dims: int,
        lower,
        upper,
    ) -> None:
        if not 2 <= bits_per_dim <= 52:
            raise InvalidParametersError("bits_per_dim must be between 2 and 52")
        elif n_dims < 1:
            raise InvalidParametersError("n_dims must be at least 1")

        lower = np.broadcast_to(np.asarray(lower, dtype=np.float64), (n_dims,)).copy()
        upper = np.broadcast_to(np.asarray(upper, dtype=np.float64), (n_dims,)).copy()
        if np.any(lower >= upper):
            raise InvalidParametersError("lower bounds must be below upper bounds")

        self.bits_per_dim = bits_per_dim
        self.n_dims = n_dims
        self.lower = lower
        self.upper = upper
        self.levels = (1 << bits_per_dim) - 1
        self._weights = 1 << np.arange(bits_per_dim - 1, -1, -1, dtype=np.int64)

    @property
    def length(self) -> int:
        """Genome length ``B * n_dims``"""
        return self.bits_per_dim * self.n_dims

    def __repr__(self) -> str:
        return "BinaryCodec(bits_per_dim={}, n_dims={})".format(self.bits_per_dim, self.n_dims)


def decode(codec: BinaryCodec, genome: Genome) -> np.ndarray:
    """Map a bit genome to its point in the box

    Raises:
        :class:`~pydpso.exception.InvalidGenomeError`: If the genome is not binary or has the wrong length
    """

    genes = genome.genes
    if genes.size != codec.length:
        raise InvalidGenomeError(
            "codec expects {} bits, genome has {}".format(codec.length, genes.size)
        )
    elif genes.size and genes.max() > 1:
        raise InvalidGenomeError("genome is not binary")

    values = genes.reshape(codec.n_dims, codec.bits_per_dim) @ codec._weights
    return codec.lower + values * (codec.upper - codec.lower) / codec.levels


def encode(codec: BinaryCodec, x: Sequence[float]) -> Genome:
    """Nearest grid point of ``x`` as a bit genome (inverse of :func:`decode` on the grid)"""

    x = np.asarray(x, dtype=np.float64)
    if x.shape != (codec.n_dims,):
        raise InvalidParametersError("expected {} values, got {}".format(codec.n_dims, x.size))

    levels = np.rint((x - codec.lower) / (codec.upper - codec.lower) * codec.levels)
    levels = np.clip(levels, 0, codec.levels).astype(np.int64)
    bits = (levels[:, None] & codec._weights[None, :]) > 0
    return Genome(bits.astype(np.int64).ravel())
