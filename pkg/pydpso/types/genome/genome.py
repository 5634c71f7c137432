from typing import Iterable, Sequence, Union

import numpy as np

from ...exception import IncompatibleGenomesError, InvalidGenomeError


class Genome:
    """A fixed-length vector of non-negative integer genes

    The alphabet of every position (its arity) belongs to the problem, not to the genome.
    Genes are stored 0-based; :meth:`to_labels` renders the 1-based labels used in result files.

    Args:
        genes (``Iterable[int]`` | :class:`numpy.ndarray`):
            The gene values
    """

    __slots__ = ("_genes",)

    def __init__(self, genes: Union[Iterable[int], np.ndarray]) -> None:
        array = np.array(genes, dtype=np.int64).reshape(-1)
        if array.size and array.min() < 0:
            raise InvalidGenomeError("genes must be non-negative")
        array.setflags(write=False)
        self._genes = array

    @property
    def genes(self) -> np.ndarray:
        """Read-only view of the gene values"""
        return self._genes

    def __len__(self) -> int:
        return self._genes.size

    def __getitem__(self, index):
        return self._genes[index]

    def __iter__(self):
        return iter(self._genes.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Genome):
            return NotImplemented
        return np.array_equal(self._genes, other._genes)

    def __hash__(self) -> int:
        return hash(self._genes.tobytes())

    def __str__(self) -> str:
        return "<{}>".format(",".join(str(g) for g in self._genes.tolist()))

    def __repr__(self) -> str:
        return "Genome({})".format(self._genes.tolist())

    def check(self, arity: Sequence[int]) -> None:
        """Validate the genome against a problem's per-position arity

        Args:
            arity (``Sequence[int]``):
                Alphabet size of every position

        Raises:
            :class:`~pydpso.exception.InvalidGenomeError`
        """

        arity = np.asarray(arity)
        if arity.size != self._genes.size:
            raise InvalidGenomeError(
                "genome has length {} but the problem has dimension {}".format(
                    self._genes.size, arity.size
                )
            )
        if np.any(self._genes >= arity):
            position = int(np.argmax(self._genes >= arity))
            raise InvalidGenomeError(
                "gene {} at position {} is outside arity {}".format(
                    int(self._genes[position]), position, int(arity[position])
                )
            )

    def to_labels(self) -> str:
        """Comma separated 1-based labels, e.g. ``"1,2,1"``"""
        return ",".join(str(g + 1) for g in self._genes.tolist())

    def to_bitstring(self) -> str:
        """Bits as a string of ``0`` and ``1``

        Raises:
            :class:`~pydpso.exception.InvalidGenomeError`: If a gene is not a bit
        """
        if np.any(self._genes > 1):
            raise InvalidGenomeError("genome is not binary")
        return "".join(str(g) for g in self._genes.tolist())

    @classmethod
    def from_labels(cls, text: str) -> "Genome":
        """Parse the output of :meth:`to_labels`"""
        labels = [int(part) for part in text.strip().split(",") if part.strip()]
        if any(label < 1 for label in labels):
            raise InvalidGenomeError("labels are 1-based")
        return cls([label - 1 for label in labels])

    @classmethod
    def from_bitstring(cls, text: str) -> "Genome":
        """Parse the output of :meth:`to_bitstring`"""
        text = text.strip()
        if set(text) - {"0", "1"}:
            raise InvalidGenomeError("bitstring may only hold 0 and 1")
        return cls([int(bit) for bit in text])


def ensure_same_length(a: Genome, b: Genome) -> None:
    if len(a) != len(b):
        raise IncompatibleGenomesError(
            "genomes have different lengths ({} and {})".format(len(a), len(b))
        )
