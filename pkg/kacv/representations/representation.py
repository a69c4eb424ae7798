"""Representations of quivers over finite fields."""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from ..core.quiver import DimVector, Quiver
from ..fields.galois import GaloisField


def arrow_offsets(quiver: Quiver, dims: Sequence[int]) -> Tuple[List[int], int]:
    """
    Offsets of each arrow matrix in the flat entry vector.

    Arrow a : t → h contributes a dims[h] × dims[t] block stored row-major.

    Returns:
        (offset per arrow, total entry count N)
    """
    offsets = []
    total = 0
    for tail, head in quiver.arrows:
        offsets.append(total)
        total += int(dims[head]) * int(dims[tail])
    return offsets, total


@dataclass(frozen=True, eq=False)
class Representation:
    """A tuple of matrices x_a : F_q^{α_t} → F_q^{α_h}, one per arrow."""
    quiver: Quiver
    field: GaloisField
    dims: DimVector
    matrices: Tuple[np.ndarray, ...]

    def __post_init__(self):
        dims = self.quiver.dim_vector(self.dims)
        object.__setattr__(self, 'dims', dims)
        if len(self.matrices) != self.quiver.arrow_count:
            raise ValueError(
                f"{len(self.matrices)} matrices given for {self.quiver.arrow_count} arrows"
            )
        matrices = []
        for index, ((tail, head), matrix) in enumerate(zip(self.quiver.arrows, self.matrices)):
            matrix = np.asarray(matrix, dtype=np.int64).reshape(dims[head], dims[tail])
            if matrix.size and (matrix.min() < 0 or matrix.max() >= self.field.q):
                raise ValueError(f"Arrow {index} has entries outside F_{self.field.q}")
            matrices.append(matrix)
        object.__setattr__(self, 'matrices', tuple(matrices))

    @classmethod
    def from_entries(cls, quiver: Quiver, field: GaloisField,
                     dims: Sequence[int], entries: Sequence[int]) -> 'Representation':
        """Build from a flat entry vector laid out as in ``arrow_offsets``."""
        entries = np.asarray(entries, dtype=np.int64)
        offsets, total = arrow_offsets(quiver, dims)
        if entries.shape != (total,):
            raise ValueError(f"Expected {total} entries, got shape {entries.shape}")
        matrices = []
        for (tail, head), start in zip(quiver.arrows, offsets):
            size = dims[head] * dims[tail]
            matrices.append(entries[start:start + size].reshape(dims[head], dims[tail]))
        return cls(quiver, field, tuple(dims), tuple(matrices))

    @classmethod
    def zero(cls, quiver: Quiver, field: GaloisField, dims: Sequence[int]) -> 'Representation':
        """The representation with every arrow acting by zero."""
        _, total = arrow_offsets(quiver, dims)
        return cls.from_entries(quiver, field, dims, np.zeros(total, dtype=np.int64))

    @property
    def total_dimension(self) -> int:
        return sum(self.dims)

    def entries(self) -> np.ndarray:
        """Flat entry vector."""
        if not self.matrices:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate([m.reshape(-1) for m in self.matrices])

    def key(self) -> Tuple:
        """Hashable identity: dimension vector plus entries."""
        return (self.dims, tuple(int(v) for v in self.entries()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.quiver == other.quiver and self.field == other.field
                and self.key() == other.key())

    def __hash__(self) -> int:
        return hash((self.quiver, self.field, self.key()))

    def direct_sum(self, other: 'Representation') -> 'Representation':
        """Block-diagonal sum V ⊕ W."""
        if self.quiver != other.quiver or self.field != other.field:
            raise ValueError("Direct sum needs the same quiver and field")
        dims = tuple(a + b for a, b in zip(self.dims, other.dims))
        matrices = []
        for (tail, head), x, y in zip(self.quiver.arrows, self.matrices, other.matrices):
            block = np.zeros((dims[head], dims[tail]), dtype=np.int64)
            block[:x.shape[0], :x.shape[1]] = x
            block[x.shape[0]:, x.shape[1]:] = y
            matrices.append(block)
        return Representation(self.quiver, self.field, dims, tuple(matrices))

    def support_components(self) -> int:
        """
        Connected components of the graph on vertices with nonzero dimension,
        joined by arrows acting nonzero. More than one means V is visibly decomposable.
        """
        support = [i for i, d in enumerate(self.dims) if d]
        parent = {i: i for i in support}

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for (tail, head), matrix in zip(self.quiver.arrows, self.matrices):
            if matrix.size and np.any(matrix):
                parent[find(tail)] = find(head)
        return len({find(i) for i in support})

    def to_dict(self) -> dict:
        """Plain-data view for reports."""
        return {
            'dims': list(self.dims),
            'matrices': [m.tolist() for m in self.matrices]
        }
