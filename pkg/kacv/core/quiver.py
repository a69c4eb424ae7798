"""Finite loop-free quivers and their doubles."""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..utils.validation import validate_nonnegative_vector

DimVector = Tuple[int, ...]
WeightVector = Tuple[int, ...]
Arrow = Tuple[int, int]


@dataclass(frozen=True)
class Quiver:
    """
    A quiver with vertices ``0..n-1`` and ordered arrows ``(tail, head)``.

    A doubled quiver lists the original arrows first and their reverses after
    them in the same order; ``base_arrow_count`` records the split.
    """
    vertex_names: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]
    arrow_names: Tuple[str, ...] = field(default=())
    base_arrow_count: Optional[int] = None

    def __post_init__(self):
        n = len(self.vertex_names)
        if n == 0:
            raise ValueError("A quiver needs at least one vertex")
        if len(set(self.vertex_names)) != n:
            raise ValueError(f"Duplicate vertex names: {self.vertex_names}")

        arrows = tuple((int(t), int(h)) for t, h in self.arrows)
        for index, (tail, head) in enumerate(arrows):
            if not (0 <= tail < n and 0 <= head < n):
                raise ValueError(f"Arrow {index} has an endpoint outside 0..{n - 1}")
            if tail == head:
                raise ValueError(f"Arrow {index} is a loop at vertex {tail}")
        object.__setattr__(self, 'arrows', arrows)

        names = tuple(self.arrow_names) or tuple(f"a{i}" for i in range(len(arrows)))
        if len(names) != len(arrows):
            raise ValueError(
                f"{len(names)} arrow names given for {len(arrows)} arrows"
            )
        if len(set(names)) != len(names):
            raise ValueError(f"Duplicate arrow names: {names}")
        object.__setattr__(self, 'arrow_names', names)

    @classmethod
    def from_arrows(cls, vertex_count: int, arrows: Iterable[Arrow]) -> 'Quiver':
        """Build a quiver with vertices named ``v1..vn``."""
        return cls(
            vertex_names=tuple(f"v{i + 1}" for i in range(vertex_count)),
            arrows=tuple(arrows)
        )

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_names)

    @property
    def arrow_count(self) -> int:
        return len(self.arrows)

    @property
    def is_doubled(self) -> bool:
        return self.base_arrow_count is not None

    def vertex_index(self, name: str) -> int:
        """Index of a vertex by name."""
        try:
            return self.vertex_names.index(name)
        except ValueError:
            raise ValueError(f"Unknown vertex: {name}") from None

    def neighbours(self) -> Dict[int, List[int]]:
        """Undirected adjacency lists."""
        adjacency: Dict[int, List[int]] = {i: [] for i in range(self.vertex_count)}
        for tail, head in self.arrows:
            adjacency[tail].append(head)
            adjacency[head].append(tail)
        return adjacency

    def double(self) -> 'Quiver':
        """
        The double quiver: every arrow a gets a reverse a* appended after
        all original arrows.
        """
        if self.is_doubled:
            raise ValueError("Quiver is already doubled")
        reversed_arrows = tuple((h, t) for t, h in self.arrows)
        return Quiver(
            vertex_names=self.vertex_names,
            arrows=self.arrows + reversed_arrows,
            arrow_names=self.arrow_names + tuple(f"{a}*" for a in self.arrow_names),
            base_arrow_count=self.arrow_count
        )

    def undouble(self) -> 'Quiver':
        """The quiver a doubled quiver was built from."""
        if not self.is_doubled:
            raise ValueError("Quiver is not doubled")
        m = self.base_arrow_count
        return Quiver(
            vertex_names=self.vertex_names,
            arrows=self.arrows[:m],
            arrow_names=self.arrow_names[:m]
        )

    def dim_vector(self, values: Sequence[int]) -> DimVector:
        """Validate a dimension vector for this quiver."""
        return validate_nonnegative_vector(values, self.vertex_count, 'dimension vector')

    def weight_vector(self, values: Sequence[int]) -> WeightVector:
        """Validate a weight vector for this quiver."""
        vector = tuple(int(v) for v in values)
        if len(vector) != self.vertex_count:
            raise ValueError(
                f"weight vector has {len(vector)} entries, expected {self.vertex_count}"
            )
        return vector

    def is_connected_support(self, alpha: Sequence[int]) -> bool:
        """Whether the support of alpha spans a connected subquiver."""
        support = {i for i, a in enumerate(alpha) if a}
        if not support:
            return False
        adjacency = self.neighbours()
        start = min(support)
        seen = {start}
        stack = [start]
        while stack:
            vertex = stack.pop()
            for other in adjacency[vertex]:
                if other in support and other not in seen:
                    seen.add(other)
                    stack.append(other)
        return seen == support
