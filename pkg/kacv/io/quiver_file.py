"""Reading and writing the line-oriented quiver file format.

    # comment
    vertex <name>
    arrow <name> <tail> <head>
    dim <label> n1,n2,...
    weight <label> w1,w2,...

Vectors list one entry per vertex in declaration order.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..config.constants import (
    COMMENT_CHAR,
    KEYWORD_ARROW,
    KEYWORD_DIM,
    KEYWORD_VERTEX,
    KEYWORD_WEIGHT
)
from ..core.quiver import DimVector, Quiver, WeightVector
from ..utils.errors import QuiverFileError
from ..utils.io import read_text
from ..utils.logging import get_logger

logger = get_logger(__name__)


@dataclass
class QuiverFile:
    """A quiver with named dimension and weight vectors."""
    quiver: Quiver
    dims: Dict[str, DimVector] = field(default_factory=dict)
    weights: Dict[str, WeightVector] = field(default_factory=dict)
    source: Optional[str] = None

    def dim(self, label: str) -> DimVector:
        if label not in self.dims:
            raise QuiverFileError(
                f"Unknown dim label '{label}'. Available: {list(self.dims)}"
            )
        return self.dims[label]

    def weight(self, label: str) -> WeightVector:
        if label not in self.weights:
            raise QuiverFileError(
                f"Unknown weight label '{label}'. Available: {list(self.weights)}"
            )
        return self.weights[label]


def _parse_vector(text: str, line_no: int) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(','))
    except ValueError:
        raise QuiverFileError(f"Malformed integer vector '{text}'", line_no) from None


def parse_quiver_file(text: str, source: Optional[str] = None) -> QuiverFile:
    """
    Parse quiver file text.

    Raises:
        QuiverFileError: On any syntax or consistency error, with the line number
    """
    vertices: List[str] = []
    arrows: List[Tuple[int, int]] = []
    arrow_names: List[str] = []
    vectors: List[Tuple[str, str, Tuple[int, ...], int]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(COMMENT_CHAR, 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword, args = tokens[0], tokens[1:]

        if keyword == KEYWORD_VERTEX:
            if len(args) != 1:
                raise QuiverFileError("expected 'vertex <name>'", line_no)
            if args[0] in vertices:
                raise QuiverFileError(f"duplicate vertex '{args[0]}'", line_no)
            vertices.append(args[0])
        elif keyword == KEYWORD_ARROW:
            if len(args) != 3:
                raise QuiverFileError("expected 'arrow <name> <tail> <head>'", line_no)
            name, tail, head = args
            for endpoint in (tail, head):
                if endpoint not in vertices:
                    raise QuiverFileError(f"undeclared vertex '{endpoint}'", line_no)
            if tail == head:
                raise QuiverFileError(f"arrow '{name}' is a loop", line_no)
            if name in arrow_names:
                raise QuiverFileError(f"duplicate arrow '{name}'", line_no)
            arrows.append((vertices.index(tail), vertices.index(head)))
            arrow_names.append(name)
        elif keyword in (KEYWORD_DIM, KEYWORD_WEIGHT):
            if len(args) != 2:
                raise QuiverFileError(f"expected '{keyword} <label> v1,v2,...'", line_no)
            vectors.append((keyword, args[0], _parse_vector(args[1], line_no), line_no))
        else:
            raise QuiverFileError(f"unknown keyword '{keyword}'", line_no)

    if not vertices:
        raise QuiverFileError("no vertices declared")
    quiver = Quiver(tuple(vertices), tuple(arrows), tuple(arrow_names))

    dims: Dict[str, DimVector] = {}
    weights: Dict[str, WeightVector] = {}
    for keyword, label, vector, line_no in vectors:
        if len(vector) != len(vertices):
            raise QuiverFileError(
                f"{keyword} '{label}' has {len(vector)} entries, expected {len(vertices)}",
                line_no
            )
        target = dims if keyword == KEYWORD_DIM else weights
        if label in target:
            raise QuiverFileError(f"duplicate {keyword} label '{label}'", line_no)
        if keyword == KEYWORD_DIM and any(v < 0 for v in vector):
            raise QuiverFileError(f"dim '{label}' has negative entries", line_no)
        target[label] = vector

    return QuiverFile(quiver=quiver, dims=dims, weights=weights, source=source)


def load_quiver_file(path: Union[str, Path]) -> QuiverFile:
    """Read and parse a quiver file."""
    logger.debug(f"Loading quiver file {path}")
    return parse_quiver_file(read_text(path), source=str(path))


def render_quiver_file(quiver_file: QuiverFile) -> str:
    """Text that ``parse_quiver_file`` maps back to an equal QuiverFile."""
    quiver = quiver_file.quiver
    lines = [f"{KEYWORD_VERTEX} {name}" for name in quiver.vertex_names]
    for name, (tail, head) in zip(quiver.arrow_names, quiver.arrows):
        lines.append(
            f"{KEYWORD_ARROW} {name} {quiver.vertex_names[tail]} {quiver.vertex_names[head]}"
        )
    for label, vector in quiver_file.dims.items():
        lines.append(f"{KEYWORD_DIM} {label} {','.join(str(v) for v in vector)}")
    for label, vector in quiver_file.weights.items():
        lines.append(f"{KEYWORD_WEIGHT} {label} {','.join(str(v) for v in vector)}")
    return '\n'.join(lines) + '\n'
