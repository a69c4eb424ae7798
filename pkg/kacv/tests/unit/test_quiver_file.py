"""Unit tests for the quiver file format."""

from pathlib import Path

import pytest
from kacv.io import (
    QuiverFile,
    load_quiver_file,
    parse_quiver_file,
    render_quiver_file
)
from kacv.utils.errors import QuiverFileError

CATALOG = Path(__file__).resolve().parents[2] / 'data' / 'quivers'

KRONECKER = """
# two arrows
vertex v1
vertex v2
arrow a v1 v2   # first
arrow b v1 v2
dim d 1,1
weight lam 1,-1
"""


class TestParseQuiverFile:
    """Test cases for parse_quiver_file."""

    def test_parse_kronecker(self):
        """Test vertices, arrows and labelled vectors."""
        parsed = parse_quiver_file(KRONECKER, source='inline')
        assert parsed.quiver.vertex_names == ('v1', 'v2')
        assert parsed.quiver.arrows == ((0, 1), (0, 1))
        assert parsed.quiver.arrow_names == ('a', 'b')
        assert parsed.dim('d') == (1, 1)
        assert parsed.weight('lam') == (1, -1)
        assert parsed.source == 'inline'

    def test_unknown_labels(self):
        """Test lookups of undeclared labels."""
        parsed = parse_quiver_file(KRONECKER)
        with pytest.raises(QuiverFileError):
            parsed.dim('missing')
        with pytest.raises(QuiverFileError):
            parsed.weight('missing')

    @pytest.mark.parametrize('text,line_no', [
        ("vertex v1\nvertex v1\n", 2),
        ("vertex v1\narrow a v1 v2\n", 2),
        ("vertex v1\nvertex v2\narrow a v1 v1\n", 3),
        ("vertex v1\nvertex v2\narrow a v1 v2\narrow a v2 v1\n", 4),
        ("vertex v1\ndim d 1,x\n", 2),
        ("vertex v1\nvertex v2\ndim d 1\n", 3),
        ("vertex v1\ndim d -1\n", 2),
        ("vertex v1\ndim d 1\ndim d 2\n", 3),
        ("vertex v1\nloop a v1\n", 2),
        ("vertex\n", 1),
    ])
    def test_errors_carry_line_numbers(self, text, line_no):
        """Test that each malformed input names its line."""
        with pytest.raises(QuiverFileError) as excinfo:
            parse_quiver_file(text)
        assert excinfo.value.line_no == line_no
        assert str(excinfo.value).startswith(f"line {line_no}: ")

    def test_no_vertices(self):
        """Test that an empty file is refused."""
        with pytest.raises(QuiverFileError):
            parse_quiver_file("# nothing here\n")

    def test_render_round_trip(self):
        """Test that rendering and parsing gives the same content."""
        parsed = parse_quiver_file(KRONECKER)
        again = parse_quiver_file(render_quiver_file(parsed))
        assert again.quiver == parsed.quiver
        assert again.dims == parsed.dims
        assert again.weights == parsed.weights


class TestCatalog:
    """Test cases for the bundled quiver files."""

    def test_catalog_files_load(self):
        """Test that every bundled file parses."""
        files = sorted(CATALOG.glob('*.quiver'))
        assert len(files) >= 5
        for path in files:
            assert isinstance(load_quiver_file(path), QuiverFile)

    def test_affine_d4(self):
        """Test the D4 catalog entry."""
        parsed = load_quiver_file(CATALOG / 'd4.quiver')
        assert parsed.quiver.vertex_count == 5
        assert parsed.quiver.arrow_count == 4
        assert parsed.dim('delta') == (2, 1, 1, 1, 1)

    def test_missing_file(self, tmp_path):
        """Test that a missing path raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            load_quiver_file(tmp_path / 'absent.quiver')


if __name__ == '__main__':
    pytest.main([__file__])
