"""Unit tests for the package manifest."""

import ast
from pathlib import Path

import pytest
import kacv

PACKAGE_ROOT = Path(__file__).resolve().parents[2]
REQUIREMENTS = PACKAGE_ROOT.parent / 'requirements.txt'


def _setup_keywords():
    tree = ast.parse((PACKAGE_ROOT / 'setup.py').read_text(encoding='utf-8'))
    for node in ast.walk(tree):
        if isinstance(node, ast.Call) and getattr(node.func, 'id', None) == 'setup':
            return {kw.arg: kw.value for kw in node.keywords}
    raise AssertionError("setup() call not found")


class TestManifest:
    """Test cases for setup.py."""

    def setup_method(self):
        """Set up test fixtures."""
        self.keywords = _setup_keywords()

    def test_version_matches_package(self):
        """Test that the manifest and the package agree on the version."""
        assert ast.literal_eval(self.keywords['version']) == kacv.__version__

    def test_classifiers_describe_a_math_tool(self):
        """Test the topic and environment classifiers."""
        classifiers = ast.literal_eval(self.keywords['classifiers'])
        assert 'Topic :: Scientific/Engineering :: Mathematics' in classifiers
        assert 'Environment :: Console' in classifiers
        assert not any('Software Development' in c for c in classifiers)

    def test_catalog_is_packaged(self):
        """Test that the bundled quiver files are declared as package data."""
        package_data = ast.literal_eval(self.keywords['package_data'])
        assert 'data/quivers/*.quiver' in package_data['kacv']
        assert list((PACKAGE_ROOT / 'data' / 'quivers').glob('*.quiver'))

    @pytest.mark.skipif(not REQUIREMENTS.exists(), reason="requirements.txt not present")
    def test_install_requires_matches_requirements(self):
        """Test that install_requires pins the same packages as requirements.txt."""
        declared = ast.literal_eval(self.keywords['install_requires'])
        lines = [line.strip() for line in REQUIREMENTS.read_text(encoding='utf-8').splitlines()]
        pinned = [line for line in lines if line and not line.startswith('#')]
        assert sorted(declared) == sorted(pinned)


if __name__ == '__main__':
    pytest.main([__file__])
