"""Unit tests for slopes, HN filtrations and the m-value identity."""

from fractions import Fraction

import pytest
from kacv.core.quiver import Quiver
from kacv.fields.galois import field_make
from kacv.hn import (
    HNType,
    hn_filtration,
    hom_vanishing_check,
    king_slope_equivalence_check,
    m_closed,
    m_identity,
    m_values,
    maximal_destabilizing,
    slope,
    slope_decompositions,
    slope_semistable,
    slope_stable,
    total_order_cmp,
    verify_m_equals_r
)
from kacv.kacmoody import pbw_dimensions, root_multiplicities
from kacv.representations.enumeration import enumerate_reps
from kacv.representations.representation import Representation


class TestSlope:
    """Test cases for slope functions."""

    def test_slope_value(self):
        """Test s(α) = Θ·α / ht(α)."""
        assert slope((-1, 1), (1, 1)) == 0
        assert slope((1, 2), (1, 1)) == Fraction(3, 2)
        with pytest.raises(ValueError):
            slope((1, 1), (0, 0))

    def test_total_order(self):
        """Test that equal slopes are broken lexicographically."""
        assert total_order_cmp((1, 1), (1, 0), (0, 1)) == 1
        assert total_order_cmp((1, 0), (1, 0), (0, 1)) == 1
        assert total_order_cmp((1, 0), (0, 1), (0, 1)) == 0

    def test_hn_type_validation(self):
        """Test that slopes must strictly decrease."""
        hn_type = HNType(((0, 1), (1, 0)), (Fraction(1), Fraction(-1)))
        assert hn_type.label() == '0,1|1,0'
        assert hn_type.total() == (1, 1)
        with pytest.raises(ValueError):
            HNType(((1, 0), (0, 1)), (Fraction(-1), Fraction(1)))
        with pytest.raises(ValueError):
            HNType(((0, 0),), (Fraction(0),))


class TestHNFiltration:
    """Test cases for HN filtrations."""

    def setup_method(self):
        """Set up test fixtures."""
        self.a2 = Quiver.from_arrows(2, [(0, 1)])
        self.kronecker = Quiver.from_arrows(2, [(0, 1), (0, 1)])
        self.f2 = field_make(2)

    def test_semistable_has_one_part(self):
        """Test that a semistable representation is its own HN filtration."""
        linked = Representation.from_entries(self.a2, self.f2, (1, 1), [1])
        assert slope_stable(linked, (1, -1))
        filtration = hn_filtration(linked, (1, -1))
        assert filtration.hn_type.label() == '1,1'
        assert len(filtration.steps) == 1

    def test_kronecker_unstable_everywhere(self):
        """Test that Θ = (−1, 1) splits every Kronecker (1,1) representation."""
        labels = set()
        for rep in enumerate_reps(self.kronecker, (1, 1), self.f2):
            assert not slope_semistable(rep, (-1, 1))
            labels.add(hn_filtration(rep, (-1, 1)).hn_type.label())
        assert labels == {'0,1|1,0'}

    def test_maximal_destabilizing(self):
        """Test the subrepresentation of maximal slope."""
        linked = Representation.from_entries(self.kronecker, self.f2, (1, 1), [1, 0])
        top = maximal_destabilizing(linked, (-1, 1))
        assert top.dims == (0, 1)

    def test_filtration_subquotients(self):
        """Test that the subquotients add up to dim V."""
        rep = Representation.from_entries(self.kronecker, self.f2, (1, 1), [0, 1])
        filtration = hn_filtration(rep, (-1, 1))
        assert filtration.hn_type.total() == (1, 1)
        assert filtration.steps[-1].is_full()

    def test_zero_representation_rejected(self):
        """Test that V = 0 has no HN filtration."""
        with pytest.raises(ValueError):
            hn_filtration(Representation.zero(self.a2, self.f2, (0, 0)), (1, -1))


class TestStabilityChecks:
    """Test cases for King/slope agreement and Hom vanishing."""

    def setup_method(self):
        """Set up test fixtures."""
        self.a2 = Quiver.from_arrows(2, [(0, 1)])
        self.f2 = field_make(2)

    def test_king_matches_slope(self):
        """Test both (semi)stability notions on A2 representations."""
        for rep in enumerate_reps(self.a2, (1, 1), self.f2):
            assert king_slope_equivalence_check(rep, (-1, 1))
            assert king_slope_equivalence_check(rep, (1, -1))

    def test_hom_vanishing(self):
        """Test Hom(S1, S2) = 0 for s(S1) > s(S2)."""
        s1 = Representation.zero(self.a2, self.f2, (1, 0))
        s2 = Representation.zero(self.a2, self.f2, (0, 1))
        assert hom_vanishing_check(s1, s2, (1, -1))
        assert hom_vanishing_check(s2, s1, (1, -1))


class TestMIdentity:
    """Test cases for m_recursive = m_closed = r_α."""

    def setup_method(self):
        """Set up test fixtures."""
        self.kronecker = Quiver.from_arrows(2, [(0, 1), (0, 1)])
        self.k3 = Quiver.from_arrows(2, [(0, 1)] * 3)

    def test_kronecker(self):
        """Test the identity for the imaginary root (1,1)."""
        identity = m_identity(self.kronecker, (1, 1), (-1, 1))
        assert identity.recursive == identity.closed == identity.multiplicity == 1
        assert identity.holds

    def test_m_values_below_alpha(self):
        """Test that simple roots get m = 1."""
        table = root_multiplicities(self.kronecker, (1, 1))
        m = m_values((1, 1), (-1, 1), pbw_dimensions(table))
        assert m[(1, 0)] == 1
        assert m[(0, 1)] == 1
        assert m[(1, 1)] == 1

    def test_closed_form_decompositions(self):
        """Test that only α itself has slope s(α) below α."""
        table = root_multiplicities(self.kronecker, (1, 1))
        decompositions = list(slope_decompositions((1, 1), (-1, 1), table))
        assert len(decompositions) == 1
        assert decompositions[0].total() == (1, 1)
        assert m_closed((1, 1), (-1, 1), table) == 1

    def test_generic_weights(self):
        """Test the identity for generic λ and Θ = −λ."""
        assert verify_m_equals_r(self.kronecker, (2, 1), (1, -2))
        assert verify_m_equals_r(self.k3, (1, 1), (1, -1))


if __name__ == '__main__':
    pytest.main([__file__])
