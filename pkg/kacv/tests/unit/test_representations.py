"""Unit tests for representations, Hom/Ext and subrepresentations."""

import pytest
import numpy as np
from kacv.core.quiver import Quiver
from kacv.fields.galois import field_make
from kacv.representations.representation import Representation, arrow_offsets
from kacv.representations.enumeration import (
    enumerate_reps,
    enumeration_cost,
    index_entries
)
from kacv.representations.endomorphisms import (
    end_algebra,
    ext1_dimension,
    hom_dimension,
    is_absolutely_indecomposable,
    is_indecomposable,
    locality
)
from kacv.representations.subreps import (
    full_subrepresentation,
    gaussian_binomial,
    Subrepresentation,
    lift_from_quotient,
    quotient_rep,
    restrict_rep,
    subrepresentations,
    subspace_count,
    zero_subrepresentation
)
from kacv.utils.errors import BudgetExceededError, KacError


class TestRepresentation:
    """Test cases for Representation and enumeration."""

    def setup_method(self):
        """Set up test fixtures."""
        self.kronecker = Quiver.from_arrows(2, [(0, 1), (0, 1)])
        self.f2 = field_make(2)

    def test_arrow_offsets(self):
        """Test the flat layout of arrow blocks."""
        assert arrow_offsets(self.kronecker, (2, 1)) == ([0, 2], 4)

    def test_from_entries_shapes(self):
        """Test that blocks are dims[head] × dims[tail]."""
        rep = Representation.from_entries(self.kronecker, self.f2, (2, 1), [1, 0, 0, 1])
        assert rep.matrices[0].shape == (1, 2)
        assert rep.entries().tolist() == [1, 0, 0, 1]

    def test_entries_outside_field_rejected(self):
        """Test that entries must lie in 0..q-1."""
        with pytest.raises(ValueError):
            Representation.from_entries(self.kronecker, self.f2, (1, 1), [2, 0])

    def test_equality_and_hash(self):
        """Test identity by quiver, field and entries."""
        a = Representation.from_entries(self.kronecker, self.f2, (1, 1), [1, 0])
        b = Representation.from_entries(self.kronecker, self.f2, (1, 1), [1, 0])
        assert a == b
        assert len({a, b}) == 1

    def test_enumerate_counts_every_point(self):
        """Test that q^N representations are produced, each once."""
        reps = list(enumerate_reps(self.kronecker, (2, 1), self.f2))
        assert len(reps) == 16
        assert len({r.key() for r in reps}) == 16
        assert enumeration_cost(self.kronecker, (2, 1), self.f2) == 16

    def test_enumerate_budget(self):
        """Test that oversized spaces are refused before iteration."""
        with pytest.raises(BudgetExceededError):
            enumerate_reps(self.kronecker, (2, 1), self.f2, budget=8)

    def test_index_entries_lexicographic(self):
        """Test base-q decoding of indices."""
        entries = index_entries(self.f2, 2, 0, 4)
        assert entries.tolist() == [[0, 0], [0, 1], [1, 0], [1, 1]]

    def test_direct_sum_and_components(self):
        """Test block sums and visible decomposability."""
        s1 = Representation.zero(self.kronecker, self.f2, (1, 0))
        s2 = Representation.zero(self.kronecker, self.f2, (0, 1))
        total = s1.direct_sum(s2)
        assert total.dims == (1, 1)
        assert total.support_components() == 2
        linked = Representation.from_entries(self.kronecker, self.f2, (1, 1), [1, 0])
        assert linked.support_components() == 1


class TestHomAndEnd:
    """Test cases for Hom, Ext and locality."""

    def setup_method(self):
        """Set up test fixtures."""
        self.a2 = Quiver.from_arrows(2, [(0, 1)])
        self.kronecker = Quiver.from_arrows(2, [(0, 1), (0, 1)])
        self.f2 = field_make(2)

    def test_hom_dimensions(self):
        """Test Hom on A2."""
        linked = Representation.from_entries(self.a2, self.f2, (1, 1), [1])
        zero = Representation.zero(self.a2, self.f2, (1, 1))
        assert hom_dimension(linked, linked) == 1
        assert hom_dimension(zero, zero) == 2

    def test_ext_between_simples(self):
        """Test Ext^1 = Hom − <dim V, dim W> on A2 simples."""
        s1 = Representation.zero(self.a2, self.f2, (1, 0))
        s2 = Representation.zero(self.a2, self.f2, (0, 1))
        assert ext1_dimension(s1, s2) == 1
        assert ext1_dimension(s2, s1) == 0

    def test_locality_of_kronecker_reps(self):
        """Test indecomposability on K2 (1,1)."""
        linked = Representation.from_entries(self.kronecker, self.f2, (1, 1), [1, 0])
        zero = Representation.zero(self.kronecker, self.f2, (1, 1))
        assert is_absolutely_indecomposable(linked)
        assert not is_indecomposable(zero)
        assert locality(zero)[0] is False

    def test_indecomposable_but_not_absolutely(self):
        """Test a representation with End = F_4 over F_2."""
        identity = np.eye(2, dtype=np.int64)
        companion = np.array([[0, 1], [1, 1]])
        rep = Representation(self.kronecker, self.f2, (2, 2), (identity, companion))
        assert end_algebra(rep).dimension == 2
        assert is_indecomposable(rep)
        assert not is_absolutely_indecomposable(rep)

    def test_absolutely_indecomposable_implies_indecomposable(self):
        """Test the implication over every K2 representation of dimension (2,2) over F_2."""
        strictly_weaker = 0
        for rep in enumerate_reps(self.kronecker, (2, 2), self.f2):
            absolute = is_absolutely_indecomposable(rep)
            plain = is_indecomposable(rep)
            assert plain or not absolute
            strictly_weaker += plain and not absolute
        assert strictly_weaker > 0


class TestSubrepresentations:
    """Test cases for subrepresentation search and quotients."""

    def setup_method(self):
        """Set up test fixtures."""
        self.kronecker = Quiver.from_arrows(2, [(0, 1), (0, 1)])
        self.f2 = field_make(2)
        self.linked = Representation.from_entries(self.kronecker, self.f2, (1, 1), [1, 0])

    def test_subspace_counts(self):
        """Test Gaussian binomial sums."""
        assert subspace_count(2, 2) == 5
        assert gaussian_binomial(4, 2, 2) == 35
        assert gaussian_binomial(3, 4, 2) == 0

    def test_subrepresentation_counts(self):
        """Test that x ≠ 0 forbids the subspace (1, 0)."""
        subs = list(subrepresentations(self.linked))
        assert len(subs) == 3
        assert (1, 0) not in {s.dims for s in subs}
        zero = Representation.zero(self.kronecker, self.f2, (1, 1))
        assert len(list(subrepresentations(zero))) == 4

    def test_subrepresentation_budget(self):
        """Test the subspace tuple budget."""
        with pytest.raises(BudgetExceededError):
            subrepresentations(self.linked, budget=2)

    def test_restrict_full_is_identity(self):
        """Test that restricting to V gives V back."""
        assert restrict_rep(full_subrepresentation(self.linked)) == self.linked
        assert zero_subrepresentation(self.linked).is_zero()

    def test_quotient_and_lift(self):
        """Test V / W and the preimage of a quotient subrepresentation."""
        sub = next(s for s in subrepresentations(self.linked) if s.dims == (0, 1))
        quotient = quotient_rep(self.linked, sub)
        assert quotient.dims == (1, 0)
        lifted = lift_from_quotient(sub, full_subrepresentation(quotient))
        assert lifted.is_full()

    def test_quotient_rejects_non_invariant(self):
        """Test that V / W needs x_a(W_t) inside W_h."""
        a2 = Quiver.from_arrows(2, [(0, 1)])
        v = Representation.from_entries(a2, self.f2, (1, 1), [1])
        w = Subrepresentation(
            v,
            (np.array([[1]], dtype=np.int64), np.zeros((0, 1), dtype=np.int64)),
            ((0,), ())
        )
        with pytest.raises(KacError):
            quotient_rep(v, w)


if __name__ == '__main__':
    pytest.main([__file__])
