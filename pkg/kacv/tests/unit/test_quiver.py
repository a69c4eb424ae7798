"""Unit tests for quivers, bilinear forms and generic weights."""

import pytest
import numpy as np
from kacv.core.quiver import Quiver
from kacv.core.forms import (
    cartan_matrix,
    euler_form,
    height,
    is_indivisible,
    kac_degree,
    quotient_dimension,
    rep_space_dimension,
    symmetric_form,
    weight_dot
)
from kacv.core.weights import (
    bad_primes,
    default_slope_weight,
    find_generic_weight,
    is_admissible_prime,
    is_generic_weight,
    offending_subvector,
    proper_subvectors
)
from kacv.utils.errors import DivisibleDimensionError, KacError


class TestQuiver:
    """Test cases for Quiver."""

    def setup_method(self):
        """Set up test fixtures."""
        self.kronecker = Quiver.from_arrows(2, [(0, 1), (0, 1)])

    def test_default_names(self):
        """Test generated vertex and arrow names."""
        assert self.kronecker.vertex_names == ('v1', 'v2')
        assert self.kronecker.arrow_names == ('a0', 'a1')
        assert self.kronecker.vertex_index('v2') == 1

    def test_loop_rejected(self):
        """Test that loops are refused."""
        with pytest.raises(ValueError):
            Quiver.from_arrows(1, [(0, 0)])

    def test_endpoint_out_of_range(self):
        """Test that arrows must join existing vertices."""
        with pytest.raises(ValueError):
            Quiver.from_arrows(2, [(0, 2)])

    def test_double_and_undouble(self):
        """Test that reversed arrows follow the originals."""
        doubled = self.kronecker.double()
        assert doubled.is_doubled
        assert doubled.arrows == ((0, 1), (0, 1), (1, 0), (1, 0))
        assert doubled.arrow_names[2:] == ('a0*', 'a1*')
        assert doubled.undouble() == self.kronecker
        with pytest.raises(ValueError):
            doubled.double()

    def test_dim_vector_validation(self):
        """Test length and sign checks."""
        assert self.kronecker.dim_vector([2, 1]) == (2, 1)
        with pytest.raises(ValueError):
            self.kronecker.dim_vector([1, -1])
        with pytest.raises(ValueError):
            self.kronecker.dim_vector([1])

    def test_connected_support(self):
        """Test support connectivity on A3."""
        a3 = Quiver.from_arrows(3, [(0, 1), (1, 2)])
        assert a3.is_connected_support((1, 1, 0))
        assert not a3.is_connected_support((1, 0, 1))
        assert not a3.is_connected_support((0, 0, 0))


class TestForms:
    """Test cases for the Euler and symmetric forms."""

    def setup_method(self):
        """Set up test fixtures."""
        self.a2 = Quiver.from_arrows(2, [(0, 1)])
        self.kronecker = Quiver.from_arrows(2, [(0, 1), (0, 1)])
        self.k3 = Quiver.from_arrows(2, [(0, 1)] * 3)

    def test_euler_form(self):
        """Test <α, α> on small quivers."""
        assert euler_form(self.kronecker, (1, 1), (1, 1)) == 0
        assert euler_form(self.a2, (1, 1), (1, 1)) == 1
        assert euler_form(self.k3, (1, 1), (1, 1)) == -1

    def test_kac_degree(self):
        """Test d = 1 − <α, α>."""
        assert kac_degree(self.a2, (1, 1)) == 0
        assert kac_degree(self.kronecker, (1, 1)) == 1
        assert kac_degree(self.k3, (1, 1)) == 2
        assert quotient_dimension(self.kronecker, (1, 1)) == 2

    def test_symmetric_form_matches_cartan(self):
        """Test (a, b) = aᵀ C b."""
        cartan = cartan_matrix(self.kronecker)
        assert np.array_equal(cartan, [[2, -2], [-2, 2]])
        a, b = (1, 0), (2, 1)
        assert symmetric_form(self.kronecker, a, b) == int(np.array(a) @ cartan @ np.array(b))

    def test_lattice_helpers(self):
        """Test height, divisibility and Rep dimension."""
        assert height((2, 1, 1)) == 4
        assert is_indivisible((2, 3))
        assert not is_indivisible((2, 4))
        assert rep_space_dimension(self.kronecker, (2, 1)) == 4

    def test_length_mismatch_raises(self):
        """Test that vectors of the wrong length are refused."""
        with pytest.raises(KacError):
            euler_form(self.kronecker, (1, 1, 5), (1, 1))
        with pytest.raises(KacError):
            euler_form(self.kronecker, (1, 1), (1,))
        with pytest.raises(KacError):
            weight_dot((1, -1), (1, 1, 1))
        with pytest.raises(ValueError):
            weight_dot((1,), (1, 1))
        assert weight_dot((2, -1), (1, 2)) == 0


class TestGenericWeights:
    """Test cases for generic weight search."""

    def test_proper_subvectors(self):
        """Test that 0 and α are excluded."""
        assert sorted(proper_subvectors((1, 1))) == [(0, 1), (1, 0)]

    def test_smallest_generic_weight(self):
        """Test the deterministic search order."""
        assert find_generic_weight((1, 1)) == (1, -1)
        assert find_generic_weight((1, 1, 1)) == (1, 1, -2)
        assert find_generic_weight((1, 2)) == (2, -1)

    def test_divisible_has_no_generic_weight(self):
        """Test that gcd(α) > 1 is refused."""
        with pytest.raises(DivisibleDimensionError):
            find_generic_weight((2, 2))
        with pytest.raises(ValueError):
            find_generic_weight((0, 0))

    def test_is_generic_weight(self):
        """Test the genericity predicate."""
        assert is_generic_weight((1, -1), (1, 1))
        assert not is_generic_weight((0, 0), (1, 1))
        assert not is_generic_weight((1, 0), (1, 1))

    def test_bad_primes(self):
        """Test primes dividing some λ·β."""
        assert bad_primes((1, -1), (1, 1)) == set()
        assert bad_primes((2, -1), (1, 2)) == {2}
        assert bad_primes((1, 1, -2), (1, 1, 1)) == {2}

    def test_admissible_prime(self):
        """Test reduction of λ mod p."""
        assert is_admissible_prime(3, (2, -1), (1, 2))
        assert not is_admissible_prime(2, (2, -1), (1, 2))
        assert offending_subvector((2, -1), (1, 2), 2) == ((0, 2), -2)
        assert offending_subvector((2, -1), (1, 2), 3) is None

    @pytest.mark.parametrize('alpha', [(1, 1), (1, 2), (2, 3), (1, 1, 1), (2, 1, 1), (2, 1, 1, 1, 1)])
    def test_generic_weight_avoids_every_hyperplane(self, alpha):
        """Test λ·α = 0 and λ·β ≠ 0 for every proper nonzero β ≤ α."""
        weight = find_generic_weight(alpha)
        assert weight_dot(weight, alpha) == 0
        subvectors = list(proper_subvectors(alpha))
        assert subvectors
        assert all(weight_dot(weight, beta) != 0 for beta in subvectors)

    def test_slope_weight_for_divisible(self):
        """Test the slope weight search on divisible vectors."""
        assert default_slope_weight((2, 2)) == (1, -1)
        assert default_slope_weight((2, 4)) == (2, -1)
        assert default_slope_weight((3,)) == (1,)


if __name__ == '__main__':
    pytest.main([__file__])
