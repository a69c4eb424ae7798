"""Unit tests for Kac polynomial reconstruction and Betti numbers."""

import pytest
from kacv.config import KacConfig
from kacv.core.quiver import Quiver
from kacv.moment import KacPolynomial, betti_from_kac, kac_polynomial
from kacv.utils.errors import (
    BudgetExceededError,
    ConjectureViolationError,
    DivisibleDimensionError,
    KacError
)


class TestKacPolynomialValue:
    """Test cases for the KacPolynomial value type."""

    def test_trailing_zeros_stripped(self):
        """Test normalisation and degree."""
        poly = KacPolynomial((1, 1, 0), 2)
        assert poly.coefficients == (1, 1)
        assert poly.degree == 1
        assert poly.constant_term == 1
        assert poly.evaluate(3) == 4
        assert str(poly) == 'q + 1'

    def test_degree_bound_enforced(self):
        """Test that coefficients above d are refused."""
        with pytest.raises(ValueError):
            KacPolynomial((0, 0, 1), 1)

    def test_zero_polynomial(self):
        """Test the empty coefficient tuple."""
        poly = KacPolynomial((), -2)
        assert poly.is_zero()
        assert poly.degree == -1
        assert poly.constant_term == 0


class TestKacPolynomial:
    """Test cases for kac_polynomial."""

    def setup_method(self):
        """Set up test fixtures."""
        self.config = KacConfig.quick()
        self.a2 = Quiver.from_arrows(2, [(0, 1)])
        self.a3 = Quiver.from_arrows(3, [(0, 1), (1, 2)])
        self.kronecker = Quiver.from_arrows(2, [(0, 1), (0, 1)])
        self.k3 = Quiver.from_arrows(2, [(0, 1)] * 3)

    def test_kronecker(self):
        """Test a_(1,1) = q + 1 by both methods."""
        for method in ('moment', 'direct'):
            poly = kac_polynomial(self.kronecker, (1, 1), self.config, method=method)
            assert poly.coefficients == (1, 1)
            assert poly.method == method
        assert kac_polynomial(self.kronecker, (1, 1), self.config).weight == (1, -1)

    def test_three_arrows(self):
        """Test a_(1,1) = q² + q + 1."""
        poly = kac_polynomial(self.k3, (1, 1), self.config)
        assert poly.coefficients == (1, 1, 1)
        assert poly.degree_bound == 2
        assert [q for q, _ in poly.samples] == [2, 3, 4, 5]

    def test_real_roots(self):
        """Test a_α = 1 for real roots."""
        assert kac_polynomial(self.a2, (1, 1), self.config).coefficients == (1,)
        assert kac_polynomial(self.a3, (1, 1, 1), self.config).coefficients == (1,)

    def test_bad_prime_skipped(self):
        """Test that characteristic 2 is not sampled for λ = (2, -1)."""
        poly = kac_polynomial(self.kronecker, (1, 2), self.config)
        assert poly.coefficients == (1,)
        assert poly.weight == (2, -1)
        assert all(q % 2 for q, _ in poly.samples)

    def test_not_a_root(self):
        """Test that <α, α> > 1 gives the zero polynomial."""
        assert kac_polynomial(self.a2, (2, 1), self.config).is_zero()

    def test_divisible_needs_direct(self):
        """Test that the moment method refuses gcd(α) > 1."""
        with pytest.raises(DivisibleDimensionError):
            kac_polynomial(self.kronecker, (2, 2), self.config, method='moment')

    def test_unknown_method(self):
        """Test method validation."""
        with pytest.raises(ValueError):
            kac_polynomial(self.kronecker, (1, 1), self.config, method='spectral')

    def test_budget(self):
        """Test that an oversized sample raises."""
        config = KacConfig.quick().with_overrides(budget=4)
        with pytest.raises(BudgetExceededError):
            kac_polynomial(self.kronecker, (1, 1), config, method='auto')

    def test_too_few_primes(self):
        """Test that running out of admissible prime powers raises."""
        config = KacConfig.quick().with_overrides(max_prime=2)
        with pytest.raises(KacError):
            kac_polynomial(self.a3, (1, 1, 1), config)


class TestBetti:
    """Test cases for betti_from_kac."""

    def test_kronecker(self):
        """Test b_0 = b_2 = 1 for q + 1."""
        assert betti_from_kac(KacPolynomial((1, 1), 1)) == [1, 0, 1]

    def test_degree_below_bound(self):
        """Test that missing top coefficients give vanishing low Betti numbers."""
        assert betti_from_kac(KacPolynomial((1,), 1)) == [0, 0, 1]

    def test_zero_and_negative(self):
        """Test the empty case and a negative coefficient."""
        assert betti_from_kac(KacPolynomial((), 0)) == []
        with pytest.raises(ConjectureViolationError):
            betti_from_kac(KacPolynomial((1, -1), 1))


if __name__ == '__main__':
    pytest.main([__file__])
