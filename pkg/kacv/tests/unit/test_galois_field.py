"""Unit tests for finite field arithmetic."""

import pytest
import numpy as np
from kacv.fields.galois import (
    GaloisField,
    field_make,
    field_for_order,
    prime_powers,
    smallest_irreducible_modulus
)
from kacv.fields.groups import gl_order, gl_alpha_order, g_alpha_order
from kacv.utils.errors import BudgetExceededError


class TestGaloisField:
    """Test cases for GaloisField."""

    def setup_method(self):
        """Set up test fixtures."""
        self.f3 = field_make(3)
        self.f4 = field_make(2, 2)

    def test_prime_field_arithmetic(self):
        """Test residue arithmetic in F_3."""
        assert int(self.f3.add(2, 2)) == 1
        assert int(self.f3.mul(2, 2)) == 1
        assert int(self.f3.neg(1)) == 2
        assert int(self.f3.sub(0, 1)) == 2
        assert int(self.f3.inv(2)) == 2

    def test_f4_modulus_is_x2_x_1(self):
        """Test that F_4 is built on x^2 + x + 1."""
        assert smallest_irreducible_modulus(2, 2) == (1, 1, 1)
        assert self.f4.modulus == (1, 1, 1)

    def test_f4_multiplication(self):
        """Test products of the encoded elements x = 2 and x + 1 = 3."""
        assert int(self.f4.mul(2, 2)) == 3
        assert int(self.f4.mul(2, 3)) == 1
        assert int(self.f4.inv(2)) == 3
        assert int(self.f4.add(2, 3)) == 1
        assert int(self.f4.add(3, 3)) == 0

    def test_every_nonzero_element_has_inverse(self):
        """Test a * a^-1 = 1 across F_9."""
        f9 = field_make(3, 2)
        elements = f9.elements()[1:]
        assert np.all(f9.mul(elements, f9.inv(elements)) == 1)

    def test_inverse_of_zero_raises(self):
        """Test that zero has no inverse."""
        with pytest.raises(ZeroDivisionError):
            self.f3.inv(0)

    def test_matmul(self):
        """Test matrix product over F_3."""
        a = np.array([[1, 2], [0, 1]])
        b = np.array([[2, 0], [1, 1]])
        expected = np.array([[1, 2], [1, 1]])
        assert np.array_equal(self.f3.matmul(a, b), expected)

    def test_element_reduces_integers(self):
        """Test the map Z -> F_q."""
        assert self.f3.element(-1) == 2
        assert self.f4.element(3) == 1

    def test_fields_compare_by_order(self):
        """Test equality and caching."""
        assert field_make(2, 2) is self.f4
        assert GaloisField(3) == self.f3
        assert hash(GaloisField(3)) == hash(self.f3)

    def test_field_for_order(self):
        """Test lookup by order."""
        assert field_for_order(4) == self.f4
        assert field_for_order(7).p == 7
        with pytest.raises(ValueError):
            field_for_order(6)
        with pytest.raises(ValueError):
            field_for_order(2 ** 5)

    def test_table_limit(self):
        """Test that oversized log tables are refused."""
        with pytest.raises(BudgetExceededError):
            GaloisField(3, 2, table_limit=8)

    def test_prime_powers_sorted(self):
        """Test the sampling order of prime powers."""
        assert prime_powers(3, 2) == [(2, 2, 1), (3, 3, 1), (4, 2, 2), (9, 3, 2)]

    def test_rejects_composite_characteristic(self):
        """Test that p must be prime."""
        with pytest.raises(ValueError):
            GaloisField(4)


class TestGroupOrders:
    """Test cases for group orders."""

    def test_gl_order(self):
        """Test |GL_n(F_q)|."""
        assert gl_order(0, 2) == 1
        assert gl_order(1, 3) == 2
        assert gl_order(2, 2) == 6

    def test_gl_alpha_order(self):
        """Test the product over vertices."""
        assert gl_alpha_order((2, 1), 2) == 6
        assert gl_alpha_order((1, 1), 3) == 4

    def test_g_alpha_order(self):
        """Test the quotient by scalars."""
        assert g_alpha_order((1, 1), 2) == 1
        assert g_alpha_order((1, 1), 3) == 2
        assert g_alpha_order((2, 1), field_make(2)) == 6

    def test_g_alpha_of_zero_raises(self):
        """Test that G(0) is refused."""
        with pytest.raises(ValueError):
            g_alpha_order((0, 0), 2)


class TestFieldAxioms:
    """Exhaustive field axioms for every small field."""

    @pytest.mark.parametrize('q', [2, 3, 4, 5, 7, 8, 9])
    def test_axioms_hold(self, q):
        """Test the ring and field axioms on all pairs and triples of elements."""
        field = field_for_order(q)
        x = field.elements()
        a, b = x[:, None], x[None, :]
        a3, b3, c3 = x[:, None, None], x[None, :, None], x[None, None, :]

        total = field.add(a, b)
        product = field.mul(a, b)
        assert total.min() >= 0 and total.max() < q
        assert product.min() >= 0 and product.max() < q
        assert np.array_equal(total, total.T)
        assert np.array_equal(product, product.T)
        # Each row of the addition and multiplication tables is a permutation
        assert all(sorted(row) == list(range(q)) for row in total)
        assert all(sorted(row) == list(range(1, q)) for row in product[1:, 1:])

        assert np.array_equal(field.add(x, 0), x)
        assert np.array_equal(field.mul(x, 1), x)
        assert np.all(field.mul(x, 0) == 0)
        assert np.all(field.add(x, field.neg(x)) == 0)
        assert np.all(field.mul(x[1:], field.inv(x[1:])) == 1)

        assert np.array_equal(field.add(field.add(a3, b3), c3), field.add(a3, field.add(b3, c3)))
        assert np.array_equal(field.mul(field.mul(a3, b3), c3), field.mul(a3, field.mul(b3, c3)))
        assert np.array_equal(field.mul(a3, field.add(b3, c3)),
                              field.add(field.mul(a3, b3), field.mul(a3, c3)))

    @pytest.mark.parametrize('q,p', [(4, 2), (8, 2), (9, 3)])
    def test_characteristic(self, q, p):
        """Test that p · 1 = 0 and that no smaller multiple vanishes."""
        field = field_for_order(q)
        partial = 0
        for n in range(1, p + 1):
            partial = int(field.add(partial, 1))
            assert (partial == 0) == (n == p)


if __name__ == '__main__':
    pytest.main([__file__])
