"""
Finite fields F_q, q = p^k, with vectorized numpy arithmetic.

Elements are encoded as integers 0..q-1 whose base-p digits are the
coefficients (constant term first) of a polynomial modulo the defining
modulus. For k = 1 this is the usual residue encoding. Every operation
accepts and returns numpy int64 arrays (scalars broadcast).
"""

from functools import lru_cache
from itertools import product
from typing import List, Sequence, Tuple

import numpy as np
from sympy import Poly, Symbol, factorint, isprime, primerange

from ..config.constants import DEFAULT_FIELD_TABLE_LIMIT, MAX_EXTENSION_DEGREE
from ..utils.errors import BudgetExceededError
from ..utils.logging import get_logger

logger = get_logger(__name__)

_X = Symbol('x')


def _is_irreducible(coefficients: Sequence[int], p: int) -> bool:
    """Irreducibility over F_p of the polynomial with ascending coefficients."""
    poly = Poly(list(reversed(coefficients)), _X, modulus=p)
    return poly.is_irreducible


def smallest_irreducible_modulus(p: int, k: int) -> Tuple[int, ...]:
    """
    Lexicographically smallest monic irreducible polynomial of degree k over F_p.

    Candidates x^k + c_{k-1} x^{k-1} + ... + c_0 are compared on
    (c_{k-1}, ..., c_0). Degree 1 gives the modulus x.

    Returns:
        Ascending coefficients (c_0, ..., c_{k-1}, 1)
    """
    if k == 1:
        return (0, 1)
    for high_first in product(range(p), repeat=k):
        coefficients = tuple(reversed(high_first)) + (1,)
        if coefficients[0] == 0:
            continue
        if _is_irreducible(coefficients, p):
            return coefficients
    raise ArithmeticError(f"No irreducible polynomial of degree {k} over F_{p}")


class GaloisField:
    """
    The field F_{p^k} with the smallest irreducible modulus.

    Use ``field_make`` to obtain cached instances.
    """

    def __init__(self, p: int, k: int = 1,
                 table_limit: int = DEFAULT_FIELD_TABLE_LIMIT):
        if not isprime(p):
            raise ValueError(f"Characteristic must be prime, got {p}")
        if not 1 <= k <= MAX_EXTENSION_DEGREE:
            raise ValueError(
                f"Extension degree must lie in 1..{MAX_EXTENSION_DEGREE}, got {k}"
            )
        self.p = int(p)
        self.k = int(k)
        self.q = self.p ** self.k
        self.modulus = smallest_irreducible_modulus(self.p, self.k)

        if self.k == 1:
            self._inverse = np.zeros(self.p, dtype=np.int64)
            for a in range(1, self.p):
                self._inverse[a] = pow(a, self.p - 2, self.p)
        else:
            if self.q > table_limit:
                raise BudgetExceededError(
                    f"log tables for F_{self.q}", self.q, table_limit
                )
            self._build_tables()

    def __repr__(self) -> str:
        return f"GaloisField(p={self.p}, k={self.k})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, GaloisField)
                and (self.p, self.k) == (other.p, other.k))

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    def __reduce__(self):
        return (field_make, (self.p, self.k, max(self.q, DEFAULT_FIELD_TABLE_LIMIT)))

    # Table construction

    def _digits_of(self, value: int) -> List[int]:
        digits = []
        for _ in range(self.k):
            value, digit = divmod(value, self.p)
            digits.append(digit)
        return digits

    def _encode(self, digits: Sequence[int]) -> int:
        return sum(int(d) * self.p ** i for i, d in enumerate(digits))

    def _mulmod(self, a: Sequence[int], b: Sequence[int]) -> List[int]:
        """Product of two digit polynomials modulo the modulus."""
        k, p = self.k, self.p
        product_digits = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    product_digits[i + j] = (product_digits[i + j] + x * y) % p
        # x^k ≡ −(c_0 + ... + c_{k-1} x^{k-1})
        for degree in range(2 * k - 2, k - 1, -1):
            lead = product_digits[degree]
            if lead:
                product_digits[degree] = 0
                for i in range(k):
                    index = degree - k + i
                    product_digits[index] = (product_digits[index] - lead * self.modulus[i]) % p
        return product_digits[:k]

    def _powers(self, generator: int) -> List[int]:
        """Successive powers g^0, g^1, ... until the cycle closes."""
        g = self._digits_of(generator)
        current = self._digits_of(1)
        powers = [1]
        while True:
            current = self._mulmod(current, g)
            value = self._encode(current)
            if value == 1:
                return powers
            powers.append(value)

    def _build_tables(self) -> None:
        q = self.q
        self._digits = np.array([self._digits_of(v) for v in range(q)], dtype=np.int64)
        self._weights = self.p ** np.arange(self.k, dtype=np.int64)

        for candidate in range(2, q):
            powers = self._powers(candidate)
            if len(powers) == q - 1:
                break
        else:
            raise ArithmeticError(f"No primitive element found in F_{q}")
        logger.debug(f"F_{q}: modulus {self.modulus}, primitive element {candidate}")

        self._exp = np.array(powers + powers, dtype=np.int64)
        self._log = np.zeros(q, dtype=np.int64)
        self._log[np.array(powers, dtype=np.int64)] = np.arange(q - 1, dtype=np.int64)

    # Elementwise arithmetic

    def element(self, n: int) -> int:
        """Image of an integer under Z → F_q."""
        return int(n) % self.p

    def elements(self) -> np.ndarray:
        """All field elements in encoding order."""
        return np.arange(self.q, dtype=np.int64)

    def _compose(self, digits: np.ndarray) -> np.ndarray:
        return digits @ self._weights

    def add(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a + b) % self.p
        return self._compose((self._digits[a] + self._digits[b]) % self.p)

    def neg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.k == 1:
            return (-a) % self.p
        return self._compose((-self._digits[a]) % self.p)

    def sub(self, a, b) -> np.ndarray:
        return self.add(a, self.neg(b))

    def mul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a * b) % self.p
        result = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, result)

    def inv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("Zero has no inverse")
        if self.k == 1:
            return self._inverse[a]
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def sum(self, a, axis: int) -> np.ndarray:
        """Field sum along an axis."""
        a = np.asarray(a, dtype=np.int64)
        axis = axis % a.ndim
        if self.k == 1:
            return a.sum(axis=axis) % self.p
        return self._compose(self._digits[a].sum(axis=axis) % self.p)

    def matmul(self, a, b) -> np.ndarray:
        """Matrix product over F_q (broadcasting over leading axes)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a @ b) % self.p
        if a.shape[-1] == 0:
            return np.zeros(a.shape[:-1] + b.shape[-1:], dtype=np.int64)
        products = self.mul(a[..., :, :, None], b[..., None, :, :])
        return self.sum(products, axis=-2)


@lru_cache(maxsize=None)
def field_make(p: int, k: int = 1,
               table_limit: int = DEFAULT_FIELD_TABLE_LIMIT) -> GaloisField:
    """
    Cached constructor for F_{p^k}.

    ``table_limit`` caps the size of extension-field log tables.

    Raises:
        ValueError: If p is not prime or k is outside 1..4
    """
    return GaloisField(p, k, table_limit)


def field_for_order(q: int,
                    table_limit: int = DEFAULT_FIELD_TABLE_LIMIT) -> GaloisField:
    """
    The field with q elements.

    Raises:
        ValueError: If q is not a prime power p^k with k ≤ 4
    """
    if q < 2:
        raise ValueError(f"Field order must be at least 2, got {q}")
    factors = factorint(q)
    if len(factors) != 1:
        raise ValueError(f"Field order {q} is not a prime power")
    (p, k), = factors.items()
    if k > MAX_EXTENSION_DEGREE:
        raise ValueError(
            f"Field order {q} = {p}^{k} exceeds extension degree {MAX_EXTENSION_DEGREE}"
        )
    return field_make(int(p), int(k), table_limit)


def prime_powers(max_prime: int,
                 max_degree: int = MAX_EXTENSION_DEGREE) -> List[Tuple[int, int, int]]:
    """
    All (q, p, k) with p ≤ max_prime prime and 1 ≤ k ≤ max_degree, sorted by q.
    """
    powers = [(p ** k, p, k)
              for p in primerange(2, max_prime + 1)
              for k in range(1, max_degree + 1)]
    return sorted(powers)
