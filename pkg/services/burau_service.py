import logging

import numpy as np

from errors import DomainError
from models.braid_models import BraidWord
from models.polynomial_models import LaurentPolynomial
from services.braid_cache import get_cached, store
from services.braid_service import is_cyclic

logger = logging.getLogger(__name__)

ONE = LaurentPolynomial.constant(1)
ZERO = LaurentPolynomial.constant(0)
T = LaurentPolynomial.monomial(1)
T_INV = LaurentPolynomial.monomial(-1)


def _identity(m: int) -> np.ndarray:
    matrix = np.full((m, m), ZERO, dtype=object)
    for i in range(m):
        matrix[i, i] = ONE
    return matrix


def _multiply_generator(matrix: np.ndarray, index: int, sign: int) -> None:
    """In place: matrix <- matrix · R(σ_index^sign).

    R(σ_i) is the identity except row i, which reads (t, -t, 1) around the
    diagonal (truncated at the ends); R(σ_i^-1) has row (1, -t^-1, t^-1).
    """
    m = matrix.shape[0]
    i = index - 1
    if sign > 0:
        left, diagonal, right = T, -T, ONE
    else:
        left, diagonal, right = ONE, -T_INV, T_INV
    column = [matrix[r, i] for r in range(m)]
    for r in range(m):
        if i > 0:
            matrix[r, i - 1] = matrix[r, i - 1] + column[r] * left
        if i < m - 1:
            matrix[r, i + 1] = matrix[r, i + 1] + column[r] * right
        matrix[r, i] = column[r] * diagonal


def reduced_burau(b: BraidWord) -> np.ndarray:
    """Reduced Burau matrix, (n-1)×(n-1), of a braid on n strands."""
    matrix = _identity(b.strands - 1)
    for index, sign in b.letters:
        _multiply_generator(matrix, index, sign)
    return matrix


def determinant(matrix: np.ndarray) -> LaurentPolynomial:
    """Fraction-free (Bareiss) elimination; every division is exact."""
    m = matrix.shape[0]
    if m == 0:
        return ONE
    a = matrix.copy()
    sign = 1
    previous = ONE
    for k in range(m - 1):
        if a[k, k].is_zero():
            swap = next((r for r in range(k + 1, m) if not a[r, k].is_zero()), None)
            if swap is None:
                return ZERO
            a[[k, swap]] = a[[swap, k]]
            sign = -sign
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                a[i, j] = (a[i, j] * a[k, k] - a[i, k] * a[k, j]).exact_div(previous)
        previous = a[k, k]
    return a[m - 1, m - 1] if sign > 0 else -a[m - 1, m - 1]


def normalize_alexander(poly: LaurentPolynomial) -> LaurentPolynomial:
    """Symmetric representative Δ(t) = Δ(t^-1) with Δ(1) > 0."""
    if poly.is_zero():
        return poly
    centre2 = poly.min_exponent2 + poly.max_exponent2
    if centre2 % 4:
        raise ArithmeticError(f"Alexander polynomial {poly} has no integral symmetric representative")
    shifted = poly.shift(-centre2 // 2)
    if shifted.value_at_one() < 0:
        shifted = -shifted
    return shifted


def alexander(b: BraidWord) -> LaurentPolynomial:
    """
    Δ(t) = det(R(b) - I) · (1 - t) / (1 - t^n) from the reduced Burau
    matrix R(b), normalised to the symmetric representative.
    """
    if not is_cyclic(b):
        raise DomainError("the Alexander polynomial is computed for knot closures only")
    key = (b.strands, b.letters)
    cached = get_cached("alexander", key)
    if cached is not None:
        return cached
    n = b.strands
    if n == 1:
        return ONE
    characteristic = determinant(reduced_burau(b) - _identity(n - 1))
    numerator = characteristic * (ONE - T)
    result = normalize_alexander(numerator.exact_div(ONE - T ** n))
    if abs(result.value_at_one()) != 1:
        raise ArithmeticError(f"|Δ(1)| must be 1 for a knot, got {result}")
    store("alexander", key, result)
    logger.debug("alexander of %d-strand braid: %s", n, result)
    return result
