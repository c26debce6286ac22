"""Exact integer primitives shared by every other module.

Nothing in this package touches floating point. Integers are Python ints
(arbitrary precision) and exact quotients are ``fractions.Fraction``, which
already keeps itself in lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
import sys
from fractions import Fraction

Ratio = Fraction

# Quadratic-residue tables for the square prefilter. A non-residue modulo any
# of these proves n is not a square; passing all of them proves nothing.
_PREFILTER_MODULI = (64, 63, 65, 11)
_RESIDUES = {m: frozenset(i * i % m for i in range(m)) for m in _PREFILTER_MODULI}
_PREFILTER_PRODUCT = math.prod(_PREFILTER_MODULI)


def binomial(n: int, k: int) -> int:
    """C(n, k) for nonnegative n, k; zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs nonnegative arguments, got ({n}, {k})")
    return math.comb(n, k)


def poly_binomial(x: int, k: int) -> int:
    """Binomial coefficient as a polynomial in the upper argument.

    Agrees with :func:`binomial` for ``x >= 0`` and extends it to negative
    ``x`` via x(x-1)...(x-k+1)/k!, which is what a polynomial identity in
    ``x`` needs.
    """
    if k < 0:
        return 0
    if x >= 0:
        return math.comb(x, k)
    # C(x, k) = (-1)^k C(k - x - 1, k) for negative x
    value = math.comb(k - x - 1, k)
    return -value if k % 2 else value


def isqrt(n: int) -> int:
    """Floor square root by Newton iteration.

    The starting point comes from the square root of the top half of ``n``,
    so only one or two Newton steps are needed per level even for operands
    with tens of thousands of digits.
    """
    if n < 0:
        raise ValueError("isqrt of a negative number")
    if n < 4:
        return 0 if n == 0 else 1
    bits = n.bit_length()
    if bits <= 64:
        x = 1 << ((bits + 1) // 2)
    else:
        k = bits // 4
        x = (isqrt(n >> (2 * k)) + 1) << k
    # x >= floor(sqrt(n)) here, so the iteration decreases monotonically
    while True:
        y = (x + n // x) >> 1
        if y >= x:
            break
        x = y
    if not (x * x <= n < (x + 1) * (x + 1)):
        raise ArithmeticError(f"isqrt post-condition failed for a {bits}-bit input")
    return x


def _prefilter_reject(n: int) -> tuple[int, int] | None:
    r = n % _PREFILTER_PRODUCT
    for m in _PREFILTER_MODULI:
        if r % m not in _RESIDUES[m]:
            return m, r % m
    return None


def is_perfect_square(n: int, prefilter: bool = True) -> bool:
    if n < 0:
        return False
    if prefilter and _prefilter_reject(n) is not None:
        return False
    r = isqrt(n)
    return r * r == n


def square_witness(n: int) -> dict:
    """Certificate for the square/non-square status of ``n``.

    Either a modulus where ``n`` is a quadratic non-residue, or the floor
    square root ``r`` (square iff r*r == n). Both can be checked by hand.
    """
    hit = _prefilter_reject(n) if n >= 0 else None
    if hit is not None:
        m, res = hit
        return {"square": False, "modulus": m, "residue": res}
    r = isqrt(n)
    return {"square": r * r == n, "root": r}


def divides(d: int, n: int) -> bool:
    if d == 0:
        raise ZeroDivisionError("divides() with d = 0")
    return n % d == 0


def is_integral(r: Fraction) -> bool:
    return r.denominator == 1


def _allow_long_decimals() -> None:
    # CPython >= 3.10.7 caps int<->str conversion at 4300 digits by default.
    if hasattr(sys, "get_int_max_str_digits") and sys.get_int_max_str_digits() != 0:
        sys.set_int_max_str_digits(0)


def to_decimal(n: int) -> str:
    _allow_long_decimals()
    return str(n)


def from_decimal(s: str) -> int:
    _allow_long_decimals()
    return int(s)


def ratio_to_str(r: Fraction) -> str:
    if r.denominator == 1:
        return to_decimal(r.numerator)
    return f"{to_decimal(r.numerator)}/{to_decimal(r.denominator)}"
