"""Closed-form coefficient evaluators for the zigzag counting families and
the knight-by-length axis counts.

All values are exact: rational prefactors are accumulated with Fraction and
asserted integral before returning.  Parity combinations outside the stated
cases are zero; the boundary conventions (binomial_sum vanishing for
n <= 0, the explicit value 1 at length 0) are pinned by cross-checks
against the counting tables, which is the arbiter throughout.
"""

from __future__ import annotations

import math
from fractions import Fraction


def binomial(n, k):
    """Binomial coefficient with the convention 0 for k < 0 or k > n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(n):
    return binomial(2 * n, n) // (n + 1)


def binomial_sum(n, k):
    """Binomial convolution sum underlying every size-measure closed form.

    Zero for n <= 0; each summand k/(n-i) * C(n-i, i+k) * C(n-i, i) is
    individually integral (asserted).
    """
    if n <= 0:
        return 0
    total = 0
    for i in range(0, (n - 1) // 2 + 1):
        term = (
            Fraction(k, n - i)
            * binomial(n - i, i + k)
            * binomial(n - i, i)
        )
        assert term.denominator == 1, (n, k, i)
        total += term.numerator
    return total


def size_coefficient(family, z_power, height):
    """Number of zigzag prefixes of the given size ending at `height` whose
    final step rises (family 'up') or falls ('down').

    The up family at heights >= 2 lives where z_power and height have
    opposite parity; the down family where they agree.  Height 0 of the up
    family is the empty word alone; height 1 reduces to binomial_sum(., 1).
    """
    m, h = z_power, height
    if m < 0 or h < 0:
        return 0
    if family == "up":
        if h == 0:
            return 1 if m == 0 else 0
        if h == 1:
            return binomial_sum(m // 2, 1) if m % 2 == 0 else 0
        if (m + h) % 2 == 0:
            return 0
        n = m // 2 if h % 2 else (m + 1) // 2
        j = h // 2
        return binomial_sum(n - j, h) + binomial_sum(n - j + 1, h - 1)
    if family == "down":
        if (m + h) % 2:
            return 0
        if h == 0:
            return binomial_sum(m // 2 + 1, 1) - (1 if m == 0 else 0)
        n = m // 2 if h % 2 == 0 else (m + 1) // 2
        j = (h + 1) // 2
        return binomial_sum(n - j + 1, h + 1)
    raise ValueError(f"unknown family {family!r}")


def length_coefficient(family, z_power, height):
    """Same split for the length measure.

    Up-family counts live on odd powers, down-family on even powers; height
    0 of the down family is a shifted Catalan sequence.
    """
    m, h = z_power, height
    if m < 0 or h < 0:
        return 0
    if family == "up":
        if h == 0:
            return 1 if m == 0 else 0
        if m % 2 == 0:
            return 0
        n = (m + 1) // 2
        value = Fraction(2 * h - 1, n + h) * binomial(2 * n, n - h + 1)
        assert value.denominator == 1, (m, h)
        return value.numerator
    if family == "down":
        if m % 2:
            return 0
        n = m // 2
        if h == 0:
            return catalan(n + 1) if n >= 1 else 0
        value = Fraction(h + 1, n + 1) * binomial(2 * n + 2, n - h)
        assert value.denominator == 1, (m, h)
        return value.numerator
    raise ValueError(f"unknown family {family!r}")


def knight_length_axis_count(n):
    """Number of knight paths of length n ending on the x-axis.

    The n = 0 value is the empty path; the summation formula below covers
    n >= 1 (its n = 0 instance would need a binomial with negative upper
    index, which the 0-outside-range convention here cannot express).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    total = Fraction(0)
    for i in range(0, n // 2 + 1):
        total += binomial(2 * n + 2, i) * binomial(n - i - 1, n - 2 * i)
    total /= n + 1
    assert total.denominator == 1, n
    return total.numerator
