"""Truncated formal power series over exact rationals, and the algebraic
cross-checks built on them.

A TruncSeries keeps coefficients for z^0..z^N exactly (Fraction); arithmetic
never silently extends past the shorter operand.  A UPoly is a polynomial in
a second variable u whose coefficients are TruncSeries; it realizes the
bivariate counting arrays to a bounded u-degree.

Engineering rule of the module: every identity is verified multiplicatively.
The closed forms are rational expressions whose denominators are not units
(1 - r*u in the height variable, powers of z elsewhere), so instead of
dividing, each claimed identity is multiplied through by its denominator and
the two sides are compared coefficient by coefficient.  Division by a power
of z exists only as shift_down, which insists the discarded low-order
coefficients vanish.

The small kernel root r is produced by fixed-point iteration on the
quadratic it satisfies; a plain order-N loop of N iterations is used
(correctness over speed at desk scale).  Its companion large root is not a
power series at 0 and is deliberately never represented; the identities it
would simplify are checked in their final multiplicative forms instead.
"""

from __future__ import annotations

from fractions import Fraction

from . import counting
from .paths import Measure, PathClass


class NonUnitConstantTerm(ArithmeticError):
    pass


class NotContracting(ValueError):
    pass


class TruncSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        values = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            if len(values) > order + 1:
                values = values[: order + 1]
            else:
                values.extend([Fraction(0)] * (order + 1 - len(values)))
        elif not values:
            values = [Fraction(0)]
        self.coeffs = tuple(values)

    @classmethod
    def zero(cls, order):
        return cls([], order=order)

    @classmethod
    def one(cls, order):
        return cls([1], order=order)

    @classmethod
    def from_terms(cls, terms, order):
        """Series from a {power: coefficient} mapping."""
        coeffs = [Fraction(0)] * (order + 1)
        for power, c in terms.items():
            if 0 <= power <= order:
                coeffs[power] = Fraction(c)
        return cls(coeffs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def coefficient(self, n):
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient {n} outside kept order {self.order}")
        return self.coeffs[n]

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(self.coeffs[: order + 1])

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = min(self.order, other.order)
        return TruncSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)]
        )

    def __sub__(self, other):
        n = min(self.order, other.order)
        return TruncSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(n + 1)]
        )

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs])

    def __mul__(self, other):
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncSeries(out)

    def scale(self, factor):
        factor = Fraction(factor)
        return TruncSeries([c * factor for c in self.coeffs])

    def shift_up(self, m):
        """Multiply by z^m, keeping the order (top m coefficients drop off)."""
        if m < 0:
            raise ValueError("shift must be >= 0")
        return TruncSeries(
            [Fraction(0)] * m + list(self.coeffs), order=self.order
        )

    def shift_down(self, m):
        """Divide by z^m; the discarded coefficients must vanish.

        The result is honest about what is still known: its order is m less
        than the input's.
        """
        if m < 0:
            raise ValueError("shift must be >= 0")
        if m > self.order:
            raise ValueError("shift exceeds kept order")
        for i in range(m):
            if self.coeffs[i]:
                raise ValueError(
                    f"coefficient of z^{i} is {self.coeffs[i]}, not 0; "
                    f"cannot divide by z^{m}"
                )
        return TruncSeries(self.coeffs[m:])

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative powers are not series operations")
        result = TruncSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def valuation(self):
        """Index of the lowest nonzero coefficient; None for the zero series."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def invert_unit(self):
        """Multiplicative inverse; the constant term must be invertible."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise NonUnitConstantTerm("constant term 0 has no inverse")
        inv0 = 1 / c0
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for i in range(1, n + 1):
                acc += self.coeffs[i] * out[n - i]
            out.append(-inv0 * acc)
        return TruncSeries(out)

    def sqrt_unit(self):
        """Square root with constant term +1; requires constant term 1."""
        if self.coeffs[0] != 1:
            raise NonUnitConstantTerm(
                f"constant term {self.coeffs[0]} is not 1"
            )
        out = [Fraction(1)]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for i in range(1, n):
                acc += out[i] * out[n - i]
            out.append((self.coeffs[n] - acc) / 2)
        return TruncSeries(out)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coefficients(self):
        if not self.is_integral():
            bad = next(i for i, c in enumerate(self.coeffs) if c.denominator != 1)
            raise ValueError(f"coefficient of z^{bad} is not an integer")
        return [c.numerator for c in self.coeffs]

    def to_strings(self):
        return [str(c) for c in self.coeffs]

    def __str__(self):
        parts = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            if n == 0:
                body = str(abs(c))
            else:
                var = "z" if n == 1 else f"z^{n}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"TruncSeries({self})"


def solve_quadratic_fixedpoint(c0, c1, c2, order):
    """Unique series x with x(0) = 0 solving x = c0 + c1*x + c2*x^2.

    Requires every coefficient series to have valuation >= 1, so the map is
    a contraction; each pass then fixes at least one more coefficient, and
    `order` passes suffice.
    """
    for name, c in (("c0", c0), ("c1", c1), ("c2", c2)):
        if c.coeffs[0] != 0:
            raise NotContracting(f"{name} has nonzero constant term {c.coeffs[0]}")
    c0 = c0.truncate(min(c0.order, order))
    c1 = c1.truncate(min(c1.order, order))
    c2 = c2.truncate(min(c2.order, order))
    x = TruncSeries.zero(order)
    for _ in range(order):
        x = c0 + c1 * x + c2 * x * x
    return x


def small_root(measure, order):
    """Small root of the zigzag counting kernel for the given measure.

    Derived by rearranging the kernel quadratic into fixed-point form:
    size measure  r = z^3 + (z^2 + z^4) r + z^3 r^2,
    length measure r = z^2 (1 + r)^2.
    """
    if measure is Measure.SIZE:
        c0 = TruncSeries.from_terms({3: 1}, order)
        c1 = TruncSeries.from_terms({2: 1, 4: 1}, order)
        c2 = TruncSeries.from_terms({3: 1}, order)
    else:
        c0 = TruncSeries.from_terms({2: 1}, order)
        c1 = TruncSeries.from_terms({2: 2}, order)
        c2 = TruncSeries.from_terms({2: 1}, order)
    return solve_quadratic_fixedpoint(c0, c1, c2, order)


def column_series(table, family, k, order=None):
    """Series whose z^n coefficient is a table column entry at height k.

    family is 'up', 'down' or 'total'.
    """
    order = table.max_value if order is None else order
    if order > table.max_value:
        raise counting.OutOfRange(order, table.max_value)
    if family == "total":
        values = [table.total(n, k) for n in range(order + 1)]
    else:
        values = [table.family_at(family, n, k) for n in range(order + 1)]
    return TruncSeries(values)


def knight_size_axis(order):
    """Generating series of knight paths ending on the axis, by size."""
    table = counting.build_table(PathClass.KNIGHT, Measure.SIZE, order)
    return TruncSeries(table.axis())


def knight_size_height1(order):
    """Generating series of partial knight paths ending at height 1, by size,
    from the closed expression z^2 * axis^2 / (1 - z * axis)."""
    axis = knight_size_axis(order)
    one = TruncSeries.one(order)
    return (axis * axis).shift_up(2) * (one - axis.shift_up(1)).invert_unit()


def knight_length_axis(order):
    """Generating series of knight paths ending on the axis, by length."""
    table = counting.build_table(PathClass.KNIGHT, Measure.LENGTH, order)
    return TruncSeries(table.axis())


def zigzag_axis(measure, order):
    """Generating series of zigzag paths ending on the axis."""
    table = counting.build_table(PathClass.ZIGZAG, measure, order)
    return TruncSeries(table.axis())


def zigzag_total(measure, order):
    """Generating series of all partial zigzag paths (any ending height)."""
    table = counting.build_table(PathClass.ZIGZAG, measure, order)
    return TruncSeries([table.sum_over_heights(n) for n in range(order + 1)])


def check_algebraic(relation, x):
    """Residual of sum(coeff * x^power) for a list of (coeff, power) pairs."""
    order = min([x.order] + [c.order for c, _ in relation])
    total = TruncSeries.zero(order)
    for coeff, power in relation:
        total = total + coeff * x ** power
    return total


def knight_size_axis_relation(order):
    """Quartic annihilating the knight-by-size axis series."""
    f = TruncSeries.from_terms
    return [
        (f({4: 1}, order), 4),
        (f({3: -2, 2: -1}, order), 3),
        (f({4: 1, 2: 2, 1: 2}, order), 2),
        (f({1: -2, 0: -1}, order), 1),
        (TruncSeries.one(order), 0),
    ]


def knight_length_axis_relation(order):
    """Quartic annihilating the knight-by-length axis series."""
    f = TruncSeries.from_terms
    return [
        (f({4: 1}, order), 4),
        (f({3: -2, 2: -1}, order), 3),
        (f({2: 3, 1: 2}, order), 2),
        (f({1: -2, 0: -1}, order), 1),
        (TruncSeries.one(order), 0),
    ]


class UPoly:
    """Polynomial in u with TruncSeries coefficients, all at one z-order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("UPoly needs at least the u^0 coefficient")
        order = coeffs[0].order
        if any(c.order != order for c in coeffs):
            raise ValueError("all u-coefficients must share one z-order")
        self.coeffs = coeffs

    @property
    def u_degree(self):
        return len(self.coeffs) - 1

    @property
    def order(self):
        return self.coeffs[0].order

    def coefficient(self, j):
        if j < 0:
            raise IndexError("negative u-power")
        if j <= self.u_degree:
            return self.coeffs[j]
        return TruncSeries.zero(self.order)

    def __add__(self, other):
        top = max(self.u_degree, other.u_degree)
        return UPoly(
            [self.coefficient(j) + other.coefficient(j) for j in range(top + 1)]
        )

    def __mul__(self, other):
        out = [
            TruncSeries.zero(min(self.order, other.order))
            for _ in range(self.u_degree + other.u_degree + 1)
        ]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UPoly(out)

    def map_coeffs(self, fn):
        return UPoly([fn(c) for c in self.coeffs])

    def truncate_u(self, degree):
        """Drop u-powers above `degree` (they are incomplete after products)."""
        return UPoly(self.coeffs[: degree + 1])


def bivariate_total(table, u_degree, order):
    """The counting array as a UPoly: u^k coefficient is the height-k column."""
    return UPoly(
        [column_series(table, "total", k, order) for k in range(u_degree + 1)]
    )


def first_upoly_mismatch(lhs, rhs, u_degree):
    """First (u-power, z-power) where two UPolys disagree, or None.

    Only u-powers <= u_degree are meaningful: higher ones are incomplete
    products of a truncated array.
    """
    for j in range(u_degree + 1):
        a = lhs.coefficient(j)
        b = rhs.coefficient(j)
        n_max = min(a.order, b.order)
        for n in range(n_max + 1):
            if a.coeffs[n] != b.coeffs[n]:
                return (j, n)
    return None


def check_bivariate_identity(path_class, measure, u_degree, order):
    """Verify the closed form of the bivariate counting array, multiplied
    through by its denominator.

    zigzag/size:    z^3 (1 - r u) (F+G) = r u^2 z + r u z^2 + r
    zigzag/length:  z   (1 - r u) (F+G) = r^2 z + r u^2 + r u + 2 r z + z
    knight/size:    (u^4 z + u^3 z^2 + u z^2 - u^2 + z)(F+G)
                        = z (u z + 1) A + u z A1 - u^2
    with A, A1 the knight axis and height-1 series.  Returns (ok, mismatch)
    where mismatch is the first offending (u-power, z-power) or None.
    """
    table = counting.build_table(path_class, measure, order)
    fg = bivariate_total(table, u_degree, order)
    one = TruncSeries.one(order)

    if path_class is PathClass.ZIGZAG:
        r = small_root(measure, order)
        kernel = UPoly([one, -r])
        if measure is Measure.SIZE:
            lhs = (kernel * fg).map_coeffs(lambda s: s.shift_up(3))
            rhs = UPoly([r, r.shift_up(2), r.shift_up(1)])
        else:
            lhs = (kernel * fg).map_coeffs(lambda s: s.shift_up(1))
            rhs = UPoly([(r * r + r.scale(2)).shift_up(1) + one.shift_up(1), r, r])
    elif measure is Measure.SIZE:
        axis = knight_size_axis(order)
        height1 = knight_size_height1(order)
        z = TruncSeries.from_terms({1: 1}, order)
        z2 = TruncSeries.from_terms({2: 1}, order)
        kernel = UPoly([z, z2, -one, z2, z])
        lhs = kernel * fg
        rhs = UPoly(
            [axis.shift_up(1), axis.shift_up(2) + height1.shift_up(1), -one]
        )
    else:
        raise ValueError("no bivariate closed form for knight paths by length")

    mismatch = first_upoly_mismatch(lhs, rhs, u_degree)
    return (mismatch is None, mismatch)


def knight_length_positive_series(k, order):
    """Series counting strictly-positive knight walks by length ending at
    height k (see counting.knight_length_positive)."""
    rows = counting.knight_length_positive(order)
    return TruncSeries([row[k] if k < len(row) else 0 for row in rows])


def check_basketball_heights(order):
    """Verify the radical closed forms for knight-by-length ending heights 1
    and 2 by squaring (no radical extraction of non-units):

        z (2 G1 + 1)^2       = 2 - 3 z - 2 T
        (3 - T - 4 z G2)^2   = 2 + 12 z + 2 T

    with T = sqrt(1 - 4z) and G1, G2 the ending-height series of the
    strictly-positive walk counts.  (Partial-path columns, which may revisit
    the axis, do not satisfy these forms.)  Returns (ok, detail) with the
    first mismatch.
    """
    g1 = knight_length_positive_series(1, order)
    g2 = knight_length_positive_series(2, order)
    one = TruncSeries.one(order)
    radical = TruncSeries.from_terms({0: 1, 1: -4}, order).sqrt_unit()

    lhs1 = ((g1.scale(2) + one) ** 2).shift_up(1)
    rhs1 = TruncSeries.from_terms({0: 2, 1: -3}, order) - radical.scale(2)
    if lhs1 != rhs1:
        n = next(i for i in range(order + 1) if lhs1.coeffs[i] != rhs1.coeffs[i])
        return (False, f"height-1 identity fails at z^{n}")

    lhs2 = (
        TruncSeries.from_terms({0: 3}, order) - radical - g2.scale(4).shift_up(1)
    ) ** 2
    rhs2 = TruncSeries.from_terms({0: 2, 1: 12}, order) + radical.scale(2)
    if lhs2 != rhs2:
        n = next(i for i in range(order + 1) if lhs2.coeffs[i] != rhs2.coeffs[i])
        return (False, f"height-2 identity fails at z^{n}")
    return (True, None)
