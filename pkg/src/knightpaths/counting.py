"""Exact counting tables for partial paths.

A table holds, for every measure value n up to a bound and every ending
height k, the number of partial paths of the chosen class whose final step
rises (the ``up`` family) or falls (``down``).  The empty word is counted
once, in the up family at (0, 0); the down family therefore counts the
non-empty paths ending on the axis.

The table is filled by a forward sweep: each step pushes a state
(n, k, direction) to (n + w, k + dy, new direction), where w is the step's
x-increment for the SIZE measure and 1 for LENGTH.  The ZIGZAG class admits
a step only when its direction differs from the previous one (the empty
word accepts any first step).  Heights never exceed twice the measure
value, which bounds the height dimension.

All entries are exact Python ints; knight totals leave 64-bit range well
before n = 60.
"""

from __future__ import annotations

from dataclasses import dataclass

from .paths import Measure, PathClass, STEPS


class OutOfRange(LookupError):
    def __init__(self, n, max_value):
        super().__init__(f"value {n} outside built table (max {max_value})")
        self.n = n
        self.max_value = max_value


#: One (dx, dy, rises) transition per step, read at call time so a test can
#: perturb a single entry and watch the verification suites catch it.
TRANSITIONS = tuple((step.dx, step.dy, step.up) for step in STEPS)


@dataclass
class CountTable:
    path_class: PathClass
    measure: Measure
    max_value: int
    up: list
    down: list

    def _check(self, n):
        if n < 0 or n > self.max_value:
            raise OutOfRange(n, self.max_value)

    def up_at(self, n, k):
        self._check(n)
        row = self.up[n]
        return row[k] if 0 <= k < len(row) else 0

    def down_at(self, n, k):
        self._check(n)
        row = self.down[n]
        return row[k] if 0 <= k < len(row) else 0

    def family_at(self, family, n, k):
        if family == "up":
            return self.up_at(n, k)
        if family == "down":
            return self.down_at(n, k)
        raise ValueError(f"unknown family {family!r}")

    def total(self, n, k):
        return self.up_at(n, k) + self.down_at(n, k)

    def totals_row(self, n):
        """Counts for heights 0..2n at measure value n."""
        self._check(n)
        return [self.up[n][k] + self.down[n][k] for k in range(2 * n + 1)]

    def sum_over_heights(self, n):
        return sum(self.totals_row(n))

    def axis(self):
        """total(n, 0) for n = 0..max_value."""
        return [self.up[n][0] + self.down[n][0] for n in range(self.max_value + 1)]


def build_table(path_class, measure, max_value):
    if max_value < 0:
        raise ValueError("max_value must be >= 0")
    zigzag = path_class is PathClass.ZIGZAG
    size = measure is Measure.SIZE
    width = 2 * max_value + 1
    up = [[0] * width for _ in range(max_value + 1)]
    down = [[0] * width for _ in range(max_value + 1)]

    def push(n, k, count, from_up):
        for dx, dy, rises in TRANSITIONS:
            if zigzag and rises == from_up:
                continue
            n2 = n + (dx if size else 1)
            if n2 > max_value:
                continue
            k2 = k + dy
            if k2 < 0 or k2 >= width:
                continue
            (up if rises else down)[n2][k2] += count

    # The empty word: no direction, so both step directions are admissible.
    push(0, 0, 1, None)
    for n in range(max_value + 1):
        for k in range(2 * n + 1):
            if up[n][k]:
                push(n, k, up[n][k], True)
            if down[n][k]:
                push(n, k, down[n][k], False)
    up[0][0] += 1  # fold the empty word into the up family
    return CountTable(path_class, measure, max_value, up, down)


def count_partial(path_class, measure, n, k):
    """Number of partial paths with the given measure value and height."""
    return build_table(path_class, measure, n).total(n, k)


def count_total_over_heights(path_class, measure, n):
    """Number of partial paths with the given measure value, any height."""
    return build_table(path_class, measure, n).sum_over_heights(n)


def axis_sequence(path_class, measure, n_max):
    """Counts of paths ending on the x-axis for n = 0..n_max."""
    return build_table(path_class, measure, n_max).axis()


def knight_length_positive(n_max):
    """Knight walks counted by length that stay strictly above the axis
    after the start, as rows indexed [length][height].

    These are not partial paths (which may revisit the axis); they are the
    walks whose ending-height generating functions have the radical closed
    forms at heights 1 and 2.  Row 0 holds the empty walk at height 0; rows
    n >= 1 hold heights >= 1 only.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    width = 2 * n_max + 1
    rows = [[0] * width for _ in range(n_max + 1)]
    rows[0][0] = 1
    for n in range(n_max):
        start = 0 if n == 0 else 1
        for k in range(start, 2 * n + 1):
            count = rows[n][k]
            if not count:
                continue
            for _, dy, _ in TRANSITIONS:
                k2 = k + dy
                if k2 >= 1 and k2 < width:
                    rows[n + 1][k2] += count
    return rows
