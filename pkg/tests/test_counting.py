"""Counting tables against published rows, lists and their recurrences."""

import pytest

from knightpaths.counting import (
    OutOfRange,
    axis_sequence,
    build_table,
    count_partial,
    count_total_over_heights,
    knight_length_positive,
)
from knightpaths.paths import Measure, PathClass

# Bivariate expansions, one row per measure value, entries indexed by height.
KNIGHT_SIZE_ROWS = [
    [1],
    [0, 0, 1],
    [1, 1, 0, 0, 1],
    [0, 1, 2, 2, 0, 0, 1],
    [3, 3, 1, 2, 3, 3, 0, 0, 1],
    [2, 4, 9, 8, 3, 3, 4, 4, 0, 0, 1],
]
ZIGZAG_SIZE_ROWS = [
    [1],
    [0, 0, 1],
    [1, 1, 0, 0, 0],
    [0, 1, 1, 0, 0, 0, 0],
    [2, 1, 0, 1, 0, 0, 0, 0, 0],
    [0, 2, 3, 0, 0, 0, 0, 0, 0, 0, 0],
    [4, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 5, 6, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
]
ZIGZAG_LENGTH_ROWS = [
    [1],
    [0, 1, 1],
    [2, 1, 0, 0, 0],
    [0, 2, 3, 1, 0, 0, 0],
    [5, 4, 1, 0, 0, 0, 0, 0, 0],
    [0, 5, 9, 5, 1, 0, 0, 0, 0, 0, 0],
    [14, 14, 6, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
]

# Height-k coefficient lists, indexed from z^0.
KNIGHT_SIZE_K1 = [0, 0, 1, 1, 3, 4, 12, 22, 61, 128]
KNIGHT_SIZE_K2 = [0, 1, 0, 2, 1, 9, 10, 42, 64, 213]
ZIGZAG_SIZE_K1 = [0, 0, 1, 1, 1, 2, 2, 5, 4, 12, 8, 28, 17]
ZIGZAG_SIZE_K2 = [0, 1, 0, 1, 0, 3, 1, 6, 3, 13, 9, 29, 25, 65]
ZIGZAG_SIZE_K3 = [0, 0, 0, 0, 1, 0, 2, 0, 6, 1, 15, 4, 37, 14, 91, 44]
ZIGZAG_LENGTH_K1 = [0, 1, 1, 2, 4, 5, 14, 14, 48, 42, 165]
ZIGZAG_LENGTH_K2 = [0, 1, 0, 3, 1, 9, 6, 28, 27, 90, 110]
ZIGZAG_LENGTH_K3 = [0, 0, 0, 1, 0, 5, 1, 20, 8, 75, 44, 275, 208]


@pytest.mark.parametrize(
    "path_class, measure, rows",
    [
        (PathClass.KNIGHT, Measure.SIZE, KNIGHT_SIZE_ROWS),
        (PathClass.ZIGZAG, Measure.SIZE, ZIGZAG_SIZE_ROWS),
        (PathClass.ZIGZAG, Measure.LENGTH, ZIGZAG_LENGTH_ROWS),
    ],
)
def test_bivariate_rows(path_class, measure, rows):
    table = build_table(path_class, measure, len(rows) - 1)
    for n, row in enumerate(rows):
        got = table.totals_row(n)
        padded = row + [0] * (len(got) - len(row))
        assert got == padded[: len(got)], f"row {n}"


@pytest.mark.parametrize(
    "path_class, measure, k, expected",
    [
        (PathClass.KNIGHT, Measure.SIZE, 1, KNIGHT_SIZE_K1),
        (PathClass.KNIGHT, Measure.SIZE, 2, KNIGHT_SIZE_K2),
        (PathClass.ZIGZAG, Measure.SIZE, 1, ZIGZAG_SIZE_K1),
        (PathClass.ZIGZAG, Measure.SIZE, 2, ZIGZAG_SIZE_K2),
        (PathClass.ZIGZAG, Measure.SIZE, 3, ZIGZAG_SIZE_K3),
        (PathClass.ZIGZAG, Measure.LENGTH, 1, ZIGZAG_LENGTH_K1),
        (PathClass.ZIGZAG, Measure.LENGTH, 2, ZIGZAG_LENGTH_K2),
        (PathClass.ZIGZAG, Measure.LENGTH, 3, ZIGZAG_LENGTH_K3),
    ],
)
def test_height_columns(path_class, measure, k, expected):
    table = build_table(path_class, measure, len(expected) - 1)
    assert [table.total(n, k) for n in range(len(expected))] == expected


def test_axis_sequences():
    assert axis_sequence(PathClass.KNIGHT, Measure.SIZE, 11) == [
        1, 0, 1, 0, 3, 2, 12, 14, 54, 86, 274, 528,
    ]
    zigzag_size = axis_sequence(PathClass.ZIGZAG, Measure.SIZE, 20)
    assert zigzag_size[::2] == [1, 1, 2, 4, 8, 17, 37, 82, 185, 423, 978]
    assert all(v == 0 for v in zigzag_size[1::2])
    zigzag_length = axis_sequence(PathClass.ZIGZAG, Measure.LENGTH, 20)
    assert zigzag_length[::2] == [
        1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786,
    ]
    assert axis_sequence(PathClass.KNIGHT, Measure.LENGTH, 10) == [
        1, 0, 2, 2, 11, 24, 93, 272, 971, 3194, 11293,
    ]


def test_totals_over_heights():
    table = build_table(PathClass.KNIGHT, Measure.SIZE, 10)
    assert [table.sum_over_heights(n) for n in range(11)] == [
        1, 1, 3, 6, 16, 38, 99, 248, 646, 1659, 4342,
    ]
    assert count_total_over_heights(PathClass.KNIGHT, Measure.SIZE, 7) == 248
    assert count_total_over_heights(PathClass.ZIGZAG, Measure.SIZE, 10) == 50
    assert count_total_over_heights(PathClass.ZIGZAG, Measure.LENGTH, 9) == 252
    zz_size = build_table(PathClass.ZIGZAG, Measure.SIZE, 10)
    assert [zz_size.sum_over_heights(n) for n in range(11)] == [
        1, 1, 2, 2, 4, 5, 9, 12, 21, 29, 50,
    ]
    zz_len = build_table(PathClass.ZIGZAG, Measure.LENGTH, 10)
    assert [zz_len.sum_over_heights(n) for n in range(11)] == [
        1, 2, 3, 6, 10, 20, 35, 70, 126, 252, 462,
    ]


def test_count_partial_examples():
    assert count_partial(PathClass.KNIGHT, Measure.SIZE, 6, 0) == 12
    assert count_partial(PathClass.ZIGZAG, Measure.LENGTH, 8, 0) == 42
    assert count_partial(PathClass.ZIGZAG, Measure.SIZE, 12, 1) == 17
    assert count_partial(PathClass.KNIGHT, Measure.SIZE, 4, 0) == 3
    assert count_partial(PathClass.KNIGHT, Measure.SIZE, 5, 2) == 9
    assert count_partial(PathClass.ZIGZAG, Measure.LENGTH, 5, 3) == 5
    assert count_partial(PathClass.ZIGZAG, Measure.LENGTH, 5, 4) == 1


def test_empty_word_lives_in_up_family():
    for path_class in PathClass:
        for measure in Measure:
            table = build_table(path_class, measure, 4)
            assert table.up_at(0, 0) == 1
            assert table.down_at(0, 0) == 0


def test_entries_nonnegative_and_zero_above_twice_n():
    table = build_table(PathClass.KNIGHT, Measure.SIZE, 8)
    for n in range(9):
        row = table.totals_row(n)
        assert all(v >= 0 for v in row)
        assert table.total(n, 2 * n) in (0, 1)  # only the all-N word reaches 2n
        assert table.total(n, 2 * n + 1) == 0


def test_out_of_range():
    table = build_table(PathClass.KNIGHT, Measure.SIZE, 5)
    with pytest.raises(OutOfRange):
        table.total(6, 0)
    with pytest.raises(OutOfRange):
        table.total(-1, 0)


def test_knight_size_recurrences():
    # up(n,1) = total(n-2, 0); up(n,k) = total(n-2,k-1) + total(n-1,k-2), k>=2
    # down(n,k) = total(n-2,k+1) + total(n-1,k+2)
    n_max = 20
    table = build_table(PathClass.KNIGHT, Measure.SIZE, n_max)

    def total(n, k):
        return table.total(n, k) if 0 <= n <= n_max else 0

    for n in range(2, n_max + 1):
        assert table.up_at(n, 1) == total(n - 2, 0)
        for k in range(2, 2 * n + 1):
            assert table.up_at(n, k) == total(n - 2, k - 1) + total(n - 1, k - 2)
        for k in range(0, 2 * n + 1):
            assert table.down_at(n, k) == total(n - 2, k + 1) + total(n - 1, k + 2)


def test_zigzag_size_recurrences():
    # f1 = z^2(f0+g0); f2 = z(f0+g0) + z^2 g1;
    # f_k = z^2 g_{k-1} + z g_{k-2} (k>=3); g_k = z^2 f_{k+1} + z f_{k+2}
    n_max = 20
    table = build_table(PathClass.ZIGZAG, Measure.SIZE, n_max)

    def total(n, k):
        return table.total(n, k) if 0 <= n <= n_max else 0

    def up(n, k):
        return table.up_at(n, k) if 0 <= n <= n_max else 0

    def down(n, k):
        return table.down_at(n, k) if 0 <= n <= n_max else 0

    for n in range(2, n_max + 1):
        assert up(n, 1) == total(n - 2, 0)
        assert up(n, 2) == total(n - 1, 0) + down(n - 2, 1)
        for k in range(3, 2 * n + 1):
            assert up(n, k) == down(n - 2, k - 1) + down(n - 1, k - 2)
        for k in range(0, 2 * n + 1):
            assert down(n, k) == up(n - 2, k + 1) + up(n - 1, k + 2)


def test_zigzag_length_recurrences():
    # f1 = z(f0+g0); f2 = z(f0+g0+g1);
    # f_k = z g_{k-1} + z g_{k-2} (k>=3); g_k = z f_{k+1} + z f_{k+2}
    n_max = 20
    table = build_table(PathClass.ZIGZAG, Measure.LENGTH, n_max)

    def total(n, k):
        return table.total(n, k) if 0 <= n <= n_max else 0

    def up(n, k):
        return table.up_at(n, k) if 0 <= n <= n_max else 0

    def down(n, k):
        return table.down_at(n, k) if 0 <= n <= n_max else 0

    for n in range(1, n_max + 1):
        assert up(n, 1) == total(n - 1, 0)
        assert up(n, 2) == total(n - 1, 0) + down(n - 1, 1)
        for k in range(3, 2 * n + 1):
            assert up(n, k) == down(n - 1, k - 1) + down(n - 1, k - 2)
        for k in range(0, 2 * n + 1):
            assert down(n, k) == up(n - 1, k + 1) + up(n - 1, k + 2)


def test_positive_walk_rows():
    rows = knight_length_positive(7)
    assert rows[0][0] == 1
    assert sum(rows[0]) == 1
    assert [rows[n][1] for n in range(1, 8)] == [1, 1, 3, 7, 22, 65, 213]
    assert [rows[n][2] for n in range(1, 8)] == [1, 1, 4, 9, 31, 91, 309]
    # Strictly positive walks never sit on the axis after the start.
    assert all(rows[n][0] == 0 for n in range(1, 8))
