"""Named verification suites.

Each suite recomputes a family of cross-identities through two independent
routes and reports the first counterexample it finds.  The CLI `verify`
command and the service /verify endpoint are thin wrappers over run_suite.

Suites:
  oracle      counting tables against a direct walk of the prefix tree,
              plus the structural path-level invariants
  closed      closed-form coefficient evaluators against the tables
  series      kernel-root residuals and every generating-function identity
  bijections  exhaustive set-image equality and round-trips for both maps
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bijections, closed_forms, counting, series
from .paths import (
    EBAR,
    Measure,
    N,
    NBAR,
    PathClass,
    PathWord,
    E,
    enumerate_partial,
    exhaustive_counts,
    decompose_zigzag,
    is_member,
    render_word,
)

SUITE_NAMES = ("oracle", "closed", "series", "bijections", "all")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _result(suite, name, failure_detail=None):
    if failure_detail is None:
        return CheckResult(suite, name, True)
    return CheckResult(suite, name, False, failure_detail)


# ── oracle suite ──────────────────────────────────────────────────────────


def _extend_to_axis(word, path_class):
    """Greedy completion of a partial path down to the x-axis."""
    steps = list(word.steps)
    height = word.final_height
    last_up = steps[-1].up if steps else None
    while height > 0:
        if path_class is PathClass.KNIGHT:
            step = NBAR if height >= 2 else EBAR
        elif last_up:
            step = NBAR if height >= 2 else EBAR
        else:
            step = E  # forced to rise first, then the pair nets -1
        steps.append(step)
        height += step.dy
        last_up = step.up
    return PathWord(tuple(steps))


def _check_tables_vs_walk(path_class, measure, max_value):
    table = counting.build_table(path_class, measure, max_value)
    walked = exhaustive_counts(path_class, measure, max_value)
    for n in range(max_value + 1):
        for k in range(2 * n + 1):
            expected = walked.get((n, k), 0)
            got = table.total(n, k)
            if got != expected:
                return (
                    f"{path_class.value}/{measure.value} n={n} k={k}: "
                    f"table {got} != walk {expected}"
                )
    return None


def _check_odd_size_axis_empty(limit):
    for m in range(limit):
        value = 2 * m + 1
        words = enumerate_partial(PathClass.ZIGZAG, Measure.SIZE, value, 0)
        if words:
            return f"zigzag axis word of odd size {value}: {render_word(words[0])}"
    return None


def _check_completability(path_class, max_size):
    for n in range(max_size + 1):
        for k in range(2 * n + 1):
            for word in enumerate_partial(path_class, Measure.SIZE, n, k):
                full = _extend_to_axis(word, path_class)
                if full.final_height != 0 or not is_member(full, path_class):
                    return (
                        f"{path_class.value} prefix {render_word(word)!r} "
                        f"did not extend to an axis path"
                    )
    return None


def _check_listing_order(max_value):
    rank = {N: 0, NBAR: 1, E: 2, EBAR: 3}
    for path_class in PathClass:
        for measure in Measure:
            for n in range(max_value + 1):
                for k in range(2 * n + 1):
                    words = enumerate_partial(path_class, measure, n, k)
                    keys = [tuple(rank[s] for s in w.steps) for w in words]
                    if keys != sorted(keys) or len(set(keys)) != len(keys):
                        return (
                            f"listing for {path_class.value}/{measure.value} "
                            f"n={n} k={k} is not strictly lexicographic"
                        )
    return None


def oracle_suite(max_value=10):
    out = []
    for path_class in PathClass:
        for measure in Measure:
            name = f"table-vs-walk {path_class.value}/{measure.value} n<={max_value}"
            out.append(
                _result("oracle", name, _check_tables_vs_walk(path_class, measure, max_value))
            )
    out.append(
        _result(
            "oracle",
            "zigzag axis words have even size",
            _check_odd_size_axis_empty(min(8, max_value // 2 + 1)),
        )
    )
    size_bound = min(max_value, 12)
    for path_class in PathClass:
        out.append(
            _result(
                "oracle",
                f"every {path_class.value} prefix of size <= {size_bound} completes to the axis",
                _check_completability(path_class, size_bound),
            )
        )
    order_bound = min(max_value, 8)
    out.append(
        _result(
            "oracle",
            f"listings are lexicographic and duplicate-free (n <= {order_bound})",
            _check_listing_order(order_bound),
        )
    )
    return out


# ── closed-forms suite ────────────────────────────────────────────────────


def _check_closed_vs_table(measure, evaluate, max_power, max_height):
    table = counting.build_table(PathClass.ZIGZAG, measure, max_power)
    for family in ("up", "down"):
        for m in range(max_power + 1):
            for k in range(max_height + 1):
                expected = table.family_at(family, m, k)
                got = evaluate(family, m, k)
                if got != expected:
                    return (
                        f"{measure.value} {family} m={m} k={k}: "
                        f"closed form {got} != table {expected}"
                    )
    return None


def _check_axis_closed_form(limit):
    axis = counting.axis_sequence(PathClass.KNIGHT, Measure.LENGTH, limit)
    for n in range(limit + 1):
        got = closed_forms.knight_length_axis_count(n)
        if got != axis[n]:
            return f"length-axis closed form at n={n}: {got} != table {axis[n]}"
    return None


def closed_suite(max_power=30, max_height=12):
    out = [
        _result(
            "closed",
            f"size coefficients match tables (m<={max_power}, k<={max_height})",
            _check_closed_vs_table(
                Measure.SIZE, closed_forms.size_coefficient, max_power, max_height
            ),
        ),
        _result(
            "closed",
            f"length coefficients match tables (m<={max_power}, k<={max_height})",
            _check_closed_vs_table(
                Measure.LENGTH, closed_forms.length_coefficient, max_power, max_height
            ),
        ),
        _result(
            "closed",
            "knight length-axis closed form matches table (n<=20)",
            _check_axis_closed_form(20),
        ),
    ]
    return out


# ── series suite ──────────────────────────────────────────────────────────


def _first_nonzero(residual):
    for n, c in enumerate(residual.coeffs):
        if c:
            return f"residual has {c} at z^{n}"
    return None


def _series_eq(lhs, rhs):
    order = min(lhs.order, rhs.order)
    for n in range(order + 1):
        if lhs.coeffs[n] != rhs.coeffs[n]:
            return f"sides differ at z^{n}: {lhs.coeffs[n]} != {rhs.coeffs[n]}"
    return None


def _check_root_residual(measure, order):
    r = series.small_root(measure, order)
    f = series.TruncSeries.from_terms
    if measure is Measure.SIZE:
        relation = [
            (f({3: 1}, order), 2),
            (f({4: 1, 2: 1, 0: -1}, order), 1),
            (f({3: 1}, order), 0),
        ]
    else:
        relation = [
            (f({2: 1}, order), 2),
            (f({2: 2, 0: -1}, order), 1),
            (f({2: 1}, order), 0),
        ]
    return _first_nonzero(series.check_algebraic(relation, r))


def _check_quartic(relation_builder, axis_builder, order):
    residual = series.check_algebraic(relation_builder(order), axis_builder(order))
    return _first_nonzero(residual)


def _check_bivariate(path_class, measure, u_degree, order):
    ok, mismatch = series.check_bivariate_identity(path_class, measure, u_degree, order)
    if ok:
        return None
    j, n = mismatch
    return f"bivariate identity fails at u^{j} z^{n}"


def _check_columns_size(order, max_height):
    table = counting.build_table(PathClass.ZIGZAG, Measure.SIZE, order)
    r = series.small_root(Measure.SIZE, order)
    one = series.TruncSeries.one(order)

    axis = series.TruncSeries(table.axis())
    detail = _series_eq(axis, r.shift_down(3))
    if detail:
        return f"axis vs root shift: {detail}"

    down0 = series.column_series(table, "down", 0)
    detail = _series_eq((down0 + one).shift_up(3), r)
    if detail:
        return f"down column 0: {detail}"
    for k in range(1, max_height + 1):
        up_k = series.column_series(table, "up", k)
        rhs = (r.shift_up(1) + one) * r ** (k - 1)
        if k == 1:
            rhs = rhs - one
        detail = _series_eq(up_k.shift_up(2), rhs)
        if detail:
            return f"up column {k}: {detail}"
        down_k = series.column_series(table, "down", k)
        detail = _series_eq(down_k.shift_up(3), r ** (k + 1))
        if detail:
            return f"down column {k}: {detail}"
    return None


def _check_columns_length(order, max_height):
    table = counting.build_table(PathClass.ZIGZAG, Measure.LENGTH, order)
    r = series.small_root(Measure.LENGTH, order)
    one = series.TruncSeries.one(order)

    down0 = series.column_series(table, "down", 0)
    detail = _series_eq(down0, r * (r + one.scale(2)))
    if detail:
        return f"down column 0: {detail}"
    for k in range(1, max_height + 1):
        up_k = series.column_series(table, "up", k)
        rhs = (one + r) * r ** (k - 1)
        if k == 1:
            rhs = rhs - one
        detail = _series_eq(up_k.shift_up(1), rhs)
        if detail:
            return f"up column {k}: {detail}"
        down_k = series.column_series(table, "down", k)
        detail = _series_eq(down_k.shift_up(2), r ** (k + 1))
        if detail:
            return f"down column {k}: {detail}"
    return None


def _check_height1_expression(order):
    table = counting.build_table(PathClass.KNIGHT, Measure.SIZE, order)
    column = series.column_series(table, "total", 1)
    return _series_eq(column, series.knight_size_height1(order))


def _check_totals_size_zigzag(order):
    # totals * z^3 (1 - r) = r z^2 + r z + r
    totals = series.zigzag_total(Measure.SIZE, order)
    r = series.small_root(Measure.SIZE, order)
    one = series.TruncSeries.one(order)
    lhs = (totals * (one - r)).shift_up(3)
    rhs = r.shift_up(2) + r.shift_up(1) + r
    return _series_eq(lhs, rhs)


def _check_totals_length_zigzag(order):
    # totals * z^2 (1 - r) = 2 r z + r
    totals = series.zigzag_total(Measure.LENGTH, order)
    r = series.small_root(Measure.LENGTH, order)
    one = series.TruncSeries.one(order)
    lhs = (totals * (one - r)).shift_up(2)
    rhs = r.shift_up(1).scale(2) + r
    return _series_eq(lhs, rhs)


def _check_totals_knight_size(order):
    # totals * (2z^2 + 2z - 1) = (z^2 + z) A + z A1 - 1
    table = counting.build_table(PathClass.KNIGHT, Measure.SIZE, order)
    totals = series.TruncSeries([table.sum_over_heights(n) for n in range(order + 1)])
    axis = series.knight_size_axis(order)
    height1 = series.knight_size_height1(order)
    one = series.TruncSeries.one(order)
    lhs = totals * series.TruncSeries.from_terms({2: 2, 1: 2, 0: -1}, order)
    rhs = axis.shift_up(2) + axis.shift_up(1) + height1.shift_up(1) - one
    return _series_eq(lhs, rhs)


def series_suite():
    out = []
    for name, detail in (
        ("size kernel root solves its quadratic (order 40)",
         _check_root_residual(Measure.SIZE, 40)),
        ("length kernel root solves its quadratic (order 40)",
         _check_root_residual(Measure.LENGTH, 40)),
        ("knight size axis series solves its quartic (order 30)",
         _check_quartic(series.knight_size_axis_relation, series.knight_size_axis, 30)),
        ("knight length axis series solves its quartic (order 30)",
         _check_quartic(series.knight_length_axis_relation, series.knight_length_axis, 30)),
        ("zigzag size bivariate identity (K=12, N=24)",
         _check_bivariate(PathClass.ZIGZAG, Measure.SIZE, 12, 24)),
        ("zigzag length bivariate identity (K=12, N=24)",
         _check_bivariate(PathClass.ZIGZAG, Measure.LENGTH, 12, 24)),
        ("knight size bivariate identity (K=10, N=20)",
         _check_bivariate(PathClass.KNIGHT, Measure.SIZE, 10, 20)),
        ("knight length height-1/2 squared-radical identities (order 40)",
         series.check_basketball_heights(40)[1]),
        ("zigzag size columns match kernel-root powers (order 30, k<=10)",
         _check_columns_size(30, 10)),
        ("zigzag length columns match kernel-root powers (order 30, k<=10)",
         _check_columns_length(30, 10)),
        ("knight height-1 series matches its closed expression (order 30)",
         _check_height1_expression(30)),
        ("zigzag size totals closed form (order 30)",
         _check_totals_size_zigzag(30)),
        ("zigzag length totals closed form (order 30)",
         _check_totals_length_zigzag(30)),
        ("knight size totals closed form (order 30)",
         _check_totals_knight_size(30)),
    ):
        out.append(_result("series", name, detail))
    return out


# ── bijections suite ──────────────────────────────────────────────────────

_WORKED_WORD = "EeNnNeNnEn"
_WORKED_SIZE_IMAGE = "UFUFFDFD"
_WORKED_LENGTH_IMAGE = "UUDUUDUDDUDD"


def _check_worked_examples():
    from .paths import parse_word

    word = parse_word(_WORKED_WORD)
    cases = [
        (bijections.psi(word), _WORKED_SIZE_IMAGE),
        (bijections.phi(word), _WORKED_LENGTH_IMAGE),
        (bijections.psi(parse_word("Nn")), "FF"),
        (bijections.psi(parse_word("Ee")), "UFD"),
        (bijections.psi(parse_word("NnNn")), "FFF"),
        (bijections.phi(parse_word("Nn")), "UDUD"),
        (bijections.phi(parse_word("Ee")), "UUDD"),
        (bijections.phi(parse_word("NnNn")), "UDUDUD"),
    ]
    for got, expected in cases:
        if got != expected:
            return f"expected image {expected}, got {got}"
    return None


def _check_size_bijection(max_half):
    for n in range(max_half + 1):
        words = enumerate_partial(PathClass.ZIGZAG, Measure.SIZE, 2 * n, 0)
        codomain = set(bijections.peakless_motzkin_words(n + 1))
        images = set()
        for word in words:
            image = bijections.psi(word)
            if len(image) != n + 1:
                return f"size map image of {render_word(word)!r} has wrong length"
            if image in images:
                return f"size map is not injective at size {2 * n}"
            images.add(image)
            if bijections.psi_inv(image) != word:
                return f"size map round-trip fails on {render_word(word)!r}"
        if images != codomain:
            missing = sorted(codomain - images)[:1]
            return f"size map is not onto at size {2 * n}: missing {missing}"
        for image in codomain:
            if bijections.psi(bijections.psi_inv(image)) != image:
                return f"inverse round-trip fails on {image}"
    return None


def _check_length_bijection(max_half):
    for n in range(max_half + 1):
        words = enumerate_partial(PathClass.ZIGZAG, Measure.LENGTH, 2 * n, 0)
        codomain = set(bijections.dyck_words(2 * (n + 1)))
        images = set()
        for word in words:
            image = bijections.phi(word)
            if len(image) != 2 * n + 2:
                return f"length map image of {render_word(word)!r} has wrong length"
            if image in images:
                return f"length map is not injective at length {2 * n}"
            images.add(image)
            if bijections.phi_inv(image) != word:
                return f"length map round-trip fails on {render_word(word)!r}"
        if images != codomain:
            missing = sorted(codomain - images)[:1]
            return f"length map is not onto at length {2 * n}: missing {missing}"
        for image in codomain:
            if bijections.phi(bijections.phi_inv(image)) != image:
                return f"inverse round-trip fails on {image}"
    return None


def _check_decomposition_roundtrip(max_size):
    for n in range(0, max_size + 1, 2):
        for word in enumerate_partial(PathClass.ZIGZAG, Measure.SIZE, n, 0):
            if decompose_zigzag(word).reassemble() != word:
                return f"decomposition of {render_word(word)!r} does not reassemble"
    return None


def bijections_suite(max_size_half=8, max_length_half=7):
    return [
        _result("bijections", "published example images reproduce letter-for-letter",
                _check_worked_examples()),
        _result("bijections",
                f"size map is a bijection onto peakless Motzkin words (n<={max_size_half})",
                _check_size_bijection(max_size_half)),
        _result("bijections",
                f"length map is a bijection onto Dyck words (n<={max_length_half})",
                _check_length_bijection(max_length_half)),
        _result("bijections",
                f"grammar decomposition round-trips (size<={2 * max_size_half})",
                _check_decomposition_roundtrip(2 * max_size_half)),
    ]


# ── dispatch ──────────────────────────────────────────────────────────────


def run_suite(name, max_value=None):
    """Run one named suite (or 'all'); max_value overrides exhaustive depths."""
    if name == "oracle":
        return oracle_suite(10 if max_value is None else max_value)
    if name == "closed":
        max_power = 30 if max_value is None else max_value
        return closed_suite(max_power, min(12, max_power))
    if name == "series":
        return series_suite()
    if name == "bijections":
        if max_value is None:
            return bijections_suite()
        return bijections_suite(max_value, max_value)
    if name == "all":
        results = []
        for suite in ("oracle", "closed", "series", "bijections"):
            results.extend(run_suite(suite, max_value))
        return results
    raise ValueError(f"unknown suite {name!r}")
