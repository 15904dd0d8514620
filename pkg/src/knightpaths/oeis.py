"""Cross-checks against OEIS reference data.

Every sequence the library reproduces has an embedded fixture holding the
published terms, plus a producer that recomputes the same terms from the
counting engines.  Offline comparison (the default, and the only mode any
test uses) checks producer output against the fixture.  Fetch mode instead
downloads the sequence's b-file, caches it on disk, and compares against the
downloaded terms; it is strictly opt-in.

A fixture's `shift` says where the library's sequence starts inside the
reference terms (e.g. the axis counts skip a leading 1 of the catalogued
sequence).  The b-file format is the standard two-column ``index value``
text, with '#' comment lines ignored.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from pathlib import Path

from . import closed_forms, counting
from .paths import Measure, PathClass

#: Override the on-disk cache location for fetched b-files.
CACHE_ENV_VAR = "KNIGHTPATHS_OEIS_CACHE"

OEIS_URL_TEMPLATE = "https://oeis.org/{sid}/b{digits}.txt"


class UnknownSequence(KeyError):
    pass


class FetchFailure(RuntimeError):
    pass


class BFileFormatError(ValueError):
    pass


@dataclass(frozen=True)
class SequenceFixture:
    id: str
    offset: int
    terms: tuple
    source: str  # "embedded" or "fetched"


@dataclass(frozen=True)
class ComparisonResult:
    id: str
    passed: bool
    compared: int
    source: str
    mismatch_index: int = None
    expected: int = None
    computed: int = None


def _zigzag_size_axis_even(m):
    table = counting.build_table(PathClass.ZIGZAG, Measure.SIZE, 2 * (m - 1) if m else 0)
    return [table.total(2 * n, 0) for n in range(m)]


def _zigzag_length_axis_even(m):
    table = counting.build_table(PathClass.ZIGZAG, Measure.LENGTH, 2 * (m - 1) if m else 0)
    return [table.total(2 * n, 0) for n in range(m)]


def _knight_size_axis_nonzero(m):
    # Zero coefficients occur only at sizes 1 and 3, hence the small margin.
    table = counting.build_table(PathClass.KNIGHT, Measure.SIZE, m + 4)
    values = [v for v in table.axis() if v != 0]
    return values[:m]


def _knight_size_height1(m):
    table = counting.build_table(PathClass.KNIGHT, Measure.SIZE, m + 1)
    return [table.total(n, 1) for n in range(2, m + 2)]


def _knight_size_totals(m):
    table = counting.build_table(PathClass.KNIGHT, Measure.SIZE, m - 1 if m else 0)
    return [table.sum_over_heights(n) for n in range(m)]


def _knight_size_triangle_rows(m):
    table = counting.build_table(PathClass.KNIGHT, Measure.SIZE, 5)
    flat = []
    for n in range(6):
        flat.extend(table.totals_row(n))
    return flat[:m]


def _zigzag_size_totals(m):
    table = counting.build_table(PathClass.ZIGZAG, Measure.SIZE, m - 1 if m else 0)
    return [table.sum_over_heights(n) for n in range(m)]


def _zigzag_length_totals(m):
    table = counting.build_table(PathClass.ZIGZAG, Measure.LENGTH, m - 1 if m else 0)
    return [table.sum_over_heights(n) for n in range(m)]


def _knight_length_positive_height(k):
    def produce(m):
        rows = counting.knight_length_positive(m)
        return [rows[n][k] for n in range(1, m + 1)]

    return produce


def _knight_length_axis_closed(m):
    return [closed_forms.knight_length_axis_count(n) for n in range(m)]


@dataclass(frozen=True)
class _SequenceSpec:
    terms: tuple
    shift: int
    producer: object
    what: str


_SPECS = {
    "A000108": _SequenceSpec(
        terms=(1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786),
        shift=1,
        producer=_zigzag_length_axis_even,
        what="zigzag paths on the axis, by length (Catalan numbers)",
    ),
    "A004148": _SequenceSpec(
        terms=(1, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423, 978),
        shift=1,
        producer=_zigzag_size_axis_even,
        what="zigzag paths on the axis, by size (generalized Catalan numbers)",
    ),
    "A005220": _SequenceSpec(
        terms=(1, 1, 3, 2, 12, 14, 54, 86, 274, 528),
        shift=0,
        producer=_knight_size_axis_nonzero,
        what="knight paths on the axis, by size (nonzero coefficients)",
    ),
    "A005221": _SequenceSpec(
        terms=(1, 1, 3, 4, 12, 22, 61, 128),
        shift=0,
        producer=_knight_size_height1,
        what="partial knight paths ending at height 1, by size",
    ),
    "A088518": _SequenceSpec(
        terms=(1, 1, 2, 2, 4, 5, 9, 12, 21, 29, 50),
        shift=0,
        producer=_zigzag_size_totals,
        what="all partial zigzag paths, by size",
    ),
    "A001405": _SequenceSpec(
        terms=(1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252, 462),
        shift=1,
        producer=_zigzag_length_totals,
        what="all partial zigzag paths, by length (central binomials, shifted)",
    ),
    "A096587": _SequenceSpec(
        # Stored as the (value, height) rectangle rows for sizes 0..5, the
        # orientation of the displayed knight-by-size expansion.
        terms=(
            1,
            0, 0, 1,
            1, 1, 0, 0, 1,
            0, 1, 2, 2, 0, 0, 1,
            3, 3, 1, 2, 3, 3, 0, 0, 1,
            2, 4, 9, 8, 3, 3, 4, 4, 0, 0, 1,
        ),
        shift=0,
        producer=_knight_size_triangle_rows,
        what="partial knight paths by (size, height), rows flattened",
    ),
    "A096588": _SequenceSpec(
        terms=(1, 1, 3, 6, 16, 38, 99, 248, 646, 1659, 4342),
        shift=0,
        producer=_knight_size_totals,
        what="all partial knight paths, by size",
    ),
    "A166135": _SequenceSpec(
        terms=(1, 1, 3, 7, 22, 65, 213),
        shift=0,
        producer=_knight_length_positive_height(1),
        what="strictly-positive knight walks ending at height 1, by length",
    ),
    "A111160": _SequenceSpec(
        terms=(1, 1, 4, 9, 31, 91, 309),
        shift=0,
        producer=_knight_length_positive_height(2),
        what="strictly-positive knight walks ending at height 2, by length",
    ),
    "A187430": _SequenceSpec(
        terms=(1, 0, 2, 2, 11, 24, 93, 272, 971, 3194, 11293),
        shift=0,
        producer=_knight_length_axis_closed,
        what="knight paths on the axis, by length (closed-form evaluator)",
    ),
}


def known_ids():
    return sorted(_SPECS)


def describe(seq_id):
    return _spec(seq_id).what


def _spec(seq_id):
    spec = _SPECS.get(seq_id)
    if spec is None:
        raise UnknownSequence(seq_id)
    return spec


def fixture(seq_id):
    spec = _spec(seq_id)
    return SequenceFixture(seq_id, 0, spec.terms, "embedded")


_B_LINE = re.compile(r"^\s*(-?\d+)\s+(-?\d+)\s*$")


def parse_b_file(text):
    """Values from a two-column b-file, in file order.

    Comment lines start with '#'; blank lines are skipped; anything else
    that is not two integers is an error.
    """
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        match = _B_LINE.match(stripped)
        if match is None:
            raise BFileFormatError(f"line {lineno} is not 'index value': {line!r}")
        values.append(int(match.group(2)))
    return values


def default_cache_dir():
    override = os.environ.get(CACHE_ENV_VAR)
    if override:
        return Path(override)
    return Path.home() / ".cache" / "knightpaths" / "oeis"


def _cache_file(seq_id, cache_dir):
    return Path(cache_dir) / f"{seq_id}.bfile"


def fetch_terms(seq_id, cache_dir=None):
    """Terms from the sequence's b-file, reading the cache before the network."""
    cache_dir = default_cache_dir() if cache_dir is None else Path(cache_dir)
    cached = _cache_file(seq_id, cache_dir)
    if cached.exists():
        try:
            return parse_b_file(cached.read_text())
        except (OSError, BFileFormatError) as exc:
            raise FetchFailure(f"unreadable cache file {cached}: {exc}") from exc

    url = OEIS_URL_TEMPLATE.format(sid=seq_id, digits=seq_id.lstrip("A"))
    try:
        import httpx

        response = httpx.get(url, timeout=30.0, follow_redirects=True)
        response.raise_for_status()
        text = response.text
    except Exception as exc:
        raise FetchFailure(f"could not fetch {url}: {exc}") from exc
    try:
        values = parse_b_file(text)
    except BFileFormatError as exc:
        raise FetchFailure(f"malformed b-file at {url}: {exc}") from exc
    cache_dir.mkdir(parents=True, exist_ok=True)
    cached.write_text(text)
    return values


def compare(seq_id, max_terms=None, fetch=False, cache_dir=None):
    """Compare the library's computed sequence against the reference terms.

    Offline (default) uses the embedded fixture; fetch mode uses the cached
    or downloaded b-file.  Raises FetchFailure only in fetch mode.
    """
    spec = _spec(seq_id)
    if fetch:
        reference = fetch_terms(seq_id, cache_dir)
        source = "fetched"
    else:
        reference = list(spec.terms)
        source = "embedded"

    available = len(reference) - spec.shift
    compared = available if max_terms is None else min(max_terms, available)
    compared = max(compared, 0)
    computed = spec.producer(compared)
    for i in range(compared):
        if computed[i] != reference[spec.shift + i]:
            return ComparisonResult(
                seq_id,
                False,
                compared,
                source,
                mismatch_index=i,
                expected=reference[spec.shift + i],
                computed=computed[i],
            )
    return ComparisonResult(seq_id, True, compared, source)
