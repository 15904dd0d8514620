"""Embedded sequence fixtures, the b-file parser, and the cached fetcher."""

import pytest

from knightpaths import oeis


def test_known_ids_cover_all_cited_sequences():
    assert oeis.known_ids() == [
        "A000108", "A001405", "A004148", "A005220", "A005221", "A088518",
        "A096587", "A096588", "A111160", "A166135", "A187430",
    ]


@pytest.mark.parametrize("seq_id", [
    "A000108", "A001405", "A004148", "A005220", "A005221", "A088518",
    "A096587", "A096588", "A111160", "A166135", "A187430",
])
def test_offline_comparison_passes(seq_id):
    result = oeis.compare(seq_id)
    assert result.passed, result
    assert result.source == "embedded"
    assert result.compared >= 7


def test_fixture_contains_published_terms():
    assert oeis.fixture("A004148").terms[:12] == (
        1, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423, 978,
    )
    assert oeis.fixture("A187430").terms == (
        1, 0, 2, 2, 11, 24, 93, 272, 971, 3194, 11293,
    )
    assert oeis.fixture("A088518").terms == (1, 1, 2, 2, 4, 5, 9, 12, 21, 29, 50)


def test_max_terms_limits_comparison():
    result = oeis.compare("A000108", max_terms=5)
    assert result.passed
    assert result.compared == 5


def test_unknown_sequence():
    with pytest.raises(oeis.UnknownSequence):
        oeis.compare("A999999")


def test_parse_b_file():
    text = "# comment line\n\n0 1\n1 1\n 2   2 \n3 5\n"
    assert oeis.parse_b_file(text) == [1, 1, 2, 5]
    with pytest.raises(oeis.BFileFormatError):
        oeis.parse_b_file("0 1\nnot a line\n")


def test_fetch_reads_cache_without_network(tmp_path, monkeypatch):
    # A cache hit must never touch the network.
    def boom(*args, **kwargs):
        raise AssertionError("network access attempted despite cache hit")

    import httpx

    monkeypatch.setattr(httpx, "get", boom)
    cache = tmp_path / "oeis"
    cache.mkdir()
    terms = oeis.fixture("A187430").terms
    lines = "".join(f"{i} {v}\n" for i, v in enumerate(terms))
    (cache / "A187430.bfile").write_text("# cached\n" + lines)

    result = oeis.compare("A187430", fetch=True, cache_dir=cache)
    assert result.passed
    assert result.source == "fetched"


def test_fetch_detects_mismatch_from_cache(tmp_path):
    cache = tmp_path / "oeis"
    cache.mkdir()
    (cache / "A187430.bfile").write_text("0 1\n1 0\n2 2\n3 99\n")
    result = oeis.compare("A187430", fetch=True, cache_dir=cache)
    assert not result.passed
    assert result.mismatch_index == 3
    assert result.expected == 99
    assert result.computed == 2


def test_fetch_failure_raises(tmp_path, monkeypatch):
    def refuse(*args, **kwargs):
        raise OSError("no route to host")

    import httpx

    monkeypatch.setattr(httpx, "get", refuse)
    with pytest.raises(oeis.FetchFailure):
        oeis.fetch_terms("A000108", cache_dir=tmp_path)


def test_cache_env_var_override(tmp_path, monkeypatch):
    monkeypatch.setenv(oeis.CACHE_ENV_VAR, str(tmp_path / "elsewhere"))
    assert oeis.default_cache_dir() == tmp_path / "elsewhere"


def test_triangle_fixture_matches_displayed_rows():
    fixture = oeis.fixture("A096587")
    # Rows for sizes 0..5 have lengths 1, 3, 5, 7, 9, 11.
    assert len(fixture.terms) == 36
    assert fixture.terms[:4] == (1, 0, 0, 1)
    assert fixture.terms[-11:] == (2, 4, 9, 8, 3, 3, 4, 4, 0, 0, 1)
