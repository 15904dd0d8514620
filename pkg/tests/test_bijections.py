"""Both bijections: published images, round-trips, exhaustive bijectivity."""

import pytest

from knightpaths.bijections import (
    EmptyInput,
    NotDyck,
    NotMotzkin,
    NotPeakless,
    OddLength,
    dyck_words,
    is_dyck,
    is_peakless_motzkin,
    peakless_motzkin_words,
    phi,
    phi_inv,
    psi,
    psi_inv,
)
from knightpaths.paths import (
    EMPTY_WORD,
    Measure,
    NotOnAxis,
    PathClass,
    enumerate_partial,
    parse_word,
)

WORKED = parse_word("EeNnNeNnEn")


def test_published_images():
    assert psi(EMPTY_WORD) == "F"
    assert psi(parse_word("Nn")) == "FF"
    assert psi(parse_word("Ee")) == "UFD"
    assert psi(parse_word("NnNn")) == "FFF"
    assert psi(WORKED) == "UFUFFDFD"

    assert phi(EMPTY_WORD) == "UD"
    assert phi(parse_word("Nn")) == "UDUD"
    assert phi(parse_word("Ee")) == "UUDD"
    assert phi(parse_word("NnNn")) == "UDUDUD"
    assert phi(WORKED) == "UUDUUDUDDUDD"
    assert phi(parse_word("NeEn")) == "UUDDUD"


def test_inverse_base_cases():
    assert psi_inv("F") == EMPTY_WORD
    assert psi_inv("UFD") == parse_word("Ee")
    assert psi_inv("FF") == parse_word("Nn")
    assert phi_inv("UD") == EMPTY_WORD
    assert phi_inv("UUDD") == parse_word("Ee")
    assert phi_inv("UDUD") == parse_word("Nn")


def test_validators():
    assert is_peakless_motzkin("UFD")
    assert not is_peakless_motzkin("UD")
    assert not is_peakless_motzkin("UDF")
    assert not is_peakless_motzkin("UF")
    assert not is_peakless_motzkin("DU")
    assert is_dyck("UUDD")
    assert is_dyck("")
    assert not is_dyck("UDD")
    assert not is_dyck("UF")


def test_inverse_input_errors():
    with pytest.raises(EmptyInput):
        psi_inv("")
    with pytest.raises(NotPeakless):
        psi_inv("UD")
    with pytest.raises(NotPeakless):
        psi_inv("FUDF")
    with pytest.raises(NotMotzkin):
        psi_inv("UFX")
    with pytest.raises(NotMotzkin):
        psi_inv("UF")
    with pytest.raises(OddLength):
        phi_inv("UDU")
    with pytest.raises(NotDyck):
        phi_inv("DU")
    with pytest.raises(NotDyck):
        phi_inv("")


def test_domain_errors_propagate():
    with pytest.raises(NotOnAxis):
        psi(parse_word("N"))
    with pytest.raises(NotOnAxis):
        phi(parse_word("E"))


def test_length_laws():
    for n in range(0, 13, 2):
        for word in enumerate_partial(PathClass.ZIGZAG, Measure.SIZE, n, 0):
            assert len(psi(word)) == word.size // 2 + 1
    for n in range(0, 11, 2):
        for word in enumerate_partial(PathClass.ZIGZAG, Measure.LENGTH, n, 0):
            assert len(phi(word)) == word.length + 2


def test_size_map_round_trip_exhaustive():
    for n in range(0, 17, 2):
        for word in enumerate_partial(PathClass.ZIGZAG, Measure.SIZE, n, 0):
            image = psi(word)
            assert is_peakless_motzkin(image)
            assert psi_inv(image) == word


def test_length_map_round_trip_exhaustive():
    for n in range(0, 15, 2):
        for word in enumerate_partial(PathClass.ZIGZAG, Measure.LENGTH, n, 0):
            image = phi(word)
            assert is_dyck(image)
            assert phi_inv(image) == word


def test_word_generators_have_expected_counts():
    # Peakless Motzkin counts (generalized Catalan numbers).
    assert [len(peakless_motzkin_words(n)) for n in range(9)] == [
        1, 1, 1, 2, 4, 8, 17, 37, 82,
    ]
    from knightpaths.closed_forms import catalan

    for n in range(0, 7):
        assert len(dyck_words(2 * n)) == catalan(n)
    assert dyck_words(3) == []
    for word in peakless_motzkin_words(7):
        assert is_peakless_motzkin(word)
    for word in dyck_words(8):
        assert is_dyck(word)


def test_size_map_is_bijection_small():
    for n in range(0, 7):
        words = enumerate_partial(PathClass.ZIGZAG, Measure.SIZE, 2 * n, 0)
        images = {psi(w) for w in words}
        assert len(images) == len(words)
        assert images == set(peakless_motzkin_words(n + 1))
        for image in images:
            assert psi(psi_inv(image)) == image


def test_length_map_is_bijection_small():
    for n in range(0, 6):
        words = enumerate_partial(PathClass.ZIGZAG, Measure.LENGTH, 2 * n, 0)
        images = {phi(w) for w in words}
        assert len(images) == len(words)
        assert images == set(dyck_words(2 * (n + 1)))
        for image in images:
            assert phi(phi_inv(image)) == image


def test_deep_nesting_does_not_recurse():
    # A comb of nested NE frames drives nesting depth linear in the size.
    depth = 600
    word = parse_word("Ne" * depth + "En" * depth)
    image = psi(word)
    assert len(image) == word.size // 2 + 1
    assert psi_inv(image) == word
    image = phi(word)
    assert phi_inv(image) == word
