import itertools
import math
import os

import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.errors import AlphabetError, EmptyLanguageError, InputError, ParseError
from core.settings import FIXTURES_DIR
from symbolic.language import block_count, entropy_estimate, entropy_limit, is_admissible, language
from symbolic.parser import load_subshift, parse_subshift, serialize_subshift
from symbolic.points import defect_point, shift, sunny_side_up_point, window_of
from symbolic.subshift import SubshiftSpec
from symbolic.words import Alphabet, parse_word

GOLDEN_RATIO = (1 + math.sqrt(5)) / 2


def test_golden_mean_block_count_at_twenty(golden):
    assert block_count(golden, 20) == 17711


def test_golden_mean_entropy_estimate(golden):
    estimate = entropy_estimate(golden, 20)
    assert estimate == pytest.approx(math.log2(17711) / 20)
    assert abs(estimate - math.log2(GOLDEN_RATIO)) < 0.02


def test_golden_mean_entropy_limit(golden):
    assert entropy_limit(golden) == pytest.approx(math.log2(GOLDEN_RATIO), abs=1e-9)


def test_language_is_lexicographic(golden):
    assert ["".join(w) for w in language(golden, 3)] == ["000", "001", "010", "100", "101"]


@pytest.mark.parametrize("name", ["golden.sub", "golden_allowed.sub", "full2.sub", "sunny.sub"])
def test_block_count_matches_enumeration(name):
    spec = load_subshift(os.path.join(FIXTURES_DIR, name))
    for n in range(1, 11):
        assert block_count(spec, n) == len(language(spec, n))


def test_allowed_and_forbidden_presentations_agree(golden):
    allowed = load_subshift(os.path.join(FIXTURES_DIR, "golden_allowed.sub"))
    for n in range(1, 13):
        assert language(allowed, n) == language(golden, n)


def test_full_shift_counts(full2):
    assert [block_count(full2, n) for n in range(1, 8)] == [2**n for n in range(1, 8)]
    assert entropy_limit(full2) == pytest.approx(1.0)


def test_sunny_side_up_graph_presentation(sunny):
    assert [block_count(sunny, n) for n in range(1, 33)] == [n + 1 for n in range(1, 33)]
    assert entropy_limit(sunny) == pytest.approx(0.0, abs=1e-9)
    assert not is_admissible(sunny, tuple("0101"))


@given(st.lists(st.sampled_from("01"), max_size=14))
def test_golden_admissibility_is_absence_of_11(word):
    spec = SubshiftSpec.forbidding(Alphabet.of("01"), [("1", "1")])
    assert is_admissible(spec, word) == ("11" not in "".join(word))


def test_every_word_forbidden_has_empty_language():
    spec = SubshiftSpec.forbidding(Alphabet.of("01"), [("0",), ("1",)])
    assert block_count(spec, 3) == 0
    with pytest.raises(EmptyLanguageError):
        entropy_estimate(spec, 3)


def test_nonpositive_length_is_rejected(golden):
    with pytest.raises(InputError):
        language(golden, 0)


def test_unknown_symbol_is_rejected():
    with pytest.raises(AlphabetError):
        parse_word("012", Alphabet.of("01"))


def test_multi_character_symbols_use_commas():
    alphabet = Alphabet.of(["ab", "c"])
    assert parse_word("ab,c,ab", alphabet) == ("ab", "c", "ab")
    with pytest.raises(AlphabetError):
        parse_word("abcab", alphabet)


@pytest.mark.parametrize("name", ["golden.sub", "golden_allowed.sub", "full2.sub", "sunny.sub"])
def test_subshift_files_round_trip(name):
    spec = load_subshift(os.path.join(FIXTURES_DIR, name))
    assert parse_subshift(serialize_subshift(spec)) == spec


def test_parse_error_carries_line_number():
    with pytest.raises(ParseError) as excinfo:
        parse_subshift("ALPHABET 0 1\nFORBID 11\nBOGUS x\n", source="bad.sub")
    assert excinfo.value.line == 3
    assert "bad.sub" in str(excinfo.value)


def test_mixed_presentations_are_rejected():
    with pytest.raises(ParseError):
        parse_subshift("ALPHABET 0 1\nFORBID 11\nALLOW 2 00 01\n")


def test_sunny_side_up_point_window():
    assert window_of(sunny_side_up_point(), -2, 2) == ("0", "0", "1", "0", "0")


def test_defect_point_window():
    assert "".join(window_of(defect_point(), -4, 5)) == "1010110101"


@given(st.integers(min_value=0, max_value=12), st.integers(min_value=-15, max_value=15))
def test_shift_reads_one_coordinate_further(times, i):
    point = defect_point()
    shifted = point
    for _ in range(times):
        shifted = shift(shifted)
    assert shifted.symbol_at(i) == point.symbol_at(i + times)


FILTERS = {
    "golden.sub": lambda s: "11" not in s,
    "golden_allowed.sub": lambda s: "11" not in s,
    "full2.sub": lambda s: True,
    "sunny.sub": lambda s: s.count("1") <= 1,
}


@pytest.mark.parametrize("name", sorted(FILTERS))
def test_language_matches_brute_force_filtering(name):
    spec = load_subshift(os.path.join(FIXTURES_DIR, name))
    keep = FILTERS[name]
    for n in range(1, 17):
        expected = [w for w in itertools.product("01", repeat=n) if keep("".join(w))]
        assert language(spec, n) == expected


@pytest.mark.parametrize("name", sorted(FILTERS))
def test_block_counts_are_submultiplicative(name):
    spec = load_subshift(os.path.join(FIXTURES_DIR, name))
    counts = {n: block_count(spec, n) for n in range(1, 25)}
    for m in range(1, 24):
        for n in range(1, 25 - m):
            assert counts[m + n] <= counts[m] * counts[n]


def test_forbidden_words_convert_to_allowed_blocks(golden):
    allowed = golden.as_allowed()
    assert allowed.memory == 2
    assert ["".join(w) for w in allowed.words] == ["00", "01", "10"]
    assert allowed.allowed_blocks == golden.allowed_blocks
    for n in range(1, 13):
        assert language(allowed, n) == language(golden, n)
