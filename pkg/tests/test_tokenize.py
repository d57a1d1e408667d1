import unicodedata

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lengram.ingest import TokenizerConfig, tokenize, word_lengths

APOSTROPHE = TokenizerConfig(letter_policy="unicode_letters_plus_internal_apostrophe")


def test_plain_sentence():
    assert tokenize("We are the people.") == ["We", "are", "the", "people"]


def test_empty_text():
    assert tokenize("") == []


def test_greek_with_digits_and_punctuation():
    assert tokenize("Η Ελλάδα 2008!") == ["Η", "Ελλάδα"]


def test_lengths_count_code_points_not_bytes():
    words = ["We", "are", "the", "people"]
    assert word_lengths(words) == [2, 3, 3, 6]
    assert word_lengths(["Ελλάδα"]) == [6]
    assert word_lengths(["a"]) == [1]


def test_nfc_applied_before_counting():
    # decomposed accent must not add a phantom code point
    decomposed = "café"
    assert tokenize(decomposed) == ["café"]
    assert word_lengths(tokenize(decomposed)) == [4]
    greek = unicodedata.normalize("NFD", "Ελλάδα")
    assert word_lengths(tokenize(greek)) == [6]


def test_digit_bearing_candidates_dropped_whole():
    # partial stripping would fabricate word lengths
    assert tokenize("abc123def") == []
    assert tokenize("2008 report B2B") == ["report"]


def test_hyphen_splits_compounds():
    assert tokenize("well-known fact") == ["well", "known", "fact"]


def test_underscore_and_symbols_separate():
    assert tokenize("foo_bar baz&qux") == ["foo", "bar", "baz", "qux"]


def test_apostrophe_default_policy_splits():
    assert tokenize("don't stop") == ["don", "t", "stop"]


def test_apostrophe_internal_policy_keeps_word():
    assert tokenize("don't stop", APOSTROPHE) == ["don't", "stop"]
    assert word_lengths(tokenize("don't", APOSTROPHE)) == [5]


def test_apostrophe_edges_are_not_internal():
    assert tokenize("'tis said'", APOSTROPHE) == ["tis", "said"]
    assert tokenize("''", APOSTROPHE) == []


def test_curly_apostrophe_supported():
    assert tokenize("don’t", APOSTROPHE) == ["don’t"]


def test_min_word_length_drops_short_words():
    config = TokenizerConfig(min_word_length=2)
    assert tokenize("I am a tree", config) == ["am", "tree"]


def test_over_long_tokens_dropped_not_clamped():
    config = TokenizerConfig(max_word_length=5)
    words = tokenize("short extraordinarily ok", config)
    assert words == ["short", "ok"]


def test_config_validation():
    with pytest.raises(ValueError):
        TokenizerConfig(min_word_length=0)
    with pytest.raises(ValueError):
        TokenizerConfig(min_word_length=5, max_word_length=4)
    with pytest.raises(ValueError):
        TokenizerConfig(letter_policy="bytes")
    with pytest.raises(ValueError):
        TokenizerConfig(length_unit="bytes")


@settings(max_examples=60, deadline=None)
@given(st.text(max_size=300))
def test_tokenize_deterministic_and_lengths_align(text):
    config = TokenizerConfig()
    first = tokenize(text, config)
    second = tokenize(text, config)
    assert first == second
    lengths = word_lengths(first, config)
    assert len(lengths) == len(first)
    assert all(
        config.min_word_length <= n <= config.max_word_length for n in lengths
    )
