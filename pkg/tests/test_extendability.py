from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from strategies import words
from transwords.extendability import (
    NotExtendable,
    Status,
    StructuredInfiniteWord,
    choose_pivot,
    enumerate_words,
    extension_stream,
    force_recurrent_letter,
    left_extendable,
    right_extendable,
)
from transwords.generators import factor_in, thue_morse
from transwords.repetition import is_power_free, naive_is_power_free
from transwords.words import (
    PowerBound,
    ResourceLimit,
    UnsupportedParameters,
    WordError,
    decode,
    reverse,
)

P = PowerBound.parse
SQUARE = P("2")


def test_enumerate_examples():
    assert enumerate_words(3, SQUARE, 1) == [(0,), (1,), (2,)]
    assert len(enumerate_words(3, SQUARE, 5)) == 30
    assert enumerate_words(1, SQUARE, 2) == []
    assert enumerate_words(3, SQUARE, 0) == [()]


def test_enumerate_counts_frozen():
    assert [len(enumerate_words(3, SQUARE, n)) for n in range(1, 8)] == [3, 6, 12, 18, 30, 42, 60]


def test_enumerate_cap():
    with pytest.raises(ResourceLimit):
        enumerate_words(3, SQUARE, 41)


@pytest.mark.parametrize("k, bound, n", [(2, "2+", 9), (3, "7/4+", 8), (3, "3", 6), (4, "2", 5)])
def test_enumerate_matches_filter(k, bound, n):
    b = P(bound)
    brute = [w for w in product(range(k), repeat=n) if naive_is_power_free(w, b)]
    assert enumerate_words(k, b, n) == brute


def test_enumerate_parallel_matches_serial():
    assert enumerate_words(3, SQUARE, 9, jobs=2) == enumerate_words(3, SQUARE, 9)


def test_maximal_word():
    v = right_extendable(decode("0102010"), 3, SQUARE, 1)
    assert v.status is Status.NOT_EXTENDABLE
    for a in range(3):
        assert not is_power_free(decode("0102010") + (a,), SQUARE)


def test_right_extendable_witness():
    v = right_extendable(decode("010"), 3, SQUARE, 20)
    assert v.status is Status.EXTENDABLE and len(v.witness) == 20
    assert is_power_free(decode("010") + v.witness, SQUARE)
    assert right_extendable((), 3, SQUARE, 10).status is Status.EXTENDABLE


def test_left_extendable():
    v = left_extendable(decode("010"), 3, SQUARE, 20)
    assert v.status is Status.EXTENDABLE
    assert is_power_free(v.witness + decode("010"), SQUARE)
    w = decode("0102010")
    assert left_extendable(w, 3, SQUARE, 1) == right_extendable(reverse(w), 3, SQUARE, 1)
    with pytest.raises(WordError):
        left_extendable((0, 0), 3, SQUARE, 1)


def test_tiny_budget_is_undecided():
    assert right_extendable((), 3, SQUARE, 60, budget=10).status is Status.UNDECIDED


def test_extension_stream():
    s = extension_stream((0,), 3, SQUARE)
    pre = s.prefix(50)
    assert pre[0] == 0 and is_power_free(pre, SQUARE)
    assert is_power_free(extension_stream((), 3, SQUARE).prefix(10), SQUARE)
    with pytest.raises(NotExtendable):
        extension_stream(decode("0102010"), 3, SQUARE)


@settings(max_examples=25)
@given(words(3, 8), st.integers(1, 200))
def test_stream_prefixes_power_free(u, n):
    if is_power_free(u, SQUARE) and right_extendable(u, 3, SQUARE, 64).status is Status.EXTENDABLE:
        pre = extension_stream(u, 3, SQUARE).prefix(len(u) + n)
        assert pre[: len(u)] == u and is_power_free(pre, SQUARE)


def test_choose_pivot():
    assert choose_pivot((0, 1, 1, 2), 2) == 1
    assert choose_pivot((2, 2, 0), 2) == 0


def test_force_recurrent_letter_examples():
    ub = force_recurrent_letter((), 2, 3, P("2+"))
    pre = ub.prefix(40)
    assert is_power_free(pre, P("2+")) and pre.count(2) >= 3
    ub = force_recurrent_letter((0,), 0, 4, SQUARE)
    assert ub.prefix(1) == (0,) and 0 in ub.tail.alphabet
    with pytest.raises(UnsupportedParameters):
        force_recurrent_letter((), 2, 3, SQUARE)


@pytest.mark.parametrize("k, bound", [(3, "2+"), (3, "5/2"), (4, "2")])
def test_force_recurrent_letter_structure(k, bound):
    b = P(bound)
    for u in [(), (0,), (0, 1), (1, 0, 2)]:
        for x in range(k):
            ub = force_recurrent_letter(u, x, k, b)
            assert isinstance(ub, StructuredInfiniteWord)
            assert ub.prefix(len(u)) == u
            assert ub.pivot not in ub.tail.alphabet and x in ub.tail.alphabet
            assert factor_in(ub.tail, (x,))
            assert is_power_free(ub.prefix(len(ub.lead) + 512), b)


def test_structured_word_rejects_bad_tail():
    with pytest.raises(WordError):
        StructuredInfiniteWord((), 0, thue_morse())
