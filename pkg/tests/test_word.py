import pytest
from hypothesis import given

from dowords.errors import DowError
from dowords.word import Dow, canonicalize, equivalent, format_word, is_palindrome, parse, reverse

from oracles import relabel
from strategies import dows


def W(*letters):
    return Dow(letters)


@pytest.mark.parametrize("text, letters", [
    ("121323", (1, 2, 1, 3, 2, 3)),
    ("", ()),
    ("1,10,1,10", (1, 10, 1, 10)),
    ("1 10 1 10", (1, 10, 1, 10)),
    ("  3, 1 3 2,2 1 ", (3, 1, 3, 2, 2, 1)),
])
def test_parse(text, letters):
    assert parse(text).letters == letters


def test_parse_flags():
    assert parse("121323").canonical
    assert not parse("313221").canonical
    assert parse("").size == 0


@pytest.mark.parametrize("text", ["112", "1x1", "1 -1 -1", "0 0", "1 2 1"])
def test_parse_errors(text):
    with pytest.raises(DowError):
        parse(text)


def test_invalid_construction():
    with pytest.raises(DowError):
        Dow((1, 1, 1, 1))
    with pytest.raises(DowError):
        Dow((True, True))


@pytest.mark.parametrize("src, want", [
    ((3, 1, 3, 2, 2, 1), (1, 2, 1, 3, 3, 2)),
    ((1, 2, 1, 3, 2, 3), (1, 2, 1, 3, 2, 3)),
    ((2, 2, 1, 1), (1, 1, 2, 2)),
])
def test_canonicalize(src, want):
    assert canonicalize(Dow(src)).letters == want


def test_reverse():
    assert reverse(W(1, 2, 2, 3, 1, 3)).letters == (3, 1, 3, 2, 2, 1)
    assert reverse(Dow(())).letters == ()


def test_equivalent_examples():
    assert equivalent(W(3, 1, 3, 2, 2, 1), W(1, 2, 1, 3, 3, 2))
    assert not equivalent(W(1, 2, 2, 3, 1, 3), W(1, 2, 1, 3, 3, 2))


def test_palindrome_examples():
    assert is_palindrome(W(1, 2, 3, 3, 1, 2))
    assert not is_palindrome(W(1, 2, 2, 3, 1, 3))
    for w in ("1122", "1212", "1221"):
        assert is_palindrome(parse(w))


def test_format():
    assert format_word(W(1, 2, 1, 2), "compact") == "1212"
    assert format_word(W(1, 10, 1, 10), "separated") == "1 10 1 10"
    assert format_word(W(1, 10, 1, 10)) == "1 10 1 10"
    with pytest.raises(DowError):
        format_word(W(1, 10, 1, 10), "compact")


@given(dows())
def test_format_round_trip(w):
    assert parse(format_word(w)) == w
    assert parse(format_word(w, "separated")) == w


@given(dows())
def test_canonicalize_idempotent(w):
    c = canonicalize(w)
    assert c.canonical
    assert c.size == w.size
    assert canonicalize(c) == c
    assert c.letters == relabel(w.letters)


@given(dows())
def test_reverse_involution(w):
    assert reverse(reverse(w)) == w
    r = canonicalize(reverse(canonicalize(w)))
    assert r.canonical and r.size == w.size


@given(dows(max_size=5), dows(max_size=5), dows(max_size=5))
def test_equivalence_relation(a, b, c):
    assert equivalent(a, a)
    assert equivalent(a, b) == equivalent(b, a)
    assert equivalent(a, canonicalize(a))
    if equivalent(a, b) and equivalent(b, c):
        assert equivalent(a, c)


@given(dows())
def test_palindrome_invariant_under_canonicalize(w):
    assert is_palindrome(w) == is_palindrome(canonicalize(w))


def test_immutable():
    w = W(1, 1)
    with pytest.raises(Exception):
        w.letters = (2, 2)
