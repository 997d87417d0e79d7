import pytest

from dowords.enumeration import DowStream, count_by_enumeration, enumerate_words, resolve_filter
from dowords.errors import BudgetExceeded

import oracles


def texts(stream):
    return [str(w) for w in stream]


def test_small_streams():
    assert texts(enumerate_words(1)) == ["11"]
    assert texts(enumerate_words(2)) == ["1122", "1212", "1221"]
    assert len(texts(enumerate_words(3))) == 15
    assert len(texts(enumerate_words(3, "strong"))) == 4


def test_size_zero():
    assert [w.letters for w in enumerate_words(0)] == [()]
    assert list(enumerate_words(0, "palindrome")) == []
    assert list(enumerate_words(0, "strong")) == []


def test_negative_size():
    with pytest.raises(ValueError):
        DowStream(-1)


@pytest.mark.parametrize("n", range(1, 5))
def test_matches_multiset_permutations(n):
    got = [w.letters for w in enumerate_words(n)]
    assert got == oracles.all_words(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_unfiltered_length_is_double_factorial(n):
    assert DowStream(n).count() == oracles.odd_double_factorial(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_lexicographic_unique_canonical(n):
    words = list(DowStream(n).letters())
    assert words == sorted(words)
    assert len(set(words)) == len(words)
    assert all(w == oracles.relabel(w) for w in words)


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("name, check", [
    ("palindrome", lambda w: oracles.palindrome(w)),
    ("irreducible", lambda w: oracles.irreducible(w)),
    ("strong", lambda w: oracles.strongly_irreducible(w)),
    ("irreducible-palindrome", lambda w: oracles.irreducible(w) and oracles.palindrome(w)),
    ("strong-palindrome", lambda w: oracles.strongly_irreducible(w) and oracles.palindrome(w)),
])
def test_filters_match_definitions(n, name, check):
    want = [w for w in oracles.all_words(n) if check(w)]
    assert [w.letters for w in enumerate_words(n, name)] == want


def test_count_examples():
    assert count_by_enumeration(6, "all") == 10395
    assert count_by_enumeration(6, "palindrome") == 331
    assert count_by_enumeration(5, ["irreducible", "palindrome"]) == 72


def test_filter_containment():
    for n in range(1, 7):
        s, i, a = (count_by_enumeration(n, f) for f in ("strong", "irreducible", "all"))
        assert s <= i <= a


def test_budget():
    with pytest.raises(BudgetExceeded):
        count_by_enumeration(9, "all")
    assert count_by_enumeration(3, "all", budget=3) == 15


@pytest.mark.parametrize("n", [1, 4, 6])
def test_parts_partition_stream(n):
    stream = DowStream(n, "strong")
    pieces = [list(p.letters()) for p in stream.parts()]
    assert len(pieces) == 2 * n - 1
    assert sorted(sum(pieces, [])) == list(stream.letters())


def test_parallel_count_matches():
    assert count_by_enumeration(6, "strong", workers=2) == count_by_enumeration(6, "strong")


def test_resolve_filter():
    assert resolve_filter("all") == frozenset()
    assert resolve_filter("strongly-irreducible") == {"strong"}
    assert resolve_filter("irreducible,palindrome") == {"irreducible", "palindrome"}
    with pytest.raises(ValueError):
        resolve_filter("bogus")
