"""Exhaustive generation of words in ascending order.

Words of size n in ascending order correspond one-to-one to perfect
matchings of 2n positions, so building them letter by letter (close an
open letter, or open the next new one) lists each exactly once, already
relabeled, in lexicographic order. These streams are the brute-force
oracle for every counting formula in :mod:`dowords.count`.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator

from .classify import _factor_ends, _has_proper_dow_factor
from .errors import BudgetExceeded
from .word import Dow, _ascending

DEFAULT_BUDGET = 8

BASE_CLASSES = ("palindrome", "irreducible", "strong")

# named filters; values are the base classes that must all hold
FILTERS = {
    "all": frozenset(),
    "palindrome": frozenset({"palindrome"}),
    "irreducible": frozenset({"irreducible"}),
    "strong": frozenset({"strong"}),
    "irreducible-palindrome": frozenset({"irreducible", "palindrome"}),
    "strong-palindrome": frozenset({"strong", "palindrome"}),
}
_ALIASES = {"strongly-irreducible": "strong", "sir": "strong"}


def resolve_filter(spec) -> frozenset:
    """Turn a filter name (``"strong-palindrome"``) or an iterable of base
    class names into the frozenset of base classes to intersect."""
    if spec is None:
        return frozenset()
    if isinstance(spec, str):
        name = _ALIASES.get(spec, spec)
        if name in FILTERS:
            return FILTERS[name]
        parts = [p.strip() for p in name.replace("&", ",").split(",") if p.strip()]
        if len(parts) > 1:
            return resolve_filter(parts)
        raise ValueError(f"unknown class {spec!r}")
    out = set()
    for p in spec:
        out |= resolve_filter(p)
    return frozenset(out)


def _predicate(classes: frozenset):
    checks = []
    if "irreducible" in classes and "strong" not in classes:
        checks.append(lambda t: _factor_ends(t)[0] == len(t))
    if "strong" in classes:
        checks.append(lambda t: not _has_proper_dow_factor(t))
    if "palindrome" in classes:
        checks.append(lambda t: t == _ascending(t[::-1]))
    if not checks:
        return None
    if len(checks) == 1:
        return checks[0]
    return lambda t: all(c(t) for c in checks)


def _words(n: int, first_partner: int | None = None) -> Iterator[tuple[int, ...]]:
    """Letter tuples of all ascending words of size n, lexicographically.

    ``first_partner`` pins the 0-based position of the second 1, which
    splits the stream into 2n - 1 disjoint pieces.
    """
    length = 2 * n
    word = [0] * length
    open_: list[int] = []  # letters seen once, in increasing order

    def fill(pos, top):
        if pos == length:
            yield tuple(word)
            return
        remaining = length - pos
        for k, a in enumerate(open_):
            if first_partner is not None and (a == 1) != (pos == first_partner):
                continue
            word[pos] = a
            del open_[k]
            yield from fill(pos + 1, top)
            open_.insert(k, a)
        if pos == first_partner:
            return
        if top < n and len(open_) + 1 <= remaining - 1:
            word[pos] = top + 1
            open_.append(top + 1)
            yield from fill(pos + 1, top + 1)
            open_.pop()

    if n == 0:
        yield ()
        return
    yield from fill(0, 0)


class DowStream:
    """Lazy stream of the ascending words of one size passing a filter.

    Iterating yields :class:`~dowords.word.Dow` values. Streams restart
    from the beginning each time they are iterated; ``part`` restricts the
    stream to words whose second 1 sits at 0-based position ``part``.
    """

    def __init__(self, n: int, filter=None, part: int | None = None):
        if n < 0:
            raise ValueError("size must be non-negative")
        if part is not None and not 1 <= part <= 2 * n - 1:
            raise ValueError(f"part must lie in 1..{2 * n - 1}")
        self.size = n
        self.classes = resolve_filter(filter)
        self.part = part

    def parts(self) -> list[DowStream]:
        """The independent sub-streams, one per position of the second 1."""
        return [DowStream(self.size, self.classes, p) for p in range(1, 2 * self.size)]

    def letters(self) -> Iterator[tuple[int, ...]]:
        if self.size == 0:
            # the empty word is only an element of the unfiltered class
            if not self.classes and self.part is None:
                yield ()
            return
        pred = _predicate(self.classes)
        source = _words(self.size, self.part)
        if pred is None:
            yield from source
        else:
            yield from filter(pred, source)

    def __iter__(self) -> Iterator[Dow]:
        return map(Dow._trusted, self.letters())

    def count(self) -> int:
        return sum(1 for _ in self.letters())


def enumerate_words(n: int, filter=None) -> DowStream:
    return DowStream(n, filter)


def _count_part(args):
    n, classes, part = args
    return DowStream(n, classes, part).count()


def count_by_enumeration(n: int, filter=None, budget: int | None = None,
                         workers: int = 1) -> int:
    """Exact number of words of size n in the class, by listing them.

    Raises :class:`BudgetExceeded` above ``budget`` (default 8). With
    ``workers > 1`` the sub-streams are counted in separate processes.
    """
    if budget is None:
        budget = DEFAULT_BUDGET
    if n > budget:
        raise BudgetExceeded("enumeration", n, budget)
    stream = DowStream(n, filter)
    if workers <= 1 or n < 2:
        return stream.count()
    jobs = [(n, stream.classes, p.part) for p in stream.parts()]
    with ProcessPoolExecutor(max_workers=min(workers, os.cpu_count() or 1)) as pool:
        return sum(pool.map(_count_part, jobs))


def class_flags(letters: Iterable[int]) -> dict[str, bool]:
    """Membership of one word in each base class."""
    t = tuple(letters)
    strong = not _has_proper_dow_factor(t)
    return {
        "palindrome": _ascending(t) == _ascending(t[::-1]),
        "irreducible": strong or _factor_ends(t)[0] == len(t),
        "strong": strong,
    }
