"""Scrambled genes as signed permutations and their pointer words.

An arrangement of k MDSs is written ``M3 M4 -M2 M1``; a leading ``-``
marks an inverted segment (the overbar in the usual notation). Reading
the pointers that flank each segment, left to right, gives a double
occurrence word of size k - 1.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import BudgetExceeded, DowError
from .word import Dow, _ascending, canonicalize

ARRANGEMENT_BUDGET = 8
REALIZABLE_BUDGET = 7

_TOKEN = re.compile(r"(-?)M(\d+)")


@dataclass(frozen=True)
class MicronuclearArrangement:
    """Sequence of ``(mds_index, sign)`` pairs with sign in ``{+1, -1}``."""

    entries: tuple

    def __post_init__(self):
        entries = tuple((int(i), int(s)) for i, s in self.entries)
        idx = sorted(i for i, _ in entries)
        if idx != list(range(1, len(entries) + 1)):
            raise DowError(f"MDS indices {[i for i, _ in entries]} are not a permutation of 1..{len(entries)}")
        if any(s not in (1, -1) for _, s in entries):
            raise DowError("signs must be +1 or -1")
        object.__setattr__(self, "entries", entries)

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def permutation(self) -> tuple:
        return tuple(i for i, _ in self.entries)

    @property
    def signs(self) -> tuple:
        return tuple(s for _, s in self.entries)

    def __str__(self):
        return format_arrangement(self)


def parse_arrangement(text: str) -> MicronuclearArrangement:
    entries = []
    for tok in text.split():
        m = _TOKEN.fullmatch(tok)
        if not m:
            raise DowError(f"malformed MDS token {tok!r}")
        entries.append((int(m.group(2)), -1 if m.group(1) else 1))
    return MicronuclearArrangement(tuple(entries))


def format_arrangement(a: MicronuclearArrangement) -> str:
    return " ".join(("-" if s < 0 else "") + f"M{i}" for i, s in a.entries)


def _pointers(i: int, sign: int, k: int) -> tuple:
    if i == 1:
        return (1,)
    if i == k:
        return (k - 1,)
    return (i, i - 1) if sign < 0 else (i - 1, i)


def pointer_sequence(a: MicronuclearArrangement) -> tuple:
    """The raw pointer labels, before relabeling to ascending order."""
    if a.k <= 1:
        raise DowError("an arrangement needs at least two MDSs to carry pointers")
    out = ()
    for i, s in a.entries:
        out += _pointers(i, s, a.k)
    return out


def rho(a: MicronuclearArrangement) -> Dow:
    """Pointer word of ``a`` in ascending order."""
    return Dow._trusted(_ascending(pointer_sequence(a)))


def enumerate_arrangements(k: int, budget: int | None = None) -> Iterator[MicronuclearArrangement]:
    """All 2^k k! arrangements: permutations in lexicographic order, and
    for each one the sign vectors in binary order (``+`` before ``-``,
    leftmost entry most significant)."""
    if budget is None:
        budget = ARRANGEMENT_BUDGET
    if k < 1:
        raise ValueError("need at least one MDS")
    if k > budget:
        raise BudgetExceeded("arrangement enumeration", k, budget)
    for perm in itertools.permutations(range(1, k + 1)):
        for signs in itertools.product((1, -1), repeat=k):
            yield MicronuclearArrangement(tuple(zip(perm, signs)))


def _sign_key(signs):
    return tuple(0 if s > 0 else 1 for s in signs)


def _search(target: tuple, k: int):
    """First arrangement in enumeration order whose pointer word relabels to
    ``target``, or None.

    Walks permutations depth first in lexicographic order. For each prefix
    it carries every sign choice so far that is still consistent with the
    target, as a partial bijection between raw pointers and target letters,
    so hopeless prefixes are cut early without changing which witness is
    found first.
    """
    length = len(target)

    def extend(state, labels):
        pos, fwd, back = state
        fwd, back = dict(fwd), dict(back)
        for p in labels:
            if pos >= length:
                return None
            t = target[pos]
            if fwd.get(p, t) != t or back.get(t, p) != p:
                return None
            fwd[p] = t
            back[t] = p
            pos += 1
        return pos, fwd, back

    used = [False] * (k + 1)
    perm = []

    def walk(states):
        # states: list of (signs, (pos, fwd, back))
        if len(perm) == k:
            done = [signs for signs, (pos, _, _) in states if pos == length]
            return (tuple(perm), min(done, key=_sign_key)) if done else None
        for i in range(1, k + 1):
            if used[i]:
                continue
            nxt = []
            for signs, st in states:
                options = (1,) if i in (1, k) else (1, -1)
                for s in options:
                    new = extend(st, _pointers(i, s, k))
                    if new is not None:
                        nxt.append((signs + (s,), new))
            if not nxt:
                continue
            used[i] = True
            perm.append(i)
            found = walk(nxt)
            perm.pop()
            used[i] = False
            if found is not None:
                return found
        return None

    return walk([((), (0, {}, {}))])


@lru_cache(maxsize=4096)
def _witness(target: tuple):
    k = len(target) // 2 + 1
    return _search(target, k)


def is_realizable(w: Dow, budget: int | None = None):
    """Whether some arrangement of ``size + 1`` MDSs maps onto ``w``.

    Returns ``(True, witness)`` with the first witness in the order of
    :func:`enumerate_arrangements`, or ``(False, None)``.
    """
    if budget is None:
        budget = REALIZABLE_BUDGET
    n = w.size
    if n < 1:
        raise DowError("realizability needs a nonempty word")
    if n > budget:
        raise BudgetExceeded("realizability", n, budget)
    found = _witness(canonicalize(w).letters)
    if found is None:
        return False, None
    perm, signs = found
    return True, MicronuclearArrangement(tuple(zip(perm, signs)))
