"""The double occurrence word value type and its text form.

A word of size n has length 2n and uses every letter exactly twice.
Letters are positive integers. A word is in ascending order when each
new letter, read left to right, is one more than the largest seen so far.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from .errors import DowError

_SEPARATORS = re.compile(r"[\s,]+")


def _ascending(letters) -> tuple[int, ...]:
    labels: dict[int, int] = {}
    out = []
    for a in letters:
        b = labels.get(a)
        if b is None:
            b = labels[a] = len(labels) + 1
        out.append(b)
    return tuple(out)


def _is_ascending(letters) -> bool:
    top = 0
    for a in letters:
        if a > top + 1:
            return False
        if a == top + 1:
            top = a
    return True


@dataclass(frozen=True, slots=True)
class Dow:
    """Immutable double occurrence word."""

    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        for a in letters:
            if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                raise DowError(f"letter ids must be positive integers, got {a!r}")
        bad = sorted(a for a, c in Counter(letters).items() if c != 2)
        if bad:
            raise DowError(f"letters {bad} do not occur exactly twice")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def _trusted(cls, letters: tuple[int, ...]) -> Dow:
        # skips validation; only for generators that build valid words
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        return w

    @property
    def size(self) -> int:
        return len(self.letters) // 2

    @property
    def canonical(self) -> bool:
        return _is_ascending(self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self):
        return format_word(self)


EMPTY = Dow(())


def parse(text: str) -> Dow:
    """Read a word from text.

    Accepts whitespace- or comma-separated ids (``"1 10 1 10"``) or a bare
    digit string (``"121323"``) in which every character is one letter.
    The letters are kept as written, not relabeled.
    """
    text = text.strip()
    if not text:
        return EMPTY
    tokens = [t for t in _SEPARATORS.split(text) if t]
    if len(tokens) == 1:
        tokens = list(tokens[0])
    letters = []
    for t in tokens:
        if not t.isdigit() or not t.isascii():
            raise DowError(f"malformed letter token {t!r}")
        letters.append(int(t))
    return Dow(tuple(letters))


def format_word(w: Dow, style: str = "auto") -> str:
    """Text form of ``w``.

    ``style`` is ``"compact"`` (digits run together, ids must be at most 9),
    ``"separated"`` (single spaces) or ``"auto"`` (compact when possible).
    """
    if style == "auto":
        style = "compact" if all(a <= 9 for a in w.letters) else "separated"
    if style == "compact":
        if any(a > 9 for a in w.letters):
            raise DowError("compact format needs every letter id <= 9")
        return "".join(map(str, w.letters))
    if style == "separated":
        return " ".join(map(str, w.letters))
    raise ValueError(f"unknown style {style!r}")


def canonicalize(w: Dow) -> Dow:
    """Relabel by rank of first occurrence."""
    if _is_ascending(w.letters):
        return w
    return Dow._trusted(_ascending(w.letters))


def reverse(w: Dow) -> Dow:
    return Dow._trusted(w.letters[::-1])


def equivalent(a: Dow, b: Dow) -> bool:
    return len(a) == len(b) and _ascending(a.letters) == _ascending(b.letters)


def is_palindrome(w: Dow) -> bool:
    """True when ``w`` equals its reverse up to relabeling."""
    return _ascending(w.letters) == _ascending(w.letters[::-1])
