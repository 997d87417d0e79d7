"""Exact counting sequences for double occurrence words.

====  =========================================  ===================
id    counts words of size n that are ...        method
====  =========================================  ===================
K     all                                        (2n-1)!!
L     palindromes                                closed form or recurrence
I     irreducible                                recurrence on K
J     irreducible palindromes                    recurrence on L
S     strongly irreducible                       quadratic recurrence
T     strongly irreducible palindromes           quadratic recurrence on S
A     micronuclear arrangements of n MDSs         2^n n!
====  =========================================  ===================

All values are Python ints. Recurrences keep a memoized prefix per
sequence, guarded by a lock so several threads may share it.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import factorial


def _check_n(n: int, allow_zero=False):
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"size must be a non-negative integer, got {n!r}")
    if n == 0 and not allow_zero:
        raise ValueError("size 0 count is not defined for this class")


class _Memo:
    """Prefix cache for a sequence defined by ``step(values, n)``."""

    def __init__(self, seed, step):
        self.values = list(seed)
        self.step = step
        self.lock = threading.RLock()

    def __call__(self, n):
        values = self.values
        if n < len(values):
            return values[n]
        with self.lock:
            while len(values) <= n:
                values.append(self.step(values, len(values)))
            return values[n]


_K = _Memo([1], lambda v, n: v[n - 1] * (2 * n - 1))


def _step_L(v, n):
    return v[n - 1] + (2 * n - 2) * v[n - 2]


# L0 = 1 makes the recurrence give L2 = 3 from L1 = 1
_L = _Memo([1, 1, 3], _step_L)


def _step_I(v, n):
    return _K(n) - sum(v[n - k] * _K(k) for k in range(1, n))


_I = _Memo([None, 1], _step_I)


def _step_J(v, n):
    return _L(n) - sum(_K(k) * v[n - 2 * k] for k in range(1, n // 2 + 1))


# J0 = 1 is the seed that reproduces J2 = 2
_J = _Memo([1, 1], _step_J)


def _step_S(v, n):
    return (n - 1) * sum(v[k] * v[n - k] for k in range(1, n))


_S = _Memo([None, 1], _step_S)


def _step_T(v, n):
    return (sum(v[i] * v[n - i] for i in range(1, n - 1))
            + sum((2 * n - 4 * i - 1) * _S(i) * v[n - 2 * i]
                  for i in range(1, n // 2 + 1)))


# T0 = -1 is a formal seed only and never returned
_T = _Memo([-1, 1], _step_T)


def count_all(n: int) -> int:
    """K(n) = (2n-1)!!; the empty word makes K(0) = 1."""
    _check_n(n, allow_zero=True)
    return _K(n)


def palindromes_closed_form(n: int) -> int:
    return sum(factorial(n) // (factorial(n - 2 * k) * factorial(k))
               for k in range(n // 2 + 1))


def count_palindromes(n: int, method: str = "recurrence") -> int:
    """L(n), either from ``L(n) = L(n-1) + (2n-2) L(n-2)`` or from the sum
    over k of ``n! / ((n-2k)! k!)``."""
    _check_n(n)
    if method == "closed":
        return palindromes_closed_form(n)
    if method == "recurrence":
        return _L(n)
    raise ValueError(f"unknown method {method!r}")


def count_irreducible(n: int) -> int:
    _check_n(n)
    return _I(n)


def count_irreducible_palindromes(n: int) -> int:
    _check_n(n)
    return _J(n)


def count_strongly_irreducible(n: int) -> int:
    """S(n) = (n-1) * sum_{k=1}^{n-1} S(k) S(n-k), S(1) = 1."""
    _check_n(n)
    return _S(n)


def count_strongly_irreducible_palindromes(n: int) -> int:
    _check_n(n)
    return _T(n)


def count_arrangements(n: int) -> int:
    """A(n) = 2^n n! = (2n)!!"""
    _check_n(n)
    return 2 ** n * factorial(n)


_PAIRS = {
    "all": (count_all, count_palindromes),
    "irreducible": (count_irreducible, count_irreducible_palindromes),
    "strong": (count_strongly_irreducible, count_strongly_irreducible_palindromes),
}
_PAIRS["strongly-irreducible"] = _PAIRS["strong"]


def count_diagrams(n: int, cls: str = "all") -> int:
    """Diagrams up to reversal: (words + palindromes) / 2 within a class."""
    _check_n(n)
    try:
        words, pals = _PAIRS[cls]
    except KeyError:
        raise ValueError(f"unknown class {cls!r}") from None
    total = words(n) + pals(n)
    if total % 2:
        raise ArithmeticError(f"odd word+palindrome total {total} for {cls} at n={n}")
    return total // 2


@dataclass
class CountTable:
    sequence_id: str
    values: dict = field(default_factory=dict)
    method: str = "recurrence"

    @property
    def indices(self):
        return sorted(self.values)


def _diagrams(cls):
    return lambda n: count_diagrams(n, cls)


SEQUENCES = {
    "K": (count_all, "closed-form"),
    "L": (count_palindromes, "recurrence"),
    "I": (count_irreducible, "recurrence"),
    "J": (count_irreducible_palindromes, "recurrence"),
    "S": (count_strongly_irreducible, "recurrence"),
    "T": (count_strongly_irreducible_palindromes, "recurrence"),
    "A": (count_arrangements, "closed-form"),
    "diagrams-all": (_diagrams("all"), "closed-form"),
    "diagrams-irr": (_diagrams("irreducible"), "recurrence"),
    "diagrams-sir": (_diagrams("strong"), "recurrence"),
}


def table(sequence_id: str, n_max: int, n_min: int = 1, method: str | None = None) -> CountTable:
    """Values of one sequence for ``n_min <= n <= n_max``.

    ``method="closed"`` is honoured for L; ``method="enumeration"`` counts
    the matching class of words exhaustively (sequences K, L, I, J, S, T).
    """
    try:
        fn, default = SEQUENCES[sequence_id]
    except KeyError:
        raise ValueError(f"unknown sequence {sequence_id!r}") from None
    rng = range(n_min, n_max + 1)
    if method == "enumeration":
        from .enumeration import count_by_enumeration
        cls = ENUMERATION_FILTER[sequence_id]
        return CountTable(sequence_id, {n: count_by_enumeration(n, cls) for n in rng},
                          "enumeration")
    if method == "closed" and sequence_id == "L":
        return CountTable("L", {n: palindromes_closed_form(n) for n in rng}, "closed-form")
    return CountTable(sequence_id, {n: fn(n) for n in rng}, default)


ENUMERATION_FILTER = {
    "K": "all",
    "L": "palindrome",
    "I": "irreducible",
    "J": "irreducible-palindrome",
    "S": "strong",
    "T": "strong-palindrome",
}
