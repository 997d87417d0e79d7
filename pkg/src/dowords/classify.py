"""Reducibility classes, circle graphs and the decomposition of
strongly irreducible words.

Positions returned by :func:`find_sir_subword` are 1-based and inclusive,
matching how words are usually written down; everything else is 0-based.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DowError
from .word import Dow, _ascending, _is_ascending, canonicalize


def _require_nonempty(w: Dow):
    if not w.letters:
        raise DowError("operation is undefined on the empty word")


def _factor_ends(letters) -> list[int]:
    # exclusive end of each irreducible factor
    ends = []
    open_ = set()
    for i, a in enumerate(letters):
        if a in open_:
            open_.remove(a)
            if not open_:
                ends.append(i + 1)
        else:
            open_.add(a)
    return ends


def irreducible_factors(w: Dow) -> list[Dow]:
    """Split ``w`` into its irreducible factors, each relabeled to ascending
    order.  A factor ends wherever every letter read so far has been closed.
    """
    _require_nonempty(w)
    out = []
    start = 0
    for end in _factor_ends(w.letters):
        out.append(Dow._trusted(_ascending(w.letters[start:end])))
        start = end
    return out


def is_irreducible(w: Dow) -> bool:
    _require_nonempty(w)
    return _factor_ends(w.letters)[0] == len(w.letters)


def _dow_factors(letters, lo=0, hi=None):
    """Yield ``(i, j)`` for every nonempty factor ``letters[i:j]`` inside
    ``[lo, hi)`` that is itself a double occurrence word, ordered by start
    then length."""
    if hi is None:
        hi = len(letters)
    for i in range(lo, hi):
        seen = set()
        for j in range(i, hi):
            a = letters[j]
            if a in seen:
                seen.remove(a)
                if not seen:
                    yield i, j + 1
            else:
                seen.add(a)


def _has_proper_dow_factor(letters) -> bool:
    n2 = len(letters)
    # any pair of adjacent equal letters is already a proper factor
    if n2 > 2 and any(letters[i] == letters[i + 1] for i in range(n2 - 1)):
        return True
    for i, j in _dow_factors(letters):
        if j - i < n2:
            return True
    return False


def is_strongly_irreducible(w: Dow) -> bool:
    """No proper contiguous factor of ``w`` is a double occurrence word."""
    _require_nonempty(w)
    return not _has_proper_dow_factor(w.letters)


@dataclass(frozen=True)
class CircleGraph:
    """Letters as vertices, interleaved letter pairs as edges ``(a, b)``
    with ``a < b``."""

    vertices: frozenset
    edges: frozenset

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def neighbours(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


def _positions(letters) -> dict[int, tuple[int, int]]:
    pos: dict[int, list[int]] = {}
    for i, a in enumerate(letters):
        pos.setdefault(a, []).append(i)
    return {a: (p[0], p[1]) for a, p in pos.items()}


def circle_graph(w: Dow) -> CircleGraph:
    pos = _positions(w.letters)
    letters = sorted(pos)
    edges = set()
    for x, a in enumerate(letters):
        a1, a2 = pos[a]
        for b in letters[x + 1:]:
            b1, b2 = pos[b]
            if a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2:
                edges.add((a, b))
    return CircleGraph(frozenset(letters), frozenset(edges))


def is_connected(g: CircleGraph) -> bool:
    if not g.vertices:
        return True
    adj = g.neighbours()
    start = min(g.vertices)
    seen = {start}
    queue = deque([start])
    while queue:
        for b in adj[queue.popleft()]:
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return len(seen) == len(g.vertices)


def find_sir_subword(w: Dow) -> tuple[int, int]:
    """Bounds ``(start, end)``, 1-based inclusive, of a strongly irreducible
    factor of ``w``.

    Starting from the whole word, repeatedly descend into a proper factor
    that is a double occurrence word (leftmost start, then shortest) until
    none is left.
    """
    _require_nonempty(w)
    lo, hi = 0, len(w.letters)
    while True:
        for i, j in _dow_factors(w.letters, lo, hi):
            if j - i < hi - lo:
                lo, hi = i, j
                break
        else:
            return lo + 1, hi


@dataclass(frozen=True)
class SirDecomposition:
    """``w = 1 u1 v1 1 v2 u2`` with ``u = 1 u1 1 u2``, ``v = v1 v2`` and
    ``split = len(v1)``."""

    u: Dow
    v: Dow
    split: int


def decompose_sir(w: Dow) -> SirDecomposition:
    """Inverse of :func:`compose_sir`.

    With both 1s removed from ``w = 1 p1 1 p2``, the shortest double
    occurrence factor of ``p1 p2`` that crosses the p1/p2 seam (leftmost on
    ties) is ``v``; what surrounds it, together with the 1s, is ``u``.
    """
    _require_nonempty(w)
    letters = w.letters
    if not _is_ascending(letters):
        raise DowError("decompose_sir needs a word in ascending order")
    if w.size < 2:
        raise DowError("a word of size 1 has no decomposition")
    if _has_proper_dow_factor(letters):
        raise DowError("word is not strongly irreducible")
    q = letters.index(1, 1)
    p1, p2 = letters[1:q], letters[q + 1:]
    p = p1 + p2
    seam = len(p1)
    best = None
    for i, j in _dow_factors(p, 0, len(p)):
        if i < seam < j and (best is None or j - i < best[1] - best[0]):
            best = (i, j)
    if best is None:
        # unreachable for strongly irreducible input
        raise DowError("no double occurrence factor crosses the seam")
    i, j = best
    u = (1,) + p[:i] + (1,) + p[j:]
    return SirDecomposition(
        Dow._trusted(_ascending(u)),
        Dow._trusted(_ascending(p[i:j])),
        seam - i,
    )


def compose_sir(u: Dow, v: Dow, split: int) -> Dow:
    """Build ``1 u1 v1 1 v2 u2`` from ``u = 1 u1 1 u2`` and ``v`` cut after
    ``split`` letters, then relabel to ascending order."""
    if not u.letters or not v.letters:
        raise DowError("u and v must be nonempty")
    if not 1 <= split <= len(v.letters) - 1:
        raise DowError(f"split must lie in 1..{len(v.letters) - 1}, got {split}")
    u = canonicalize(u)
    q = u.letters.index(1, 1)
    u1, u2 = u.letters[1:q], u.letters[q + 1:]
    shift = u.size
    vv = tuple(a + shift for a in canonicalize(v).letters)
    word = (1,) + u1 + vv[:split] + (1,) + vv[split:] + u2
    return Dow._trusted(_ascending(word))
