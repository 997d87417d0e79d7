"""Definition-level brute force, kept free of any dowords internals.

Everything here is slow on purpose: it follows the definitions literally
(multiset permutations, Counter checks on every factor) so it can judge
the fast code paths.
"""

import itertools
from collections import Counter


def relabel(seq):
    names = {}
    return tuple(names.setdefault(a, len(names) + 1) for a in seq)


def is_dow(seq):
    return len(seq) > 0 and all(c == 2 for c in Counter(seq).values())


def all_words(n):
    """Every ascending word of size n, via distinct multiset permutations."""
    base = [a for a in range(1, n + 1) for _ in range(2)]
    return sorted({relabel(p) for p in itertools.permutations(base)})


def palindrome(seq):
    return relabel(seq) == relabel(seq[::-1])


def irreducible(seq):
    # no split into two nonempty double occurrence words
    return not any(is_dow(seq[:k]) and is_dow(seq[k:]) for k in range(2, len(seq), 2))


def strongly_irreducible(seq):
    m = len(seq)
    return not any(is_dow(seq[i:j]) for i in range(m) for j in range(i + 1, m + 1) if j - i < m)


def interleaved_pairs(seq):
    """Letter pairs {a, b} for which a b a b occurs as a subsequence."""
    out = set()
    letters = sorted(set(seq))
    for a, b in itertools.combinations(letters, 2):
        for x, y in ((a, b), (b, a)):
            it = iter(seq)
            if all(any(c == t for c in it) for t in (x, y, x, y)):
                out.add((a, b))
    return out


def connected(vertices, edges):
    vertices = set(vertices)
    if not vertices:
        return True
    seen = {min(vertices)}
    changed = True
    while changed:
        changed = False
        for a, b in edges:
            if (a in seen) != (b in seen):
                seen |= {a, b}
                changed = True
    return seen == vertices


def rho_image(k):
    """Words hit by the pointer map over all signed permutations of k MDSs,
    written out from the four mapping rules."""
    image = set()
    for perm in itertools.permutations(range(1, k + 1)):
        for signs in itertools.product((1, -1), repeat=k):
            seq = []
            for i, s in zip(perm, signs):
                if i == 1:
                    seq.append(1)
                elif i == k:
                    seq.append(k - 1)
                elif s < 0:
                    seq += [i, i - 1]
                else:
                    seq += [i - 1, i]
            image.add(relabel(seq))
    return image


def odd_double_factorial(n):
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out
