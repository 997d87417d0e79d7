from hypothesis import strategies as st

from dowords.word import Dow


@st.composite
def dows(draw, min_size=0, max_size=6, relabel=True):
    """Random words; with ``relabel`` the letter ids are arbitrary rather
    than ascending."""
    n = draw(st.integers(min_size, max_size))
    base = [a for a in range(1, n + 1) for _ in range(2)]
    letters = draw(st.permutations(base))
    if relabel and n:
        ids = draw(st.lists(st.integers(1, 50), min_size=n, max_size=n, unique=True))
        letters = [ids[a - 1] for a in letters]
    return Dow(tuple(letters))
