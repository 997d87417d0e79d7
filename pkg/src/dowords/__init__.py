"""Double occurrence words: enumeration, classification, counting,
pointer words of scrambled genes, and diagram rendering."""

from .classify import (
    CircleGraph,
    SirDecomposition,
    circle_graph,
    compose_sir,
    decompose_sir,
    find_sir_subword,
    irreducible_factors,
    is_connected,
    is_irreducible,
    is_strongly_irreducible,
)
from .count import (
    CountTable,
    count_all,
    count_arrangements,
    count_diagrams,
    count_irreducible,
    count_irreducible_palindromes,
    count_palindromes,
    count_strongly_irreducible,
    count_strongly_irreducible_palindromes,
)
from .enumeration import DowStream, count_by_enumeration, enumerate_words
from .errors import BudgetExceeded, DowError
from .genome import (
    MicronuclearArrangement,
    enumerate_arrangements,
    format_arrangement,
    is_realizable,
    parse_arrangement,
    rho,
)
from .word import Dow, canonicalize, equivalent, format_word, is_palindrome, parse, reverse

__all__ = [name for name in dir() if not name.startswith("_")]
