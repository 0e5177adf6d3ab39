"""Abelian regularities of strings, accelerated by run-length encoding.

Computes all Abelian squares and all regular Abelian periods of one string,
and the longest common Abelian factors of two strings, each via sliding
windows that jump between run boundaries instead of advancing one position
at a time.  Brute-force oracles for all three live in ``oracles``.
"""

from .bench import WorkCounters, gen, run_instrumented
from .lcaf import (Constraint, LcafMatch, common_factors_of_length,
                   expand_matches, find_lcaf)
from .oracles import naive_lcaf, naive_periods, naive_squares
from .periods import (BlockDecomposition, RegularPeriod, decompose,
                      find_regular_periods, is_regular_period)
from .rle import (AlphabetMap, DiffTracker, ParikhVector, RleString, decode,
                  encode, from_factors, parikh_of_range, succ)
from .squares import SquareRun, find_all_squares, find_squares_of_length

__version__ = "0.1.0"

__all__ = [
    "AlphabetMap", "BlockDecomposition", "Constraint", "DiffTracker",
    "LcafMatch", "ParikhVector", "RegularPeriod", "RleString", "SquareRun",
    "WorkCounters", "common_factors_of_length", "decode", "decompose",
    "encode", "expand_matches", "find_all_squares", "find_lcaf",
    "find_regular_periods", "find_squares_of_length", "from_factors", "gen",
    "is_regular_period", "naive_lcaf", "naive_periods", "naive_squares",
    "parikh_of_range", "run_instrumented", "succ",
]
