"""Canonical finite grids of rationals and vectors.

Claims about all of Q or about a whole vector space are checked exhaustively
on these grids, so the enumeration order is part of the contract: searches
report the first hit in grid order, and certificates must not depend on how
the work was split across workers.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .exact import QVec, Rat


def rational_grid(max_den: int, max_val: int) -> list[Rat]:
    """All rationals with denominator <= max_den and |value| <= max_val.

    Lowest-terms duplicates collapse; the result is ascending and includes 0.
    """
    if max_den < 1 or max_val < 1:
        raise ValueError("grid bounds must be positive")
    vals = set()
    for q in range(1, max_den + 1):
        for p in range(-max_val * q, max_val * q + 1):
            vals.add(Fraction(p, q))
    return sorted(vals)


def vector_grid(dim: int, coef_bound: int) -> list[QVec]:
    """All vectors on basis indices 0..dim-1 with integer coefficients in
    [-coef_bound, coef_bound], in lexicographic coefficient order."""
    if dim < 1 or coef_bound < 0:
        raise ValueError("dimension must be >= 1 and bound >= 0")
    rng = range(-coef_bound, coef_bound + 1)
    return [QVec(enumerate(coeffs)) for coeffs in product(rng, repeat=dim)]
