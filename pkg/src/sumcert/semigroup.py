"""Finite Cayley-table semigroups, plus the additive positive naturals.

Associativity is verified at construction with Light's test: it suffices to
check a(gb) == (ag)b with the middle element g ranging over a generating
set, and a greedy closure pass finds a small generating set first.  For the
structured tables used here (cyclic groups, Boolean groups) that makes
validation of tables with a few hundred thousand entries effectively free;
the worst case (every element a generator) degenerates to the cubic check.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np


class NotAssociativeError(ValueError):
    def __init__(self, triple: tuple[int, int, int]):
        a, b, c = triple
        super().__init__(f"table is not associative at ({a},{b},{c})")
        self.triple = triple


class FinSemigroup:
    """A finite semigroup given by its Cayley table (indices 0..n-1)."""

    __slots__ = ("n", "table", "identity")

    def __init__(self, table: Sequence[Sequence[int]] | np.ndarray):
        t = np.asarray(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise ValueError("Cayley table must be square")
        n = t.shape[0]
        if n == 0:
            raise ValueError("empty carrier")
        if t.min() < 0 or t.max() >= n:
            raise ValueError("table entries must be element indices")
        bad = _associativity_violation(t)
        if bad is not None:
            raise NotAssociativeError(bad)
        self.n: int = int(n)
        self.table: np.ndarray = t
        self.table.setflags(write=False)
        self.identity: Optional[int] = _find_identity(t)

    # -- basic queries --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def elements(self) -> range:
        return range(self.n)

    def _check_index(self, *indices: int) -> None:
        for i in indices:
            if not 0 <= i < self.n:
                raise IndexError(f"element index {i} out of range 0..{self.n - 1}")

    def left_solution_count(self, e: int, f: int) -> int:
        """|{g : e + g = f}| by a direct row scan."""
        self._check_index(e, f)
        return int(np.count_nonzero(self.table[e] == f))

    def cancellativity_bound(self) -> int:
        """The least L such that every equation e + g = f has <= L solutions."""
        best = 0
        for e in range(self.n):
            counts = np.bincount(self.table[e], minlength=self.n)
            best = max(best, int(counts.max()))
        return best

    def is_weakly_left_cancellative(self) -> bool:
        """Finitely many solutions to every e + g = f; trivially true here."""
        return True

    def monogenic(self, g: int) -> list[int]:
        """The closure {g, g+g, g+g+g, ...}, in order of first appearance."""
        self._check_index(g)
        seen = [g]
        seen_set = {g}
        cur = g
        while True:
            cur = self.add(cur, g)
            if cur in seen_set:
                return seen
            seen.append(cur)
            seen_set.add(cur)

    # -- stock constructions ---------------------------------------------

    @classmethod
    def cyclic(cls, n: int) -> "FinSemigroup":
        idx = np.arange(n, dtype=np.int64)
        return cls((idx[:, None] + idx[None, :]) % n)

    @classmethod
    def boolean_group(cls, bits: int) -> "FinSemigroup":
        """The elementary abelian 2-group on 2**bits elements (XOR of indices)."""
        n = 1 << bits
        idx = np.arange(n, dtype=np.int64)
        return cls(idx[:, None] ^ idx[None, :])

    @classmethod
    def left_zero(cls, n: int) -> "FinSemigroup":
        """x + y = x for all x, y."""
        return cls(np.repeat(np.arange(n, dtype=np.int64)[:, None], n, axis=1))

    @classmethod
    def direct_product(cls, a: "FinSemigroup", b: "FinSemigroup") -> "FinSemigroup":
        """Componentwise product; element (i, j) has index i * b.n + j."""
        ta = a.table[:, None, :, None]
        tb = b.table[None, :, None, :]
        prod = ta * b.n + tb  # shape (a.n, b.n, a.n, b.n), (i,j)+(k,l) at [i,j,k,l]
        n = a.n * b.n
        return cls(prod.reshape(n, n))


def _find_identity(t: np.ndarray) -> Optional[int]:
    n = t.shape[0]
    idx = np.arange(n)
    for e in range(n):
        if np.array_equal(t[e], idx) and np.array_equal(t[:, e], idx):
            return e
    return None


def _generating_set(t: np.ndarray) -> list[int]:
    n = t.shape[0]
    gens: list[int] = []
    closed: set[int] = set()
    for x in range(n):
        if x in closed:
            continue
        gens.append(x)
        # close {gens} under the (possibly non-associative) product
        frontier = list(set(gens) - closed) or [x]
        closed |= set(gens)
        while frontier:
            nxt = set()
            members = np.fromiter(closed, dtype=np.int64)
            for y in frontier:
                nxt.update(int(z) for z in t[y, members])
                nxt.update(int(z) for z in t[members, y])
            frontier = [z for z in nxt if z not in closed]
            closed.update(frontier)
    return gens


def _associativity_violation(t: np.ndarray) -> Optional[tuple[int, int, int]]:
    """Light's associativity test; returns a violating triple or None."""
    for g in _generating_set(t):
        lhs = t[t[:, g], :]  # (a+g)+b
        rhs = t[:, t[g, :]]  # a+(g+b)
        if not np.array_equal(lhs, rhs):
            a, b = np.argwhere(lhs != rhs)[0]
            return (int(a), int(g), int(b))
    return None


class NatCarrier:
    """The positive integers under addition, used by the greedy constructions.

    Solution counts are closed-form: e + g = f has exactly one positive
    solution when f > e and none otherwise (one more at f = e if an identity
    is adjoined, but 0 itself is not a carrier element).
    """

    identity = None

    @staticmethod
    def add(a: int, b: int) -> int:
        return a + b

    @staticmethod
    def left_solution_count(e: int, f: int) -> int:
        return 1 if f > e else 0

    @staticmethod
    def is_weakly_left_cancellative() -> bool:
        return True

    @staticmethod
    def cancellativity_bound() -> int:
        return 1

    @staticmethod
    def pool() -> Iterable[int]:
        x = 1
        while True:
            yield x
            x += 1


def parse_cayley_table(text: str) -> FinSemigroup:
    """Plain text Cayley table: first line n, then n rows of n indices."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty table file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ValueError(f"first line must be the order, got {lines[0]!r}") from exc
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} rows after the order line, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        row = [int(x) for x in ln.split()]
        if len(row) != n:
            raise ValueError(f"row has {len(row)} entries, expected {n}")
        rows.append(row)
    return FinSemigroup(rows)


def format_cayley_table(g: FinSemigroup) -> str:
    lines = [str(g.n)]
    for row in g.table:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"
