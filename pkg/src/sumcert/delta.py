"""Sunflower (Delta-system) extraction.

``extract_delta_system`` follows the recursive shape of the classical
argument: restrict to the most frequent cardinality class, then either
recurse on the members containing some sufficiently frequent element
(re-attaching it to the root) or collect pairwise-disjoint members greedily.
Candidate elements are tried in ascending order and the greedy-disjoint pass
always runs as a fallback, because committing to one frequent element can
dead-end even on families far above the sunflower threshold.
"""

from __future__ import annotations

from collections import Counter
from typing import Hashable, Iterable, Optional, Sequence


class SetFamily:
    """A finite list of pairwise-distinct finite sets over an ordered universe."""

    __slots__ = ("members",)

    def __init__(self, members: Iterable[Iterable[Hashable]]):
        ms = [frozenset(m) for m in members]
        if len(set(ms)) != len(ms):
            raise ValueError("family members must be pairwise distinct sets")
        self.members: tuple[frozenset, ...] = tuple(ms)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def verify_delta_system(members: Sequence[frozenset], root: frozenset) -> bool:
    """True iff every pairwise intersection equals the root exactly."""
    ms = [frozenset(m) for m in members]
    root = frozenset(root)
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            if ms[i] & ms[j] != root:
                return False
    return True


def extract_delta_system(
    family: SetFamily, p: int
) -> Optional[tuple[frozenset, tuple[frozenset, ...]]]:
    """A (root, members) Delta-system of size >= p from the most frequent
    cardinality class, or None if the recursion comes up short.

    For families of n-sets with more than n! * (p-1)**n members this always
    succeeds.  Singleton results canonically carry the empty root.
    """
    if p < 1:
        raise ValueError("target size must be >= 1")
    if not len(family):
        return None
    by_card = Counter(len(m) for m in family)
    best_count = max(by_card.values())
    card = min(c for c, k in by_card.items() if k == best_count)
    members = [m for m in family if len(m) == card]
    result = _extract(members, p)
    if result is None or len(result[1]) < p:
        return None
    root, sets = result
    if len(sets) <= 1:
        root = frozenset()
    return root, sets


def _extract(
    members: list[frozenset], p: int
) -> Optional[tuple[frozenset, tuple[frozenset, ...]]]:
    if not members:
        return None
    if len(members[0]) == 0:
        # only the empty set; a Delta-system of size at most 1
        return frozenset(), (members[0],)

    freq = Counter()
    for m in members:
        freq.update(m)

    # Recurse on each sufficiently frequent element, most frequent first
    # (ties toward the smaller element), until some branch reaches p.
    candidates = sorted(
        (r for r, k in freq.items() if k >= p), key=lambda r: (-freq[r], r)
    )
    for r in candidates:
        sub = [m - {r} for m in members if r in m]
        got = _extract(sub, p)
        if got is not None and len(got[1]) >= p:
            sub_root, sub_sets = got
            return sub_root | {r}, tuple(s | {r} for s in sub_sets)

    # Otherwise collect pairwise-disjoint members in input order.
    chosen: list[frozenset] = []
    used: set = set()
    for m in members:
        if used.isdisjoint(m):
            chosen.append(m)
            used.update(m)
    return frozenset(), tuple(chosen)


def parse_set_family(text: str) -> SetFamily:
    """One member per line, elements as whitespace-separated tokens.

    Tokens parse as integers when every token in the file is an integer,
    otherwise they stay strings (keeping the universe totally ordered).
    """
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise ValueError("empty family")
    try:
        rows = [[int(tok) for tok in row] for row in rows]
    except ValueError:
        pass
    return SetFamily(rows)
