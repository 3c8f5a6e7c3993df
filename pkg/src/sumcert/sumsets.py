"""Finite-sum and finite-union enumeration, pairwise sumsets, monochromaticity.

``fs_enumerate`` keeps the (index set, sum) pairing rather than returning a
bare set of sums: the negative results quantify over formal sums, so value
collisions between distinct index sets must stay visible.  Sums are always
taken in ascending index order, which also makes the enumeration correct on
non-commutative carriers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, TypeVar

from .coloring import ColoringSpec, ColorValue, evaluate

T = TypeVar("T")


@dataclass(frozen=True)
class BlockSeq:
    """A sequence of finite nonempty sets with max(b[i]) < min(b[j]) for i < j."""

    blocks: tuple[frozenset[int], ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        bs = tuple(frozenset(b) for b in blocks)
        for b in bs:
            if not b:
                raise ValueError("blocks must be nonempty")
            if any(not isinstance(x, int) or x < 0 for x in b):
                raise ValueError("block elements must be natural numbers")
        for left, right in zip(bs, bs[1:]):
            if max(left) >= min(right):
                raise ValueError(
                    f"not a block sequence: max{sorted(left)} >= min{sorted(right)}"
                )
        object.__setattr__(self, "blocks", bs)

    def __len__(self) -> int:
        return len(self.blocks)


def fs_enumerate(
    xs: Sequence[T], add: Callable[[T, T], T]
) -> list[tuple[frozenset[int], T]]:
    """All finite sums of subsequences of xs, one per nonempty index set.

    Returns (index set, sum) pairs ordered by subset rank; each sum is taken
    over its positions in ascending order.
    """
    if not xs:
        raise ValueError("fs_enumerate needs a nonempty sequence")
    n = len(xs)
    out = []
    for mask in range(1, 1 << n):
        indices = [i for i in range(n) if (mask >> i) & 1]
        total = xs[indices[0]]
        for i in indices[1:]:
            total = add(total, xs[i])
        out.append((frozenset(indices), total))
    return out


def fs_values(xs: Sequence[T], add: Callable[[T, T], T]) -> set[T]:
    """The set of finite sums of xs (collapsing index-set multiplicity)."""
    return {s for _, s in fs_enumerate(xs, add)}


def fu_enumerate(b: BlockSeq) -> set[frozenset[int]]:
    """All unions of nonempty subfamilies of a block sequence.

    Blockness makes the 2**len(b) - 1 unions pairwise distinct.
    """
    blocks = b.blocks
    out = set()
    for mask in range(1, 1 << len(blocks)):
        u: frozenset[int] = frozenset()
        for i in range(len(blocks)):
            if (mask >> i) & 1:
                u |= blocks[i]
        out.add(u)
    return out


def pairwise_sumset(m: Iterable[T], add: Callable[[T, T], T]) -> set[T]:
    """{a + b : a, b in m}, including the doubles a + a."""
    elems = list(m)
    out = set()
    for i, a in enumerate(elems):
        for b in elems[i:]:
            out.add(add(a, b))
    return out


def is_monochromatic(
    elements: Iterable, spec: ColoringSpec
) -> Optional[ColorValue]:
    """The common colour of the collection under spec, or None if mixed."""
    common: Optional[ColorValue] = None
    seen_any = False
    for x in elements:
        c = evaluate(spec, x)
        if not seen_any:
            common, seen_any = c, True
        elif c != common:
            return None
    if not seen_any:
        raise ValueError("empty collection has no colour")
    return common
