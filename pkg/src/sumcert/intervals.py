"""Exact interval sets over the rationals.

An ``IntervalSet`` is a finite union of disjoint intervals with rational
endpoints, each endpoint open or closed, minus a finite set of excluded
interior points.  The text form is ``(a,b) ∪ [c,d) ∖ {p,q}`` (ASCII ``U``
and ``\\`` are accepted on input).

Normalization makes the representation canonical: intervals are sorted,
merged when they overlap or touch, an exclusion sitting exactly on a closed
endpoint reopens that endpoint, and exclusions outside the union vanish.
All arithmetic is exact; membership answers are never approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .exact import Rat, RatLike, format_rat, parse_rat


@dataclass(frozen=True)
class Interval:
    lo: Rat
    lo_closed: bool
    hi: Rat
    hi_closed: bool

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval bounds {self.lo} > {self.hi}")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise ValueError("degenerate interval must be closed on both sides")

    def contains(self, x: Rat) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{format_rat(self.lo)},{format_rat(self.hi)}{right}"


class IntervalSet:
    __slots__ = ("intervals", "excluded")

    def __init__(
        self,
        intervals: Iterable[Interval | tuple],
        excluded: Iterable[RatLike] = (),
    ):
        ivs = [iv if isinstance(iv, Interval) else Interval(*iv) for iv in intervals]
        ivs.sort(key=lambda iv: (iv.lo, not iv.lo_closed))
        merged: list[Interval] = []
        for iv in ivs:
            if merged and _touches(merged[-1], iv):
                merged[-1] = _merge(merged[-1], iv)
            else:
                merged.append(iv)
        excl = sorted({Fraction(x) for x in excluded})

        # An exclusion at a closed endpoint reopens the endpoint; exclusions
        # outside the union are dropped; fully excluded singletons vanish.
        out: list[Interval] = []
        kept: list[Rat] = []
        pending = excl
        for iv in merged:
            for x in pending:
                if not iv.contains(x):
                    continue
                if iv.lo == iv.hi:
                    iv = None
                    break
                if x == iv.lo:
                    iv = Interval(iv.lo, False, iv.hi, iv.hi_closed)
                elif x == iv.hi:
                    iv = Interval(iv.lo, iv.lo_closed, iv.hi, False)
                else:
                    kept.append(x)
            if iv is not None:
                out.append(iv)
        self.intervals: tuple[Interval, ...] = tuple(out)
        self.excluded: tuple[Rat, ...] = tuple(sorted(kept))

    # -- queries --------------------------------------------------------

    def contains(self, x: RatLike) -> bool:
        x = Fraction(x)
        if x in self.excluded:
            return False
        return any(iv.contains(x) for iv in self.intervals)

    def is_empty(self) -> bool:
        return not self.intervals

    def open_part(self) -> list[tuple[Rat, Rat]]:
        """The open interiors (lo, hi) of the intervals, exclusions ignored."""
        return [(iv.lo, iv.hi) for iv in self.intervals if iv.lo < iv.hi]

    def has_interior(self) -> bool:
        return bool(self.open_part())

    def covers_open(self, lo: RatLike, hi: RatLike) -> bool:
        """Whether the open interval (lo, hi) sits inside the open part."""
        lo, hi = Fraction(lo), Fraction(hi)
        if lo >= hi:
            raise ValueError("need lo < hi")
        return any(a <= lo and hi <= b for a, b in self.open_part())

    # -- arithmetic -------------------------------------------------------

    def translated(self, c: RatLike) -> "IntervalSet":
        c = Fraction(c)
        return IntervalSet(
            (Interval(iv.lo + c, iv.lo_closed, iv.hi + c, iv.hi_closed) for iv in self.intervals),
            (x + c for x in self.excluded),
        )

    def scaled(self, factor: RatLike) -> "IntervalSet":
        f = Fraction(factor)
        if f <= 0:
            raise ValueError("scaling factor must be positive")
        return IntervalSet(
            (Interval(iv.lo * f, iv.lo_closed, iv.hi * f, iv.hi_closed) for iv in self.intervals),
            (x * f for x in self.excluded),
        )

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        pieces = []
        for a in self.intervals:
            for b in other.intervals:
                piece = _intersect(a, b)
                if piece is not None:
                    pieces.append(piece)
        return IntervalSet(pieces, self.excluded + other.excluded)

    # -- canonical selection ----------------------------------------------

    def canonical_point(
        self, extra_excluded: Iterable[RatLike] = (), max_den: int = 1_000_000
    ) -> Rat:
        """The member with the least reduced denominator, then the least
        numerator; ties cannot occur.  Requires nonempty interior."""
        if not self.has_interior():
            raise ValueError("set has no interior to pick from")
        skip = {Fraction(x) for x in extra_excluded}
        for q in range(1, max_den + 1):
            best: Optional[Fraction] = None
            for iv in self.intervals:
                p = _ceil_div(iv.lo.numerator * q, iv.lo.denominator)
                while Fraction(p, q) <= iv.hi:
                    x = Fraction(p, q)
                    if x.denominator == q and iv.contains(x) and x not in skip and x not in self.excluded:
                        if best is None or x < best:
                            best = x
                        break
                    p += 1
            if best is not None:
                return best
        raise RuntimeError("no canonical point below the denominator cap")

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self.intervals == other.intervals and self.excluded == other.excluded

    def __hash__(self) -> int:
        return hash((self.intervals, self.excluded))

    def __str__(self) -> str:
        return format_interval_set(self)

    def __repr__(self) -> str:
        return f"IntervalSet({format_interval_set(self)!r})"


def _touches(a: Interval, b: Interval) -> bool:
    # b.lo >= a.lo by sort order
    if b.lo > a.hi:
        return False
    if b.lo == a.hi:
        return a.hi_closed or b.lo_closed
    return True


def _merge(a: Interval, b: Interval) -> Interval:
    lo, lo_c = a.lo, a.lo_closed
    if b.lo == a.lo:
        lo_c = a.lo_closed or b.lo_closed
    if b.hi > a.hi:
        hi, hi_c = b.hi, b.hi_closed
    elif b.hi == a.hi:
        hi, hi_c = a.hi, a.hi_closed or b.hi_closed
    else:
        hi, hi_c = a.hi, a.hi_closed
    return Interval(lo, lo_c, hi, hi_c)


def _intersect(a: Interval, b: Interval) -> Optional[Interval]:
    if a.lo == b.lo:
        lo, lo_c = a.lo, a.lo_closed and b.lo_closed
    elif a.lo > b.lo:
        lo, lo_c = a.lo, a.lo_closed
    else:
        lo, lo_c = b.lo, b.lo_closed
    if a.hi == b.hi:
        hi, hi_c = a.hi, a.hi_closed and b.hi_closed
    elif a.hi < b.hi:
        hi, hi_c = a.hi, a.hi_closed
    else:
        hi, hi_c = b.hi, b.hi_closed
    if lo > hi or (lo == hi and not (lo_c and hi_c)):
        return None
    return Interval(lo, lo_c, hi, hi_c)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


# ---------------------------------------------------------------------------
# Text form.

_UNION_SEPS = ("∪", "U")
_MINUS_SEPS = ("∖", "\\")


def format_interval_set(s: IntervalSet) -> str:
    if s.is_empty():
        return "∅"
    body = " ∪ ".join(str(iv) for iv in s.intervals)
    if s.excluded:
        pts = ",".join(format_rat(x) for x in s.excluded)
        return f"{body} ∖ {{{pts}}}"
    return body


def parse_interval_set(text: str) -> IntervalSet:
    s = text.strip()
    if s in ("∅", "{}"):
        return IntervalSet(())
    minus_pos = None
    for sep in _MINUS_SEPS:
        if sep in s:
            minus_pos = s.index(sep)
            sep_len = len(sep)
            break
    excluded: list[Fraction] = []
    if minus_pos is not None:
        body, excl_part = s[:minus_pos], s[minus_pos + sep_len :]
        excl_part = excl_part.strip()
        if not (excl_part.startswith("{") and excl_part.endswith("}")):
            raise ValueError(f"excluded points must be a {{...}} list: {excl_part!r}")
        inner = excl_part[1:-1].strip()
        if inner:
            excluded = [parse_rat(tok) for tok in inner.split(",")]
    else:
        body = s
    for sep in _UNION_SEPS:
        body = body.replace(sep, "|")
    intervals = []
    for part in body.split("|"):
        part = part.strip()
        if not part:
            raise ValueError(f"empty interval component in {text!r}")
        intervals.append(_parse_interval(part))
    return IntervalSet(intervals, excluded)


def _parse_interval(part: str) -> Interval:
    if part[0] not in "([" or part[-1] not in ")]":
        raise ValueError(f"bad interval: {part!r}")
    lo_closed = part[0] == "["
    hi_closed = part[-1] == "]"
    inner = part[1:-1]
    if inner.count(",") != 1:
        raise ValueError(f"bad interval: {part!r}")
    lo_s, hi_s = inner.split(",")
    return Interval(parse_rat(lo_s), lo_closed, parse_rat(hi_s), hi_closed)
