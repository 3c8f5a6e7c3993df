"""Exact scalar and vector arithmetic.

Scalars are ``fractions.Fraction`` throughout (aliased ``Rat``): arbitrary
precision, always in lowest terms with positive denominator, so equality of
colours is literal equality of rationals.  Vectors are finitely supported
maps from a natural-number basis index to a nonzero rational coefficient:

    QVec({0: 3, 2: Fraction(-1, 2)})   <->   3*b0 - (1/2)*b2

Zero coefficients are never stored, so two vectors are equal exactly when
their entry maps are equal.  The text form used by the CLI and certificates
is ``{index:num/den, ...}`` with indices ascending and the denominator
omitted when it is 1, e.g. ``{0:3,2:-1/2}``; the zero vector is ``{}``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Rat = Fraction

RatLike = Union[Rat, int]

#: A coefficient pattern: the nonzero coefficients of a vector listed in
#: increasing basis-index order.
Pattern = tuple[Rat, ...]


def dyadic_exponent(r: RatLike) -> int:
    """The unique k with 2**k <= r < 2**(k+1), for positive rational r.

    Computed by exact integer comparisons; k may be negative.
    """
    r = Fraction(r)
    if r <= 0:
        raise ValueError(f"dyadic_exponent requires a positive rational, got {r}")
    p, q = r.numerator, r.denominator
    k = p.bit_length() - q.bit_length()
    # The bit-length estimate is off by at most one; fix up exactly.
    if not _pow2_le(k, p, q):
        k -= 1
    if _pow2_le(k + 1, p, q):
        k += 1
    return k


def _pow2_le(k: int, p: int, q: int) -> bool:
    """Exact test 2**k <= p/q for positive integers p, q."""
    if k >= 0:
        return (q << k) <= p
    return q <= (p << (-k))


class QVec:
    """Immutable sparse vector over the rationals with a natural-number basis."""

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Mapping[int, RatLike] | Iterable[tuple[int, RatLike]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict[int, Rat] = {}
        for index, coeff in items:
            if not isinstance(index, int) or index < 0:
                raise ValueError(f"basis index must be a natural number, got {index!r}")
            c = acc.get(index, Fraction(0)) + Fraction(coeff)
            if c:
                acc[index] = c
            else:
                acc.pop(index, None)
        self._entries: dict[int, Rat] = acc
        self._hash: int | None = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "QVec":
        return cls()

    @classmethod
    def basis(cls, index: int) -> "QVec":
        return cls({index: 1})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[RatLike]) -> "QVec":
        """Dense coefficient list (b0, b1, ...) to sparse vector."""
        return cls(enumerate(coeffs))

    # -- mapping-ish access -------------------------------------------

    def __getitem__(self, index: int) -> Rat:
        return self._entries.get(index, Fraction(0))

    def items(self) -> Iterator[tuple[int, Rat]]:
        return iter(sorted(self._entries.items()))

    def is_zero(self) -> bool:
        return not self._entries

    def __bool__(self) -> bool:
        return bool(self._entries)

    # -- algebra ------------------------------------------------------

    def __add__(self, other: "QVec") -> "QVec":
        if not isinstance(other, QVec):
            return NotImplemented
        out = dict(self._entries)
        for i, c in other._entries.items():
            s = out.get(i, Fraction(0)) + c
            if s:
                out[i] = s
            else:
                out.pop(i, None)
        return _wrap(out)

    def __sub__(self, other: "QVec") -> "QVec":
        if not isinstance(other, QVec):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "QVec":
        return _wrap({i: -c for i, c in self._entries.items()})

    def __mul__(self, scalar: RatLike) -> "QVec":
        s = Fraction(scalar)
        if not s:
            return QVec()
        return _wrap({i: c * s for i, c in self._entries.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QVec):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._entries.items())))
        return self._hash

    # -- text form ----------------------------------------------------

    def __repr__(self) -> str:
        return f"QVec({format_qvec(self)!r})"

    def __str__(self) -> str:
        return format_qvec(self)


def _wrap(entries: dict[int, Rat]) -> QVec:
    v = QVec()
    v._entries = entries
    return v


def supp(v: QVec) -> frozenset[int]:
    """Support: the set of basis indices carrying a nonzero coefficient."""
    return frozenset(v._entries)


def coef(v: QVec) -> frozenset[Rat]:
    """The set of distinct nonzero coefficient values of v."""
    return frozenset(v._entries.values())


def inner_product(v: QVec, w: QVec) -> Rat:
    """Coordinatewise dot product; exact, symmetric, positive definite."""
    a, b = v._entries, w._entries
    if len(b) < len(a):
        a, b = b, a
    return sum((c * b[i] for i, c in a.items() if i in b), Fraction(0))


def pattern_of(v: QVec) -> Pattern:
    """Nonzero coefficients of v, listed by increasing basis index."""
    return tuple(c for _, c in sorted(v._entries.items()))


# ---------------------------------------------------------------------------
# Text forms.


def format_rat(r: RatLike) -> str:
    return str(Fraction(r))


def parse_rat(text: str) -> Rat:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_qvec(v: QVec) -> str:
    inside = ",".join(f"{i}:{format_rat(c)}" for i, c in v.items())
    return "{" + inside + "}"


def parse_qvec(text: str) -> QVec:
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ValueError(f"not a vector literal: {text!r}")
    body = body[1:-1].strip()
    if not body:
        return QVec()
    entries = []
    for part in body.split(","):
        if ":" not in part:
            raise ValueError(f"bad vector entry: {part!r}")
        idx, _, val = part.partition(":")
        entries.append((int(idx.strip()), parse_rat(val)))
    return QVec(entries)
