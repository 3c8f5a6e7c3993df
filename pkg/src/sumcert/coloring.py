"""The built-in colourings and their tagged colour values.

Five colourings ship, three on rationals and two on sparse vectors:

    dyadic          Rat  -> Int   signed dyadic band index
    signed_dyadic   Rat  -> Pair  (band index of |r|, sign of r)
    dyadic_parity   Rat  -> Int   parity in {0,1} of the band index of |r|
    support_parity  QVec -> Int   parity of floor(log2 |supp(v)|), v != 0
    self_inner      QVec -> Q     <v|v>

Colour values carry an explicit tag so that, say, the integer colour 1 and
the rational colour 1 never compare equal across colourings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exact import QVec, RatLike, dyadic_exponent, format_rat, inner_product, parse_rat, supp


class DomainError(ValueError):
    """A colouring was applied outside its domain."""


@dataclass(frozen=True)
class ColorValue:
    """Tagged colour: equality requires both tag and value to agree."""

    tag: str  # "int" | "q" | "pair"
    value: Union[int, Fraction, tuple[int, int]]

    @classmethod
    def of_int(cls, k: int) -> "ColorValue":
        return cls("int", int(k))

    @classmethod
    def of_rat(cls, r: RatLike) -> "ColorValue":
        return cls("q", Fraction(r))

    @classmethod
    def of_pair(cls, k: int, sign: int) -> "ColorValue":
        if sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {sign}")
        return cls("pair", (int(k), sign))

    def __str__(self) -> str:
        if self.tag == "int":
            return f"int:{self.value}"
        if self.tag == "q":
            return f"q:{format_rat(self.value)}"
        k, s = self.value
        return f"pair:({k},{'+1' if s > 0 else str(s)})"


def parse_color_value(text: str) -> ColorValue:
    tag, _, body = text.strip().partition(":")
    if tag == "int":
        return ColorValue.of_int(int(body))
    if tag == "q":
        return ColorValue.of_rat(parse_rat(body))
    if tag == "pair":
        k, s = body.strip().lstrip("(").rstrip(")").split(",")
        return ColorValue.of_pair(int(k), int(s))
    raise ValueError(f"bad colour value: {text!r}")


# ---------------------------------------------------------------------------
# The colourings.


def dyadic_color(r: RatLike) -> ColorValue:
    """k on [2**k, 2**(k+1)), 0 at 0, and -k on (-2**(k+1), -2**k]."""
    r = Fraction(r)
    if r == 0:
        return ColorValue.of_int(0)
    if r > 0:
        return ColorValue.of_int(dyadic_exponent(r))
    return ColorValue.of_int(-dyadic_exponent(-r))


def signed_dyadic_color(r: RatLike) -> ColorValue:
    """(dyadic exponent of |r|, sign of r); (0, 0) at zero."""
    r = Fraction(r)
    if r == 0:
        return ColorValue.of_pair(0, 0)
    sign = 1 if r > 0 else -1
    return ColorValue.of_pair(dyadic_exponent(abs(r)), sign)


def dyadic_parity_color(r: RatLike) -> ColorValue:
    """Parity in {0,1} of the dyadic exponent of |r|, with 0 at zero.

    Negative exponents take their nonnegative residue mod 2.
    """
    r = Fraction(r)
    if r == 0:
        return ColorValue.of_int(0)
    return ColorValue.of_int(dyadic_exponent(abs(r)) % 2)


def support_parity_color(v: QVec) -> ColorValue:
    """Parity of floor(log2 of the support size); rejects the zero vector."""
    if v.is_zero():
        raise DomainError("support_parity is undefined on the zero vector")
    return ColorValue.of_int(dyadic_exponent(len(supp(v))) % 2)


def self_inner_color(v: QVec) -> ColorValue:
    """The rational <v|v>, i.e. the sum of squared coefficients."""
    return ColorValue.of_rat(inner_product(v, v))


# ---------------------------------------------------------------------------
# Named colouring specs, for the CLI and certificates.

RATIONAL_DOMAIN = "rational"
VECTOR_DOMAIN = "vector"

_COLORINGS = {
    "dyadic": (RATIONAL_DOMAIN, dyadic_color),
    "signed_dyadic": (RATIONAL_DOMAIN, signed_dyadic_color),
    "dyadic_parity": (RATIONAL_DOMAIN, dyadic_parity_color),
    "support_parity": (VECTOR_DOMAIN, support_parity_color),
    "self_inner": (VECTOR_DOMAIN, self_inner_color),
}


@dataclass(frozen=True)
class ColoringSpec:
    """A named colouring with (possibly empty) named parameters.

    None of the built-in colourings takes parameters; the field exists so
    that specs serialize uniformly as ``name(param=value,...)``.
    """

    name: str
    parameters: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if self.name not in _COLORINGS:
            raise ValueError(
                f"unknown colouring {self.name!r}; known: {', '.join(sorted(_COLORINGS))}"
            )

    @property
    def domain(self) -> str:
        return _COLORINGS[self.name][0]

    def __str__(self) -> str:
        inside = ",".join(f"{k}={v}" for k, v in self.parameters)
        return f"{self.name}({inside})"


def parse_coloring_spec(text: str) -> ColoringSpec:
    s = text.strip()
    if "(" in s:
        name, _, rest = s.partition("(")
        rest = rest.rstrip()
        if not rest.endswith(")"):
            raise ValueError(f"unbalanced colouring spec: {text!r}")
        body = rest[:-1].strip()
        params = []
        if body:
            for part in body.split(","):
                key, _, val = part.partition("=")
                params.append((key.strip(), val.strip()))
        return ColoringSpec(name.strip(), tuple(params))
    return ColoringSpec(s)


def evaluate(spec: ColoringSpec, point) -> ColorValue:
    """Apply the named colouring to a point, checking the domain."""
    domain, fn = _COLORINGS[spec.name]
    if domain == RATIONAL_DOMAIN:
        if isinstance(point, QVec):
            raise DomainError(f"{spec.name} expects a rational, got a vector")
        return fn(Fraction(point))
    if not isinstance(point, QVec):
        raise DomainError(f"{spec.name} expects a vector, got {point!r}")
    return fn(point)
