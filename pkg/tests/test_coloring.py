from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oracles import dyadic_color_slow
from sumcert.coloring import (
    ColoringSpec,
    ColorValue,
    DomainError,
    dyadic_color,
    dyadic_parity_color,
    evaluate,
    parse_color_value,
    parse_coloring_spec,
    self_inner_color,
    signed_dyadic_color,
    support_parity_color,
)
from sumcert.exact import QVec

rationals = st.fractions(min_value=-10**4, max_value=10**4, max_denominator=10**4)


@st.composite
def same_band_pairs(draw):
    """Distinct same-sign rationals sharing a dyadic band."""
    k = draw(st.integers(-8, 8))
    u = draw(st.fractions(min_value=0, max_value=Fraction(99, 100), max_denominator=100))
    v = draw(st.fractions(min_value=0, max_value=Fraction(99, 100), max_denominator=101))
    assume(u != v)
    base = Fraction(2) ** k
    r, s = base * (1 + u), base * (1 + v)
    if draw(st.booleans()):
        r, s = -r, -s
    return r, s


class TestDyadicColor:
    @pytest.mark.parametrize(
        "r, k",
        [(0, 0), (Fraction(17, 5), 1), (-3, -1), (1, 0), (Fraction(-1, 2), 1),
         (Fraction(1, 2), -1), (-4, -2), (Fraction(-33, 10), -1)],
    )
    def test_examples(self, r, k):
        assert dyadic_color(r) == ColorValue.of_int(k)

    @given(rationals)
    def test_matches_loop_recomputation(self, r):
        assert dyadic_color(r).value == dyadic_color_slow(r)

    @given(same_band_pairs())
    def test_same_sign_pairs_never_monochromatic(self, pair):
        r, s = pair
        assert dyadic_color(r) == dyadic_color(s)
        assert dyadic_color(r + s) != dyadic_color(r)


class TestSignedDyadicColor:
    @pytest.mark.parametrize(
        "r, pair",
        [(Fraction(17, 5), (1, 1)), (Fraction(-3, 5), (-1, -1)), (0, (0, 0))],
    )
    def test_examples(self, r, pair):
        assert signed_dyadic_color(r) == ColorValue.of_pair(*pair)

    @given(same_band_pairs())
    def test_equal_colors_force_sum_color_change(self, pair):
        # equal signed colours force a shared band and sign
        r, s = pair
        assert signed_dyadic_color(r) == signed_dyadic_color(s)
        assert signed_dyadic_color(r + s) != signed_dyadic_color(r)


class TestDyadicParityColor:
    @pytest.mark.parametrize("r, p", [(0, 0), (3, 1), (Fraction(1, 2), 1), (4, 0)])
    def test_examples(self, r, p):
        assert dyadic_parity_color(r) == ColorValue.of_int(p)

    @given(same_band_pairs())
    def test_parity_flips_on_same_sign_equal_bands(self, pair):
        r, s = pair
        assert dyadic_parity_color(r + s) != dyadic_parity_color(r)


class TestVectorColorings:
    @pytest.mark.parametrize("size, parity", [(1, 0), (5, 0), (2, 1), (4, 0), (3, 1)])
    def test_support_parity(self, size, parity):
        v = QVec({i: 1 for i in range(size)})
        assert support_parity_color(v) == ColorValue.of_int(parity)

    def test_support_parity_rejects_zero(self):
        with pytest.raises(DomainError):
            support_parity_color(QVec.zero())

    def test_self_inner_examples(self):
        assert self_inner_color(QVec({0: 1, 1: 1})) == ColorValue.of_rat(2)
        assert self_inner_color(QVec({3: Fraction(1, 2)})) == ColorValue.of_rat(Fraction(1, 4))
        assert self_inner_color(QVec.zero()) == ColorValue.of_rat(0)


class TestColorValue:
    def test_cross_tag_inequality(self):
        assert ColorValue.of_int(1) != ColorValue.of_rat(1)
        assert ColorValue.of_int(0) != ColorValue.of_pair(0, 0)

    @pytest.mark.parametrize(
        "cv", [ColorValue.of_int(-3), ColorValue.of_rat(Fraction(17, 5)),
               ColorValue.of_pair(1, -1), ColorValue.of_pair(0, 0)],
    )
    def test_text_roundtrip(self, cv):
        assert parse_color_value(str(cv)) == cv

    def test_pair_sign_validated(self):
        with pytest.raises(ValueError):
            ColorValue.of_pair(1, 2)


class TestEvaluate:
    def test_dispatch(self):
        assert evaluate(ColoringSpec("dyadic"), 0) == ColorValue.of_int(0)
        assert evaluate(ColoringSpec("self_inner"), QVec.basis(0)) == ColorValue.of_rat(1)

    def test_domain_mismatch(self):
        with pytest.raises(DomainError):
            evaluate(ColoringSpec("dyadic"), QVec.basis(0))
        with pytest.raises(DomainError):
            evaluate(ColoringSpec("self_inner"), Fraction(1))
        with pytest.raises(DomainError):
            evaluate(ColoringSpec("support_parity"), QVec.zero())

    def test_unknown_name_rejected(self):
        with pytest.raises(ValueError):
            ColoringSpec("rainbow")

    def test_spec_text_roundtrip(self):
        spec = ColoringSpec("support_parity")
        assert parse_coloring_spec(str(spec)) == spec
        assert parse_coloring_spec("dyadic") == ColoringSpec("dyadic")
        assert str(ColoringSpec("dyadic")) == "dyadic()"
