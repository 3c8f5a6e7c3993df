from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sumcert.exact import (
    QVec,
    coef,
    dyadic_exponent,
    format_qvec,
    format_rat,
    inner_product,
    parse_qvec,
    parse_rat,
    pattern_of,
    supp,
)

rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**6)
positive_rationals = rationals.filter(lambda r: r > 0)


def small_qvecs():
    entry = st.tuples(st.integers(0, 8), st.fractions(min_value=-100, max_value=100, max_denominator=30))
    return st.lists(entry, max_size=6).map(QVec)


class TestDyadicExponent:
    @pytest.mark.parametrize(
        "r, k",
        [(Fraction(1), 0), (Fraction(17, 5), 1), (Fraction(3, 8), -2),
         (Fraction(2), 1), (Fraction(1, 2), -1), (Fraction(10**9), 29)],
    )
    def test_examples(self, r, k):
        assert dyadic_exponent(r) == k

    @pytest.mark.parametrize("bad", [0, Fraction(-1, 3), -5])
    def test_rejects_nonpositive(self, bad):
        with pytest.raises(ValueError):
            dyadic_exponent(bad)

    @given(positive_rationals)
    def test_bracket(self, r):
        k = dyadic_exponent(r)
        assert Fraction(2) ** k <= r < Fraction(2) ** (k + 1)


class TestQVec:
    def test_supp_examples(self):
        assert supp(QVec.zero()) == frozenset()
        assert supp(QVec({0: 3, 2: Fraction(-1, 2)})) == {0, 2}
        assert supp(QVec.basis(5)) == {5}

    def test_coef_examples(self):
        assert coef(QVec({0: 3, 2: Fraction(-1, 2)})) == {Fraction(3), Fraction(-1, 2)}
        assert coef(QVec({0: 1, 1: 1, 2: 1})) == {Fraction(1)}
        assert coef(QVec.zero()) == frozenset()

    def test_inner_product_examples(self):
        b0, b1, b3 = QVec.basis(0), QVec.basis(1), QVec.basis(3)
        assert inner_product(b0 + b1, b0 - b1) == 0
        assert inner_product(2 * b3, 2 * b3) == 4
        assert inner_product(b0 + Fraction(1, 2) * b1, b1) == Fraction(1, 2)

    def test_pattern_examples(self):
        v = QVec({1: 2, 4: 1, 7: 1})
        assert pattern_of(v) == (2, 1, 1)
        assert pattern_of(QVec.zero()) == ()
        assert pattern_of(QVec({0: Fraction(1, 2), 2: 2})) == (Fraction(1, 2), 2)

    def test_zero_entries_never_stored(self):
        v = QVec({0: 1, 1: 0, 2: Fraction(0)})
        assert supp(v) == {0}
        assert QVec({0: 1}) + QVec({0: -1}) == QVec.zero()

    def test_duplicate_indices_accumulate(self):
        assert QVec([(3, 1), (3, 2)]) == QVec({3: 3})

    def test_rejects_bad_indices(self):
        with pytest.raises(ValueError):
            QVec({-1: 1})

    @given(small_qvecs(), small_qvecs())
    def test_support_additivity_bound(self, u, v):
        s = supp(u + v)
        assert len(s) <= len(supp(u)) + len(supp(v))
        if supp(u).isdisjoint(supp(v)):
            assert len(s) == len(supp(u)) + len(supp(v))

    @given(small_qvecs())
    def test_inner_product_definite(self, v):
        q = inner_product(v, v)
        assert q >= 0
        assert (q == 0) == v.is_zero()

    @given(small_qvecs(), small_qvecs())
    def test_inner_product_symmetric(self, u, v):
        assert inner_product(u, v) == inner_product(v, u)

    @given(small_qvecs(), small_qvecs(), small_qvecs())
    def test_inner_product_bilinear(self, u, v, w):
        assert inner_product(u + v, w) == inner_product(u, w) + inner_product(v, w)

    @given(small_qvecs())
    def test_pattern_length_is_support_size(self, v):
        assert len(pattern_of(v)) == len(supp(v))

    @given(small_qvecs())
    def test_text_roundtrip(self, v):
        assert parse_qvec(format_qvec(v)) == v

    def test_text_form(self):
        assert format_qvec(QVec({2: Fraction(-1, 2), 0: 3})) == "{0:3,2:-1/2}"
        assert format_qvec(QVec.zero()) == "{}"
        assert parse_qvec("{ 0:3 , 2:-1/2 }") == QVec({0: 3, 2: Fraction(-1, 2)})


class TestRatText:
    @given(rationals)
    def test_roundtrip(self, r):
        assert parse_rat(format_rat(r)) == r

    def test_denominator_omitted_when_one(self):
        assert format_rat(Fraction(-3)) == "-3"
        assert format_rat(Fraction(17, 5)) == "17/5"

    def test_parse_rejects_junk(self):
        with pytest.raises(ValueError):
            parse_rat("one half")
