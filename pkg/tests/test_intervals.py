from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sumcert.intervals import (
    Interval,
    IntervalSet,
    format_interval_set,
    parse_interval_set,
)

points = st.fractions(min_value=-8, max_value=8, max_denominator=24)


@st.composite
def interval_sets(draw):
    n = draw(st.integers(1, 3))
    ivs = []
    for _ in range(n):
        a = draw(st.fractions(min_value=-6, max_value=6, max_denominator=8))
        w = draw(st.fractions(min_value=0, max_value=3, max_denominator=8))
        lo_c, hi_c = draw(st.booleans()), draw(st.booleans())
        if w == 0:
            lo_c = hi_c = True
        ivs.append(Interval(a, lo_c, a + w, hi_c))
    excl = draw(st.lists(points, max_size=3))
    return IntervalSet(ivs, excl)


class TestNormalization:
    def test_merges_touching(self):
        s = IntervalSet([
            Interval(Fraction(0), True, Fraction(1), False),
            Interval(Fraction(1), True, Fraction(2), True),
        ])
        assert len(s.intervals) == 1
        assert str(s) == "[0,2]"

    def test_keeps_open_gap(self):
        s = IntervalSet([
            Interval(Fraction(0), False, Fraction(1), False),
            Interval(Fraction(1), False, Fraction(2), False),
        ])
        assert len(s.intervals) == 2
        assert not s.contains(1)

    def test_exclusion_reopens_closed_endpoint(self):
        s = parse_interval_set("[1/2,1] ∖ {1/2}")
        assert str(s) == "(1/2,1]"
        assert not s.contains(Fraction(1, 2))

    def test_exclusion_outside_union_dropped(self):
        s = parse_interval_set("(0,1) ∖ {5}")
        assert s.excluded == ()

    def test_excluded_singleton_vanishes(self):
        s = IntervalSet([Interval(Fraction(2), True, Fraction(2), True)], [Fraction(2)])
        assert s.is_empty()


class TestMembership:
    def test_tags_respected(self):
        s = parse_interval_set("[0,1)")
        assert s.contains(0)
        assert not s.contains(1)
        assert s.contains(Fraction(999, 1000))

    def test_exclusions_respected(self):
        s = parse_interval_set("(0,1) ∖ {1/2}")
        assert not s.contains(Fraction(1, 2))
        assert s.contains(Fraction(1, 3))

    @given(interval_sets(), interval_sets(), points)
    def test_intersection_agrees_with_membership(self, a, b, x):
        both = a.intersect(b)
        assert both.contains(x) == (a.contains(x) and b.contains(x))

    @given(interval_sets(), points, points)
    def test_translation_moves_membership(self, s, c, x):
        assert s.translated(c).contains(x + c) == s.contains(x)

    @given(interval_sets(), points)
    def test_scaling_moves_membership(self, s, x):
        assert s.scaled(Fraction(1, 2)).contains(x / 2) == s.contains(x)


class TestCanonicalPoint:
    def test_least_denominator_then_numerator(self):
        s = parse_interval_set("(0,1)")
        assert s.canonical_point() == Fraction(1, 2)
        assert s.canonical_point(extra_excluded=[Fraction(1, 2)]) == Fraction(1, 3)

    def test_respects_exclusions(self):
        s = parse_interval_set("(0,1) ∖ {1/2}")
        assert s.canonical_point() == Fraction(1, 3)

    def test_prefers_integers(self):
        s = parse_interval_set("(1/2,3)")
        assert s.canonical_point() == 1

    def test_negative_ranges(self):
        s = parse_interval_set("(-2,-1)")
        assert s.canonical_point() == Fraction(-3, 2)

    @given(interval_sets())
    def test_is_member_and_minimal(self, s):
        if not s.has_interior():
            return
        x = s.canonical_point()
        assert s.contains(x)
        for q in range(1, x.denominator):
            lo = min(iv.lo for iv in s.intervals)
            hi = max(iv.hi for iv in s.intervals)
            p = (lo.numerator * q) // lo.denominator
            while Fraction(p, q) <= hi:
                assert not s.contains(Fraction(p, q)) or Fraction(p, q).denominator != q
                p += 1


class TestCoversOpen:
    def test_examples(self):
        s = parse_interval_set("(-1/2,1/2)")
        assert s.covers_open(0, Fraction(1, 2))
        assert not s.covers_open(0, Fraction(3, 4))


class TestText:
    def test_ascii_aliases(self):
        assert parse_interval_set("(0,1) U [2,3) \\ {1/2}") == parse_interval_set(
            "(0,1) ∪ [2,3) ∖ {1/2}"
        )

    @given(interval_sets())
    def test_roundtrip(self, s):
        assert parse_interval_set(format_interval_set(s)) == s

    def test_rejects_junk(self):
        with pytest.raises(ValueError):
            parse_interval_set("<0,1>")
        with pytest.raises(ValueError):
            parse_interval_set("(0,1) ∖ 1/2")
