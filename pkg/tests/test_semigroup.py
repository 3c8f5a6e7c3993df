import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sumcert.semigroup import (
    FinSemigroup,
    NatCarrier,
    NotAssociativeError,
    format_cayley_table,
    parse_cayley_table,
)


def brute_force_associative(table) -> bool:
    t = np.asarray(table)
    n = t.shape[0]
    return all(
        t[t[a, b], c] == t[a, t[b, c]]
        for a in range(n) for b in range(n) for c in range(n)
    )


def random_tables(max_n=4):
    return st.integers(2, max_n).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
            min_size=n, max_size=n,
        )
    )


class TestConstruction:
    def test_rejects_non_associative(self):
        with pytest.raises(NotAssociativeError):
            FinSemigroup([[0, 1], [0, 0]])

    def test_rejects_bad_entries(self):
        with pytest.raises(ValueError):
            FinSemigroup([[0, 2], [1, 0]])
        with pytest.raises(ValueError):
            FinSemigroup([[0, 1]])

    @given(random_tables())
    def test_acceptance_matches_brute_force(self, table):
        expected = brute_force_associative(table)
        try:
            FinSemigroup(table)
            accepted = True
        except NotAssociativeError:
            accepted = False
        assert accepted == expected

    def test_identity_detection(self):
        assert FinSemigroup.cyclic(4).identity == 0
        assert FinSemigroup.left_zero(3).identity is None


class TestQueries:
    def test_left_solution_count_examples(self):
        z4 = FinSemigroup.cyclic(4)
        assert all(z4.left_solution_count(e, f) == 1 for e in range(4) for f in range(4))
        lz = FinSemigroup.left_zero(3)
        assert lz.left_solution_count(0, 0) == 3
        assert lz.left_solution_count(0, 1) == 0

    def test_left_solution_count_range_check(self):
        with pytest.raises(IndexError):
            FinSemigroup.cyclic(3).left_solution_count(0, 5)

    def test_cancellativity_bound_examples(self):
        assert FinSemigroup.cyclic(4).cancellativity_bound() == 1
        assert FinSemigroup.left_zero(3).cancellativity_bound() == 3
        prod = FinSemigroup.direct_product(
            FinSemigroup.cyclic(2), FinSemigroup.left_zero(2)
        )
        assert prod.cancellativity_bound() == 2

    @given(st.integers(1, 30))
    def test_groups_have_bound_one(self, n):
        assert FinSemigroup.cyclic(n).cancellativity_bound() == 1

    def test_monogenic_examples(self):
        z4 = FinSemigroup.cyclic(4)
        assert z4.monogenic(1) == [1, 2, 3, 0]
        assert z4.monogenic(2) == [2, 0]
        lz = FinSemigroup.left_zero(3)
        assert lz.monogenic(1) == [1]  # idempotent

    @given(st.integers(1, 12), st.integers(0, 11))
    def test_monogenic_closed_and_bounded(self, n, g):
        sg = FinSemigroup.boolean_group(3) if n > 8 else FinSemigroup.cyclic(n)
        g = g % sg.n
        mono = sg.monogenic(g)
        assert len(mono) <= sg.n
        members = set(mono)
        assert all(sg.add(x, g) in members for x in members)

    def test_weak_left_cancellativity_exposed(self):
        assert FinSemigroup.left_zero(3).is_weakly_left_cancellative()
        assert NatCarrier.is_weakly_left_cancellative()


class TestNatCarrier:
    def test_solution_counts(self):
        assert NatCarrier.left_solution_count(2, 5) == 1
        assert NatCarrier.left_solution_count(5, 5) == 0
        assert NatCarrier.left_solution_count(5, 2) == 0

    def test_bound(self):
        assert NatCarrier.cancellativity_bound() == 1


class TestTableFormat:
    def test_roundtrip(self):
        g = FinSemigroup.cyclic(5)
        again = parse_cayley_table(format_cayley_table(g))
        assert np.array_equal(again.table, g.table)

    def test_parse_validates(self):
        with pytest.raises(ValueError):
            parse_cayley_table("2\n0 1\n")
        with pytest.raises(ValueError):
            parse_cayley_table("bogus\n")
        with pytest.raises(NotAssociativeError):
            parse_cayley_table("2\n0 1\n0 0\n")
