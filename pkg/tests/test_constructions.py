import operator
from fractions import Fraction

import pytest

from oracles import greedy_basis_nat_slow
from sumcert.certificate import EXHAUSTED, WITNESS
from sumcert.constructions import (
    PatternFixture,
    PipelinePreconditionError,
    PoolExhaustedError,
    baire_sumset_construct,
    coefficient_run_pattern,
    fin_fin_pipeline,
    greedy_fs_basis,
    owings_fixture_from_coloring,
    owings_pattern_construct,
    pattern_vector,
    ramsey_pullback_fs,
    subset_sums,
    support_arithmetic_check,
)
from sumcert.exact import QVec, pattern_of, supp
from sumcert.intervals import parse_interval_set
from sumcert.search import Budget, BudgetExceeded
from sumcert.semigroup import FinSemigroup, NatCarrier


class TestGreedyBasis:
    def test_naturals_small(self):
        assert greedy_fs_basis(NatCarrier(), 3) == [1, 2, 4]

    def test_matches_literal_simulation(self):
        assert greedy_fs_basis(NatCarrier(), 6) == greedy_basis_nat_slow(6)

    def test_injective_subset_sums(self):
        hs = greedy_fs_basis(NatCarrier(), 6)
        sums = subset_sums(hs, operator.add)
        assert len(sums) == 63
        assert len(set(sums.values())) == 63

    def test_first_step_takes_pool_head(self):
        assert greedy_fs_basis(NatCarrier(), 1, pool=[7, 3, 9]) == [7]

    def test_small_group_exhausts(self):
        with pytest.raises(PoolExhaustedError):
            greedy_fs_basis(FinSemigroup.cyclic(4), 3)

    def test_boolean_group_gives_independent_bits(self):
        g = FinSemigroup.boolean_group(5)
        pool = [x for x in g.elements() if x != g.identity]
        hs = greedy_fs_basis(g, 4, pool)
        assert hs == [1, 2, 4, 8]
        sums = subset_sums(hs, g.add)
        assert len(set(sums.values())) == 15

    def test_rejects_duplicate_pool(self):
        with pytest.raises(ValueError):
            greedy_fs_basis(NatCarrier(), 2, pool=[1, 1, 2])


class TestPipeline:
    def test_case1_long_chain(self):
        g = FinSemigroup.cyclic(512)
        cert = fin_fin_pipeline(g, lambda x: x % 2, 2, 2, external_f=4)
        assert cert.verdict == WITNESS
        assert cert.payload_value("case") == "1"
        assert cert.payload_value("witness") == "2 4"
        assert cert.payload_value("conditional_on_f") == "4"

    def test_case2_boolean_group(self):
        g = FinSemigroup.boolean_group(9)
        color = lambda x: bin(x).count("1") % 2
        cert = fin_fin_pipeline(g, color, 2, 2, external_f=4)
        assert cert.verdict == WITNESS
        assert cert.payload_value("case") == "2"
        witness = [int(x) for x in cert.payload_value("witness").split()]
        assert len(set(witness)) == 2
        assert len({color(witness[0]), color(witness[1]), color(g.add(*witness))}) == 1

    def test_computed_f_single_color(self):
        g = FinSemigroup.boolean_group(5)
        cert = fin_fin_pipeline(g, lambda x: 0, 2, 1)
        assert cert.verdict == WITNESS
        assert cert.parameter("f_source") == "computed"
        assert cert.parameter("f") == "2"
        assert not cert.has_payload("conditional_on_f")

    def test_too_small_carrier_rejected(self):
        with pytest.raises(PipelinePreconditionError):
            fin_fin_pipeline(FinSemigroup.cyclic(8), lambda x: x % 2, 2, 2, external_f=4)

    def test_color_count_validated(self):
        g = FinSemigroup.boolean_group(5)
        with pytest.raises(ValueError):
            fin_fin_pipeline(g, lambda x: x % 3, 2, 2, external_f=2)


class TestPullback:
    def test_constant_coloring_least_triple(self):
        pair, cert = ramsey_pullback_fs(6, lambda v: 0)
        assert pair == (QVec.basis(1) - QVec.basis(0), QVec.basis(2) - QVec.basis(1))
        assert cert.payload_value("triple") == "0 1 2"

    def test_two_valued_colorings_at_six_always_succeed(self):
        # sampled colourings keyed by the smaller endpoint and gap
        for salt in range(40):
            def coloring(v, salt=salt):
                items = sorted(v.items())
                a, b = items[0][0], items[1][0]
                return (salt >> ((a * 5 + b) % 8)) & 1

            pair, cert = ramsey_pullback_fs(6, coloring)
            assert pair is not None
            v, w = pair
            assert coloring(v) == coloring(w) == coloring(v + w)

    def test_pentagon_absent_at_five(self):
        def pent(v):
            items = sorted(v.items())
            return 1 if (items[1][0] - items[0][0]) % 5 in (1, 4) else 0

        pair, cert = ramsey_pullback_fs(5, pent)
        assert pair is None
        assert cert.verdict == EXHAUSTED

    def test_kappa_must_be_three(self):
        with pytest.raises(ValueError):
            ramsey_pullback_fs(2, lambda v: 0)


class TestSupportArithmetic:
    def test_example_three_one(self):
        cert = support_arithmetic_check(3, 1)
        assert cert.payload_value("size_exponent") == "1"
        assert cert.payload_value("petal_exponent") == "1"
        assert cert.payload_value("summands") == "2"
        assert cert.payload_value("sum_support_size") == "5"

    def test_example_four_two(self):
        cert = support_arithmetic_check(4, 2)
        assert cert.payload_value("summands") == "3"
        assert cert.payload_value("sum_support_size") == "8"

    def test_rejects_empty_root(self):
        with pytest.raises(ValueError):
            support_arithmetic_check(1, 0)
        with pytest.raises(ValueError):
            support_arithmetic_check(4, 4)


class TestOwingsPatterns:
    def test_run_patterns(self):
        assert coefficient_run_pattern(1, 0) == (1, 1)
        assert coefficient_run_pattern(1, 1) == (2,)
        assert coefficient_run_pattern(2, 1) == (2, 1, 1)

    def test_theta_one(self):
        fx = PatternFixture.standard(1, 0, 1, 4)
        xs, cert = owings_pattern_construct(1, fx, 4)
        assert all(len(supp(x)) == 1 for x in xs)
        assert pattern_of(xs[0] + xs[1]) == (1, 1)
        assert pattern_of(xs[2] + xs[2]) == (2,)

    @pytest.mark.parametrize("i1, i2", [(0, 1), (1, 2), (0, 2)])
    def test_theta_two(self, i1, i2):
        fx = PatternFixture.standard(2, i1, i2, 4)
        xs, cert = owings_pattern_construct(2, fx, 4)
        mixed = coefficient_run_pattern(2, i1)
        double = coefficient_run_pattern(2, i2)
        for a in range(4):
            for b in range(4):
                got = pattern_of(xs[a] + xs[b])
                assert got == (double if a == b else mixed)

    def test_fixture_validation(self):
        with pytest.raises(ValueError):
            PatternFixture.standard(2, 1, 1, 4)
        fx = PatternFixture.standard(2, 0, 1, 2)
        with pytest.raises(ValueError):
            owings_pattern_construct(2, fx, 5)  # capacity too small
        with pytest.raises(ValueError):
            owings_pattern_construct(2, fx, 1)  # count below two

    def test_pattern_vector_places_tail(self):
        v = pattern_vector(2, 1, (0, 1, 2, 3))
        assert v == QVec({1: 2, 2: 1, 3: 1})


class TestOwingsFixtureSearch:
    def test_constant_coloring(self):
        fx = owings_fixture_from_coloring(2, lambda v: 1, kappa=16, count=3)
        assert fx is not None
        assert (fx.i1, fx.i2) == (0, 1)
        assert fx.color == 1
        xs, cert = owings_pattern_construct(2, fx, 3)
        assert cert.verdict == WITNESS

    def test_pattern_index_only_coloring(self):
        # colour depends only on the number of twos in the pattern
        def coloring(v):
            return sum(1 for c in pattern_of(v) if c == 2) % 2

        fx = owings_fixture_from_coloring(2, coloring, kappa=16, count=3)
        assert fx is not None
        assert coloring(pattern_vector(2, fx.i1, tuple(range(4)))) == fx.color

    def test_small_kappa_inconclusive(self):
        assert owings_fixture_from_coloring(2, lambda v: 0, kappa=4, count=5) is None

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceeded):
            owings_fixture_from_coloring(
                2, lambda v: 0, kappa=16, count=3, budget=Budget(nodes=2)
            )

    def test_codomain_validated(self):
        with pytest.raises(ValueError):
            owings_fixture_from_coloring(2, lambda v: 7, kappa=16, count=3)


class TestBaire:
    def test_unit_interval_frozen(self):
        xs, cert = baire_sumset_construct(parse_interval_set("(0,1)"), 3)
        assert xs == [Fraction(9, 20), Fraction(5, 12), Fraction(11, 28)]
        assert cert.payload_value("translation") == "1/2"
        assert cert.payload_value("delta") == "1/4"

    def test_exclusion_avoided_exactly(self):
        region = parse_interval_set("(0,1) ∖ {1/2}")
        xs, cert = baire_sumset_construct(region, 2)
        for i in range(2):
            for j in range(i, 2):
                s = xs[i] + xs[j]
                assert s != Fraction(1, 2)
                assert region.contains(s)

    def test_all_pair_sums_inside(self):
        region = parse_interval_set("(-1,-1/4) ∪ (1/4,2) ∖ {1,3/2}")
        xs, cert = baire_sumset_construct(region, 8)
        assert len(set(xs)) == 8
        for i in range(8):
            for j in range(i, 8):
                assert region.contains(xs[i] + xs[j])

    def test_empty_interior_rejected(self):
        with pytest.raises(ValueError):
            baire_sumset_construct(parse_interval_set("[1,1]"), 2)
