"""Rational sample checks for the simplex and interval operad structures."""

import random
from fractions import Fraction

import pytest

from decatkit import operads


@pytest.fixture
def rng():
    return random.Random(20240)


class TestSimplexPoints:
    def test_construction_guards(self):
        with pytest.raises(ValueError, match="sum to 1"):
            operads.SimplexPoint((Fraction(1, 2), Fraction(1, 3)))
        with pytest.raises(ValueError, match="negative"):
            operads.SimplexPoint((Fraction(3, 2), Fraction(-1, 2)))
        with pytest.raises(ValueError, match="arity"):
            operads.SimplexPoint(())

    def test_boundary_points_are_basepoint_in_the_quotient(self):
        interior = operads.SimplexPoint((Fraction(1, 3), Fraction(2, 3)))
        boundary = operads.SimplexPoint((Fraction(0), Fraction(1)))
        assert not interior.is_basepoint
        assert boundary.is_basepoint
        assert operads.j_equal(boundary, operads.BASEPOINT)
        assert not operads.j_equal(interior, operads.BASEPOINT)

    def test_unit_is_the_single_vertex(self):
        assert operads.j_unit().coords == (Fraction(1),)


class TestSimplexComposition:
    def test_compose_multiplies_blockwise(self):
        outer = operads.SimplexPoint((Fraction(1, 2), Fraction(1, 2)))
        inners = [
            operads.SimplexPoint((Fraction(1, 3), Fraction(2, 3))),
            operads.SimplexPoint((Fraction(1),)),
        ]
        assert operads.j_compose(outer, inners).coords == (
            Fraction(1, 6),
            Fraction(1, 3),
            Fraction(1, 2),
        )

    def test_compose_arity_mismatch(self):
        with pytest.raises(ValueError, match="inner points"):
            operads.j_compose(operads.j_unit(), [])

    def test_basepoint_absorbs(self):
        one = operads.j_unit()
        assert operads.j_compose(operads.BASEPOINT, [one]) is operads.BASEPOINT
        two = operads.SimplexPoint((Fraction(1, 2), Fraction(1, 2)))
        assert operads.j_compose(two, [one, operads.BASEPOINT]) is operads.BASEPOINT

    def test_boundary_output_collapses(self):
        outer = operads.SimplexPoint((Fraction(0), Fraction(1)))
        inners = [operads.j_unit(), operads.j_unit()]
        out = operads.j_compose(outer, inners)
        assert operads.j_equal(out, operads.BASEPOINT)

    def test_cocompose_sections_compose(self, rng):
        for _ in range(25):
            point = operads.sample_simplex(rng, 4, boundary_rate=0)
            outer, inners = operads.j_cocompose(point, (2, 2))
            assert operads.j_equal(operads.j_compose(outer, list(inners)), point)

    def test_cocompose_zero_block_collapses(self):
        # A block of zero mass cannot be renormalized into a simplex point.
        point = operads.SimplexPoint((Fraction(0), Fraction(0), Fraction(1)))
        assert operads.j_cocompose(point, (2, 1)) is operads.BASEPOINT

    def test_cocompose_arity_mismatch(self):
        with pytest.raises(ValueError, match="do not sum"):
            operads.j_cocompose(operads.j_unit(), (2,))

    def test_permute_reorders_coords(self):
        p = operads.SimplexPoint((Fraction(1, 6), Fraction(1, 3), Fraction(1, 2)))
        q = operads.j_permute(p, (2, 0, 1))
        assert sorted(q.coords) == sorted(p.coords)
        assert q.arity == 3


class TestIntervalFamilies:
    def test_construction_guards(self):
        with pytest.raises(ValueError, match="bad interval"):
            operads.IntervalFamily(((Fraction(1, 2), Fraction(1, 2)),))
        with pytest.raises(ValueError, match="bad interval"):
            operads.IntervalFamily(((Fraction(-1, 4), Fraction(1, 2)),))
        with pytest.raises(ValueError, match="arity"):
            operads.IntervalFamily(())

    def test_basepoint_when_no_common_interior(self):
        disjoint = operads.IntervalFamily(
            ((Fraction(0), Fraction(1, 3)), (Fraction(1, 2), Fraction(1)))
        )
        assert disjoint.is_basepoint
        nested = operads.IntervalFamily(
            ((Fraction(0), Fraction(1, 2)), (Fraction(1, 4), Fraction(1)))
        )
        assert not nested.is_basepoint

    def test_compose_rescales_affinely(self):
        outer = operads.IntervalFamily(((Fraction(0), Fraction(1, 2)),))
        inner = operads.IntervalFamily(((Fraction(1, 2), Fraction(1)),))
        out = operads.q_compose(outer, [inner])
        assert out.pairs == ((Fraction(1, 4), Fraction(1, 2)),)

    def test_basepoint_absorbs(self):
        assert operads.q_compose(operads.BASEPOINT, [operads.q_unit()]) is operads.BASEPOINT

    def test_from_simplex_uses_left_anchored_intervals(self):
        p = operads.SimplexPoint((Fraction(1, 3), Fraction(2, 3)))
        fam = operads.q_from_simplex(p)
        assert fam.pairs == (
            (Fraction(0), Fraction(1, 3)),
            (Fraction(0), Fraction(2, 3)),
        )
        boundary = operads.SimplexPoint((Fraction(0), Fraction(1)))
        assert operads.q_from_simplex(boundary) is operads.BASEPOINT

    def test_inclusion_commutes_with_composition(self, rng):
        for _ in range(25):
            outer = operads.sample_simplex(rng, 3, boundary_rate=0)
            inners = [operads.sample_simplex(rng, 2, boundary_rate=0) for _ in range(3)]
            lhs = operads.q_from_simplex(operads.j_compose(outer, inners))
            rhs = operads.q_compose(
                operads.q_from_simplex(outer),
                [operads.q_from_simplex(p) for p in inners],
            )
            assert operads.q_equal(lhs, rhs)


class TestSamplers:
    def test_sample_simplex_interior_and_boundary(self, rng):
        seen_boundary = False
        for _ in range(60):
            p = operads.sample_simplex(rng, 3)
            assert sum(p.coords) == 1
            seen_boundary = seen_boundary or p.is_basepoint
        assert seen_boundary

    def test_sample_intervals_valid(self, rng):
        for _ in range(40):
            fam = operads.sample_intervals(rng, 3)
            for s, t in fam.pairs:
                assert 0 <= s < t <= 1

    def test_samplers_are_deterministic(self):
        a = operads.sample_simplex(random.Random(7), 4)
        b = operads.sample_simplex(random.Random(7), 4)
        assert a == b


class TestCheckRunner:
    def test_full_run_passes(self):
        report = operads.run_operad_checks(seed=0, budget=400, max_arity=5)
        assert report.passed
        assert report.failures == []
        assert report.total_trials >= 400

    def test_run_is_deterministic(self):
        one = operads.run_operad_checks(seed=11, budget=200).to_json()
        two = operads.run_operad_checks(seed=11, budget=200).to_json()
        assert one == two

    def test_other_seeds_pass_too(self):
        for seed in (1, 2, 3):
            assert operads.run_operad_checks(seed=seed, budget=150).passed

    def test_report_serialization(self):
        doc = operads.run_operad_checks(seed=0, budget=100).to_json()
        assert set(doc) == {"failures", "passed", "seed", "total_trials", "trials"}
        assert doc["seed"] == 0
        assert doc["passed"] is True
