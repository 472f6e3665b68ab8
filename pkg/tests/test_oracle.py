import math

import numpy as np
import pytest

from tetmedial import (
    FourPoints,
    NotRealizable,
    OppositePair,
    SixEdgeLengths,
    Status,
    compare_formula_vs_oracle,
    direct_medial_area,
    edge_lengths_of,
    embed_reference,
    random_tetrahedron,
    run_sweep,
    validate_edge_lengths,
)
from tetmedial import rng
from tetmedial.oracle import coordinate_volume, embed_reference_flagged

from conftest import (
    COPLANAR,
    CORNER,
    CORNER_POINTS,
    REGULAR,
    SKEW,
    SKEW_POINTS,
    SQ2,
    np_lengths,
    np_medial_area,
    np_random_points,
)

DE = OppositePair.DE


def four(points) -> FourPoints:
    return FourPoints(*(tuple(map(float, p)) for p in points))


class TestEdgeLengthsOf:
    def test_corner(self):
        assert edge_lengths_of(four(CORNER_POINTS)) == pytest.approx(list(CORNER), abs=1e-15)

    def test_skew(self):
        assert edge_lengths_of(four(SKEW_POINTS)) == pytest.approx(list(SKEW), abs=1e-15)

    def test_regular(self):
        h = math.sqrt(2 / 3)
        pts = [(0.5, math.sqrt(3) / 6, h), (0, 0, 0), (1, 0, 0), (0.5, math.sqrt(3) / 2, 0)]
        assert edge_lengths_of(four(pts)) == pytest.approx([1] * 6, abs=1e-15)


class TestEmbedReference:
    def test_corner_round_trip(self):
        pts = np.array(embed_reference(CORNER))
        assert np_lengths(pts) == pytest.approx(list(CORNER), abs=1e-12)
        assert pts[0, 2] >= 0

    def test_regular_volume(self):
        pts = np.array(embed_reference(REGULAR))
        assert abs(np.linalg.det(pts[1:] - pts[0])) / 6 == pytest.approx(SQ2 / 12, rel=1e-12)

    def test_coplanar_flagged(self):
        emb = embed_reference_flagged(COPLANAR)
        assert emb.degenerate
        assert abs(emb.points.p0[2]) <= 1e-9
        assert np_lengths(np.array(emb.points)) == pytest.approx(list(COPLANAR), rel=1e-9)

    def test_rejects_unrealizable(self):
        with pytest.raises(NotRealizable, match="aef"):
            embed_reference(SixEdgeLengths(1, 1, 1, 1, 1, 10))

    def test_round_trip_random(self, random_points):
        for pts in random_points:
            lengths = SixEdgeLengths(*np_lengths(pts))
            assert list(edge_lengths_of(embed_reference(lengths))) == pytest.approx(list(lengths), rel=1e-9)


class TestDirectMedialArea:
    def test_corner(self):
        assert direct_medial_area(four(CORNER_POINTS), DE) == pytest.approx(SQ2 / 4, rel=1e-15)

    def test_skew(self):
        assert direct_medial_area(four(SKEW_POINTS), DE) == pytest.approx(SQ2 / 4, rel=1e-15)

    @pytest.mark.parametrize("pair", list(OppositePair))
    def test_regular(self, pair):
        assert direct_medial_area(embed_reference(REGULAR), pair) == pytest.approx(0.25, rel=1e-12)

    @pytest.mark.parametrize("pair", list(OppositePair))
    def test_matches_numpy(self, pair, random_points):
        for pts in random_points[:50]:
            assert direct_medial_area(four(pts), pair) == pytest.approx(
                np_medial_area(pts, pair.value), rel=1e-12
            )

    def test_flat_input_never_raises(self):
        pts = four([(0, 0, 0)] * 4)
        assert direct_medial_area(pts, DE) == 0.0


class TestRandomTetrahedron:
    def test_deterministic(self):
        s = rng.seed_state(99)
        assert random_tetrahedron(s, 2.0) == random_tetrahedron(s, 2.0)

    def test_contract(self):
        state = rng.seed_state(123)
        for _ in range(200):
            pts, state = random_tetrahedron(state, 3.0)
            assert all(-3.0 <= c <= 3.0 for p in pts for c in p)
            assert coordinate_volume(pts) > 1e-3 * 27
            assert validate_edge_lengths(edge_lengths_of(pts)).status is Status.REALIZABLE

    def test_state_advances(self):
        s0 = rng.seed_state(5)
        p1, s1 = random_tetrahedron(s0, 1.0)
        p2, _ = random_tetrahedron(s1, 1.0)
        assert p1 != p2

    def test_bad_bounds(self):
        with pytest.raises(ValueError):
            random_tetrahedron(0, 0.0)


class TestCompare:
    def test_regular(self):
        rec = compare_formula_vs_oracle(REGULAR, DE, 1e-9)
        assert rec.passed and rec.status == "pass"
        assert rec.formula_area == pytest.approx(0.25, abs=1e-15)
        assert rec.oracle_area == pytest.approx(0.25, abs=1e-15)

    def test_skew(self):
        rec = compare_formula_vs_oracle(SKEW, DE, 1e-9)
        assert rec.passed
        assert rec.formula_area == pytest.approx(SQ2 / 4, rel=1e-12)
        assert rec.oracle_area == pytest.approx(SQ2 / 4, rel=1e-12)

    def test_propagates_not_realizable(self):
        with pytest.raises(NotRealizable):
            compare_formula_vs_oracle(SixEdgeLengths(1, 1, 1, 1, 1, 10), DE, 1e-9)


class TestSweep:
    def test_single(self):
        summary = run_sweep(seed=1, n=1, bounds=1.0, tol=1e-9)
        assert summary.count == 1
        assert summary.comparisons == 3
        assert summary.failures == []

    def test_deterministic(self):
        assert run_sweep(7, 200, 1.0, 1e-9).to_dict() == run_sweep(7, 200, 1.0, 1e-9).to_dict()

    def test_failures_iff_above_tolerance(self):
        summary = run_sweep(7, 200, 1.0, 0.0)
        assert summary.max_rel_error > 0.0
        assert summary.failures
        assert all(rec.rel_error > 0.0 for rec in summary.failures)
        assert max(rec.rel_error for rec in summary.failures) == summary.max_rel_error

    def test_bounds_scale(self):
        summary = run_sweep(3, 100, 50.0, 1e-9)
        assert summary.failures == []

    def test_n_must_be_positive(self):
        with pytest.raises(ValueError):
            run_sweep(1, 0)
