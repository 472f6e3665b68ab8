"""Coordinate oracle for the closed-form medial area.

The oracle never touches the closed form: it trilaterates the six lengths
into an arbitrary frame (P1 at the origin, P2 on the +y axis, P3 in the
xy-plane, P0 above it), takes midpoints, and measures the parallelogram
with a cross product.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from tetmedial import geometry, rng
from tetmedial.errors import NotRealizable, ResamplingExhausted
from tetmedial.geometry import OppositePair, SixEdgeLengths, Status
from tetmedial.vector import Point3, Vec3

REL_ERROR_FLOOR = 1e-30
MAX_RESAMPLES = 10_000
VOLUME_FLOOR = 1e-3


class FourPoints(NamedTuple):
    """Tetrahedron vertices; ``p0`` is the apex shared by edges a, b, e."""

    p0: Point3
    p1: Point3
    p2: Point3
    p3: Point3


@dataclass(frozen=True)
class OracleEmbedding:
    points: FourPoints
    degenerate: bool


@dataclass(frozen=True)
class ComparisonRecord:
    lengths: SixEdgeLengths
    pair: OppositePair
    formula_area: float
    oracle_area: float
    rel_error: float
    passed: bool

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        return {
            "lengths": list(self.lengths),
            "pair": self.pair.value,
            "formula_area": self.formula_area,
            "oracle_area": self.oracle_area,
            "rel_error": self.rel_error,
            "status": self.status,
        }


@dataclass(frozen=True)
class SweepSummary:
    count: int
    comparisons: int
    max_rel_error: float
    seed: int
    failures: list[ComparisonRecord] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "count": self.count,
            "comparisons": self.comparisons,
            "max_rel_error": self.max_rel_error,
            "failures": [rec.to_dict() for rec in self.failures],
        }


def edge_lengths_of(points: FourPoints) -> SixEdgeLengths:
    p0, p1, p2, p3 = points
    dist = math.dist
    return SixEdgeLengths(
        a=dist(p0, p1),
        b=dist(p0, p2),
        c=dist(p2, p3),
        d=dist(p1, p2),
        e=dist(p0, p3),
        f=dist(p1, p3),
    )


def embed_reference_flagged(lengths: SixEdgeLengths) -> OracleEmbedding:
    """Trilaterate ``lengths``; also report whether the result is flat."""
    report = geometry.validate_edge_lengths(lengths)
    if report.status is Status.NOT_REALIZABLE:
        bad = ", ".join(report.failing_faces) or "Cayley-Menger determinant"
        raise NotRealizable(f"lengths {tuple(lengths)!r} are not realizable ({bad})")
    return OracleEmbedding(_trilaterate(lengths), report.status is Status.DEGENERATE)


def embed_reference(lengths: SixEdgeLengths) -> FourPoints:
    return embed_reference_flagged(lengths).points


def _trilaterate(lengths: SixEdgeLengths) -> FourPoints:
    a, b, c, d, e, f = lengths
    a2, b2, c2, d2, e2, f2 = a * a, b * b, c * c, d * d, e * e, f * f
    # p3 from |p1 p3| = f, |p2 p3| = c
    y3 = (f2 - c2 + d2) / (2.0 * d)
    x3 = math.sqrt(max(f2 - y3 * y3, 0.0))
    # p0 from |p0 p1| = a, |p0 p2| = b, |p0 p3| = e
    y0 = (a2 - b2 + d2) / (2.0 * d)
    x0 = (a2 - e2 + x3 * x3 + y3 * y3 - 2.0 * y0 * y3) / (2.0 * x3)
    z0 = math.sqrt(max(a2 - x0 * x0 - y0 * y0, 0.0))
    return FourPoints(
        Vec3(x0, y0, z0),
        Vec3(0.0, 0.0, 0.0),
        Vec3(0.0, d, 0.0),
        Vec3(x3, y3, 0.0),
    )


# Non-chosen edges of each pair as vertex-index pairs, in face-adjacent order.
_SIDES = {
    OppositePair.DE: ((0, 1), (0, 2), (2, 3), (1, 3)),
    OppositePair.AC: ((0, 2), (1, 2), (1, 3), (0, 3)),
    OppositePair.BF: ((0, 1), (1, 2), (2, 3), (0, 3)),
}


def direct_medial_area(points: FourPoints, pair: OppositePair) -> float:
    """Cross-product area of the midpoint parallelogram, in any frame."""
    (i0, j0), (i1, j1), _, (i3, j3) = _SIDES[pair]
    p, q = points[i0], points[j0]
    m0x, m0y, m0z = 0.5 * (p[0] + q[0]), 0.5 * (p[1] + q[1]), 0.5 * (p[2] + q[2])
    p, q = points[i1], points[j1]
    ux, uy, uz = 0.5 * (p[0] + q[0]) - m0x, 0.5 * (p[1] + q[1]) - m0y, 0.5 * (p[2] + q[2]) - m0z
    p, q = points[i3], points[j3]
    vx, vy, vz = 0.5 * (p[0] + q[0]) - m0x, 0.5 * (p[1] + q[1]) - m0y, 0.5 * (p[2] + q[2]) - m0z
    return math.sqrt(
        (uy * vz - uz * vy) ** 2 + (uz * vx - ux * vz) ** 2 + (ux * vy - uy * vx) ** 2
    )


def coordinate_volume(points: FourPoints) -> float:
    p0, p1, p2, p3 = points
    u = [p1[k] - p0[k] for k in range(3)]
    v = [p2[k] - p0[k] for k in range(3)]
    w = [p3[k] - p0[k] for k in range(3)]
    det = (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )
    return abs(det) / 6.0


def random_tetrahedron(state: rng.RngState, bounds: float) -> tuple[FourPoints, rng.RngState]:
    """Draw vertices uniformly in ``[-bounds, bounds]^3``.

    Draws whose volume is at most ``1e-3 * bounds**3`` are rejected so every
    returned tetrahedron is comfortably non-flat.
    """
    if not bounds > 0.0:
        raise ValueError(f"bounds must be positive, got {bounds!r}")
    floor = VOLUME_FLOOR * bounds**3
    for _ in range(MAX_RESAMPLES):
        coords, state = rng.uniform_block(state, 12, -bounds, bounds)
        points = FourPoints(*(Vec3(*coords[3 * i : 3 * i + 3]) for i in range(4)))
        if coordinate_volume(points) > floor:
            return points, state
    raise ResamplingExhausted(f"no tetrahedron above the volume floor in {MAX_RESAMPLES} draws")


AreaFormula = Callable[[SixEdgeLengths, OppositePair], float]


def _record(
    lengths: SixEdgeLengths,
    pair: OppositePair,
    points: FourPoints,
    tol: float,
    formula: AreaFormula,
) -> ComparisonRecord:
    formula_area = formula(lengths, pair)
    oracle_area = direct_medial_area(points, pair)
    rel_error = abs(formula_area - oracle_area) / max(oracle_area, REL_ERROR_FLOOR)
    return ComparisonRecord(lengths, pair, formula_area, oracle_area, rel_error, rel_error <= tol)


def compare_formula_vs_oracle(
    lengths: SixEdgeLengths,
    pair: OppositePair,
    tol: float,
    formula: AreaFormula = geometry.medial_area,
) -> ComparisonRecord:
    """Check the closed form against the trilaterated cross product.

    ``formula`` is swappable so tests can demonstrate that a wrong
    closed form is caught.
    """
    return _record(lengths, pair, embed_reference(lengths), tol, formula)


def run_sweep(seed: int, n: int, bounds: float = 1.0, tol: float = 1e-9) -> SweepSummary:
    """Compare all three pairs on ``n`` random tetrahedra.

    Lengths are measured from the random vertices and then re-embedded by
    the oracle, so the sampled coordinates never reach the formula.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    state = rng.seed_state(seed)
    max_rel = 0.0
    failures: list[ComparisonRecord] = []
    comparisons = 0
    for _ in range(n):
        sample, state = random_tetrahedron(state, bounds)
        lengths = edge_lengths_of(sample)
        points = embed_reference(lengths)
        for pair in OppositePair:
            formula_area = geometry.medial_area(lengths, pair)
            oracle_area = direct_medial_area(points, pair)
            rel_error = abs(formula_area - oracle_area) / max(oracle_area, REL_ERROR_FLOOR)
            comparisons += 1
            if rel_error > max_rel:
                max_rel = rel_error
            if not rel_error <= tol:
                failures.append(
                    ComparisonRecord(lengths, pair, formula_area, oracle_area, rel_error, False)
                )
    return SweepSummary(count=n, comparisons=comparisons, max_rel_error=max_rel, seed=seed, failures=failures)
