import math

import numpy as np
import pytest

from tetmedial import SixEdgeLengths

SQ2 = math.sqrt(2.0)
SQ3 = math.sqrt(3.0)

REGULAR = SixEdgeLengths(1, 1, 1, 1, 1, 1)
# P0=(0,0,1), P1=(0,0,0), P2=(0,1,0), P3=(1,0,0)
CORNER = SixEdgeLengths(1, SQ2, SQ2, 1, SQ2, 1)
CORNER_POINTS = np.array([[0, 0, 1], [0, 0, 0], [0, 1, 0], [1, 0, 0]], dtype=float)
# P0=(0,0,1), P1=(0,0,0), P2=(1,0,0), P3=(1,1,0)
SKEW = SixEdgeLengths(1, SQ2, 1, 1, SQ3, SQ2)
SKEW_POINTS = np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0], [1, 1, 0]], dtype=float)
# four coplanar points P0=(1,1,0), P1=(0,0,0), P2=(0,1,0), P3=(1,0,0)
COPLANAR = SixEdgeLengths(SQ2, 1, SQ2, 1, 1, 1)
COPLANAR_POINTS = np.array([[1, 1, 0], [0, 0, 0], [0, 1, 0], [1, 0, 0]], dtype=float)

EDGES = {"a": (0, 1), "b": (0, 2), "c": (2, 3), "d": (1, 2), "e": (0, 3), "f": (1, 3)}
OTHER_EDGES = {"de": "abcf", "ac": "bdef", "bf": "acde"}


def np_lengths(points):
    """Six labeled distances, via numpy."""
    return [float(np.linalg.norm(points[i] - points[j])) for i, j in (EDGES[k] for k in "abcdef")]


def np_volume(points):
    return abs(float(np.linalg.det(points[1:] - points[0]))) / 6.0


def np_medial_area(points, pair):
    """Cross-product area of the midpoints of the four other edges.

    Seen from any one corner of a parallelogram, the two sides and the
    diagonal pairwise span the same area, so the midpoint order is irrelevant.
    """
    mids = [0.5 * (points[i] + points[j]) for i, j in (EDGES[k] for k in OTHER_EDGES[pair])]
    spans = [mids[k] - mids[0] for k in (1, 2, 3)]
    return float(np.linalg.norm(np.cross(spans[0], spans[1])))


def np_cayley_menger(lengths):
    sq = np.zeros((4, 4))
    for k, (i, j) in EDGES.items():
        sq[i, j] = sq[j, i] = getattr(lengths, k) ** 2
    m = np.ones((5, 5))
    m[0, 0] = 0.0
    m[1:, 1:] = sq
    return float(np.linalg.det(m))


def np_random_points(n, seed=20261018, bounds=1.0, min_volume=1e-3):
    """Well-conditioned random tetrahedra from numpy's generator."""
    gen = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        pts = gen.uniform(-bounds, bounds, size=(4, 3))
        if np_volume(pts) > min_volume * bounds**3:
            out.append(pts)
    return out


@pytest.fixture(scope="session")
def random_points():
    return np_random_points(200)
