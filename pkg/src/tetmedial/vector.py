"""Minimal 3-vector arithmetic on tuples.

Components map to the unit directions i, j, k. Everything here is a plain
function over :class:`Vec3` so the hot loops in the sweep stay cheap.
"""
from __future__ import annotations

import math
from typing import NamedTuple


class Vec3(NamedTuple):
    x: float
    y: float
    z: float


#: Points and displacement vectors share a representation.
Point3 = Vec3


def add(p: Vec3, q: Vec3) -> Vec3:
    return Vec3(p[0] + q[0], p[1] + q[1], p[2] + q[2])


def sub(p: Vec3, q: Vec3) -> Vec3:
    return Vec3(p[0] - q[0], p[1] - q[1], p[2] - q[2])


def scale(p: Vec3, s: float) -> Vec3:
    return Vec3(p[0] * s, p[1] * s, p[2] * s)


def midpoint(p: Vec3, q: Vec3) -> Vec3:
    return Vec3(0.5 * (p[0] + q[0]), 0.5 * (p[1] + q[1]), 0.5 * (p[2] + q[2]))


def dot(p: Vec3, q: Vec3) -> float:
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]


def cross(p: Vec3, q: Vec3) -> Vec3:
    return Vec3(
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )


def norm(p: Vec3) -> float:
    return math.sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2])


def distance(p: Vec3, q: Vec3) -> float:
    return math.dist(p, q)


def triple(p: Vec3, q: Vec3, r: Vec3) -> float:
    """Scalar triple product p . (q x r)."""
    return dot(p, cross(q, r))
