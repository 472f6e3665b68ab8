"""Closed-form tetrahedron mensuration from the six edge lengths.

Edge labels follow one fixed vertex convention::

              P0
             /|\\
          a / | \\ b          a = |P0 P1|    d = |P1 P2|
           /  e  \\           b = |P0 P2|    e = |P0 P3|
         P1---d---P2          c = |P2 P3|    f = |P1 P3|
           \\  |  /
          f \\ | / c
             \\|/
              P3

Opposite (non-incident) pairs are ``(d, e)``, ``(a, c)`` and ``(b, f)``;
the faces are ``abd``, ``aef``, ``bce`` and ``cdf``.

Choosing one opposite pair selects a medial parallelogram: its corners are
the midpoints of the other four edges. Its area is

    (1/8) * sqrt(4 d^2 e^2 - (b^2 + f^2 - a^2 - c^2)^2)

for the ``(d, e)`` pair, and the analogous expression under relabeling for
the other two. The published statement of this result carries a prefactor
of 1/16; working the derivation through (and checking the regular
tetrahedron, whose medial square has area exactly 1/4) gives 1/8, which is
what is implemented here. ``tests/test_prefactor.py`` keeps the 1/16 variant
around to show that it fails the coordinate oracle by a factor of two.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from tetmedial import vector
from tetmedial.errors import (
    DegenerateFrame,
    NegativeRadicand,
    NonPositiveLength,
    NotATriangle,
    NotRealizable,
)
from tetmedial.vector import Point3, Vec3

#: Relative tolerance for clamping radicands and Cayley-Menger values.
CLAMP_RTOL = 1e-12


class SixEdgeLengths(NamedTuple):
    """Edge lengths ``a..f`` in the labeling shown in the module docstring.

    Construction does not validate; operations that need positive finite
    lengths raise :class:`NonPositiveLength` themselves.
    """

    a: float
    b: float
    c: float
    d: float
    e: float
    f: float

    @property
    def scale(self) -> float:
        """The natural length unit of the tetrahedron (its longest edge)."""
        return max(self)

    def scaled(self, factor: float) -> "SixEdgeLengths":
        return SixEdgeLengths(*(factor * x for x in self))


#: Vertex indices (into P0..P3) of each labeled edge.
EDGE_VERTICES: dict[str, tuple[int, int]] = {
    "a": (0, 1),
    "b": (0, 2),
    "c": (2, 3),
    "d": (1, 2),
    "e": (0, 3),
    "f": (1, 3),
}

#: Faces keyed by their edge letters.
FACES: tuple[str, ...] = ("abd", "aef", "bce", "cdf")


class OppositePair(enum.Enum):
    """One of the three pairs of non-incident edges."""

    DE = "de"
    AC = "ac"
    BF = "bf"

    @property
    def edges(self) -> tuple[str, str]:
        return self.value[0], self.value[1]

    @property
    def cycle(self) -> tuple[str, str, str, str]:
        """The four remaining edges, ordered so neighbours share a face.

        The order also makes ``m[1] - m[0]`` half the first chosen edge and
        ``m[0] - m[3]`` half the second, where ``m`` are the midpoints.
        """
        return _CYCLES[self]

    @classmethod
    def parse(cls, text: str) -> "OppositePair":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown edge pair {text!r}; expected de, ac or bf") from None


_CYCLES = {
    OppositePair.DE: ("a", "b", "c", "f"),
    OppositePair.AC: ("b", "d", "f", "e"),
    OppositePair.BF: ("a", "d", "c", "e"),
}


class Status(str, enum.Enum):
    REALIZABLE = "Realizable"
    DEGENERATE = "Degenerate"
    NOT_REALIZABLE = "NotRealizable"


@dataclass(frozen=True)
class RealizabilityReport:
    face_ok: tuple[bool, bool, bool, bool]
    cm_value: float
    volume: float | None
    status: Status

    @property
    def failing_faces(self) -> list[str]:
        return [name for name, ok in zip(FACES, self.face_ok) if not ok]


def check_lengths(lengths: Sequence[float]) -> None:
    """Raise :class:`NonPositiveLength` unless all lengths are positive and finite."""
    # A NaN anywhere makes the sum NaN and fails the fast path.
    if min(lengths) > 0.0 and sum(lengths) < math.inf:
        return
    for label, value in zip("abcdef", lengths):
        if not (math.isfinite(value) and value > 0.0):
            raise NonPositiveLength(f"edge {label} must be positive and finite, got {value!r}")


_FACE_INDEX = {face: tuple("abcdef".index(letter) for letter in face) for face in FACES}


def _face_lengths(lengths: SixEdgeLengths, face: str) -> tuple[float, float, float]:
    i, j, k = _FACE_INDEX[face]
    return lengths[i], lengths[j], lengths[k]


def _strict_triangle(l1: float, l2: float, l3: float) -> bool:
    return l1 + l2 > l3 and l1 + l3 > l2 and l2 + l3 > l1


def cayley_menger(lengths: SixEdgeLengths) -> float:
    """The 5x5 bordered Cayley-Menger determinant, equal to 288 V^2.

    Evaluated as 8 times the Gram determinant of the three edge vectors
    leaving P0, which is the same polynomial with far fewer operations.
    """
    a2, b2, c2, d2, e2, f2 = (x * x for x in lengths)
    g12 = 0.5 * (a2 + b2 - d2)
    g13 = 0.5 * (a2 + e2 - f2)
    g23 = 0.5 * (b2 + e2 - c2)
    det = (
        a2 * (b2 * e2 - g23 * g23)
        - g12 * (g12 * e2 - g23 * g13)
        + g13 * (g12 * g23 - b2 * g13)
    )
    return 8.0 * det


def validate_edge_lengths(lengths: SixEdgeLengths, rel_tol: float = CLAMP_RTOL) -> RealizabilityReport:
    """Classify six edge lengths as a proper, flat, or impossible tetrahedron.

    The degeneracy threshold on the Cayley-Menger value is
    ``rel_tol * scale**6``.
    """
    check_lengths(lengths)
    lengths = SixEdgeLengths(*lengths)
    a, b, c, d, e, f = lengths
    face_ok = (
        _strict_triangle(a, b, d),
        _strict_triangle(a, e, f),
        _strict_triangle(b, c, e),
        _strict_triangle(c, d, f),
    )
    cm = cayley_menger(lengths)
    tol = rel_tol * lengths.scale**6

    volume = math.sqrt(max(cm, 0.0) / 288.0) if cm >= -tol else None
    if volume is not None and cm <= tol:
        volume = 0.0

    if not all(face_ok) or cm < -tol:
        status = Status.NOT_REALIZABLE
    elif cm > tol:
        status = Status.REALIZABLE
    else:
        status = Status.DEGENERATE
    return RealizabilityReport(face_ok, cm, volume, status)  # type: ignore[arg-type]


def cayley_menger_volume(lengths: SixEdgeLengths, rel_tol: float = CLAMP_RTOL) -> float:
    check_lengths(lengths)
    lengths = SixEdgeLengths(*lengths)
    cm = cayley_menger(lengths)
    tol = rel_tol * lengths.scale**6
    if cm < -tol:
        raise NotRealizable(f"Cayley-Menger determinant {cm!r} is negative")
    if cm <= tol:
        return 0.0
    return math.sqrt(cm / 288.0)


def heron_face_area(l1: float, l2: float, l3: float, rel_tol: float = CLAMP_RTOL) -> float:
    """Triangle area from its side lengths.

    Uses the cancellation-free ordering of Heron's formula (sides sorted
    so that ``a >= b >= c``). Triples that are flat within
    ``rel_tol * a`` return 0.
    """
    check_lengths((l1, l2, l3))
    c, b, a = sorted((l1, l2, l3))
    slack = c - (a - b)
    if slack < -rel_tol * a:
        raise NotATriangle(f"({l1!r}, {l2!r}, {l3!r}) violates the triangle inequality")
    if slack <= 0.0:
        return 0.0
    product = (a + (b + c)) * slack * (c + (a - b)) * (a + (b - c))
    return 0.25 * math.sqrt(product)


def face_areas(lengths: SixEdgeLengths, rel_tol: float = CLAMP_RTOL) -> dict[str, float]:
    """Areas of the four faces keyed ``abd``, ``aef``, ``bce``, ``cdf``."""
    return {face: heron_face_area(*_face_lengths(lengths, face), rel_tol=rel_tol) for face in FACES}


def _pair_terms(lengths: SixEdgeLengths, pair: OppositePair) -> tuple[float, float, float]:
    # (first chosen length, second chosen length, bracket). Sums are grouped
    # by opposite pair so relabelings within a pair give bit-identical results.
    a, b, c, d, e, f = lengths
    ac = a * a + c * c
    bf = b * b + f * f
    de = d * d + e * e
    if pair is OppositePair.DE:
        return d, e, bf - ac
    if pair is OppositePair.AC:
        return a, c, bf - de
    if pair is OppositePair.BF:
        return b, f, ac - de
    raise TypeError(f"expected an OppositePair, got {pair!r}")


def medial_radicand(lengths: SixEdgeLengths, pair: OppositePair) -> float:
    """``4 p^2 q^2 - bracket^2`` for the chosen pair ``(p, q)``, unclamped."""
    p, q, bracket = _pair_terms(lengths, pair)
    two_pq = 2.0 * p * q
    bracket = abs(bracket)
    return (two_pq - bracket) * (two_pq + bracket)


def medial_area(lengths: SixEdgeLengths, pair: OppositePair, rel_tol: float = CLAMP_RTOL) -> float:
    """Area of the medial parallelogram selected by ``pair``.

    Raises :class:`NegativeRadicand` when the radicand is below
    ``-rel_tol * scale**4``, which only happens for impossible lengths.
    """
    check_lengths(lengths)
    radicand = medial_radicand(lengths, pair)
    if radicand < 0.0:
        if radicand < -rel_tol * max(lengths) ** 4:
            raise NegativeRadicand(
                f"radicand {radicand!r} for pair {pair.value} is negative; lengths are not realizable"
            )
        return 0.0
    return 0.125 * math.sqrt(radicand)


def medial_area_all(lengths: SixEdgeLengths, rel_tol: float = CLAMP_RTOL) -> tuple[float, float, float]:
    """Medial areas for the ``de``, ``ac`` and ``bf`` pairs, in that order."""
    return tuple(medial_area(lengths, pair, rel_tol) for pair in OppositePair)  # type: ignore[return-value]


def opposite_edge_cosine(lengths: SixEdgeLengths, pair: OppositePair, rel_tol: float = CLAMP_RTOL) -> float:
    """Cosine of the (acute) angle between the lines of the chosen edges.

    Together with :func:`medial_area` this satisfies
    ``area == p * q / 4 * sin(theta)``.
    """
    # Same realizability check as medial_area.
    medial_area(lengths, pair, rel_tol)
    p, q, bracket = _pair_terms(lengths, pair)
    return min(1.0, abs(bracket) / (2.0 * p * q))


@dataclass(frozen=True)
class EmbeddedTet:
    """Apex-on-axis coordinates of a tetrahedron.

    Vertices are ``P0 = (0, 0, z)``, ``P1 = (x, y, 0)``, ``P2 = (x, y + d, 0)``
    and ``P3 = (xi, upsilon, 0)``: the base lies in the xy-plane with edge
    ``d`` parallel to the y-axis and the apex above the origin.
    """

    x: float
    y: float
    z: float
    xi: float
    upsilon: float
    lengths: SixEdgeLengths

    @property
    def vertices(self) -> tuple[Point3, Point3, Point3, Point3]:
        d = self.lengths.d
        return (
            Vec3(0.0, 0.0, self.z),
            Vec3(self.x, self.y, 0.0),
            Vec3(self.x, self.y + d, 0.0),
            Vec3(self.xi, self.upsilon, 0.0),
        )

    def residuals(self) -> dict[str, float]:
        """Squared-length mismatch of each coordinate relation, keyed by edge."""
        a, b, c, d, e, f = self.lengths
        x, y, z, xi, ups = self.x, self.y, self.z, self.xi, self.upsilon
        return {
            "f": (x - xi) ** 2 + (y - ups) ** 2 - f * f,
            "c": (x - xi) ** 2 + (y + d - ups) ** 2 - c * c,
            "a": x * x + y * y + z * z - a * a,
            "b": x * x + (y + d) ** 2 + z * z - b * b,
            "e": xi * xi + ups * ups + z * z - e * e,
        }


def embed_canonical(lengths: SixEdgeLengths, rel_tol: float = CLAMP_RTOL) -> EmbeddedTet:
    """Place the tetrahedron in the apex-on-axis frame of :class:`EmbeddedTet`.

    ``y`` and ``upsilon`` come straight from differences of squared lengths;
    ``x``, ``xi`` and ``z`` from the remaining three relations with
    ``z >= 0`` and ``x - xi >= 0``. Flat tetrahedra raise
    :class:`DegenerateFrame` since the apex would sit in the base plane.
    """
    report = validate_edge_lengths(lengths, rel_tol)
    if report.status is Status.NOT_REALIZABLE:
        raise NotRealizable(f"lengths {tuple(lengths)!r} do not form a tetrahedron")
    if report.status is Status.DEGENERATE:
        raise DegenerateFrame("flat tetrahedron: the apex cannot be placed off the base plane")
    lengths = SixEdgeLengths(*lengths)
    a, b, c, d, e, f = lengths
    scale = lengths.scale
    if d <= rel_tol * scale:
        raise DegenerateFrame(f"edge d={d!r} is too short to anchor the frame")

    y = (b * b - a * a - d * d) / (2.0 * d)
    ups = ((b * b + f * f) - (a * a + c * c)) / (2.0 * d)
    sep2 = f * f - (y - ups) ** 2
    if sep2 <= (rel_tol * scale) ** 2:
        raise DegenerateFrame("face cdf is flat; x and xi are not separable")
    sep = math.sqrt(sep2)
    # x^2 - xi^2 = (x - xi)(x + xi)
    total = ((a * a - y * y) - (e * e - ups * ups)) / sep
    x = 0.5 * (total + sep)
    xi = 0.5 * (total - sep)
    z2 = a * a - y * y - x * x
    if z2 <= (rel_tol * scale) ** 2:
        raise DegenerateFrame("apex height vanishes in the canonical frame")
    return EmbeddedTet(x=x, y=y, z=math.sqrt(z2), xi=xi, upsilon=ups, lengths=lengths)


@dataclass(frozen=True)
class MedialParallelogram:
    """Midpoint parallelogram with corners in face-adjacent cyclic order.

    ``u = vertices[1] - vertices[0]`` is half the first chosen edge and
    ``v = vertices[0] - vertices[3]`` half the second.
    """

    pair: OppositePair
    vertices: tuple[Point3, Point3, Point3, Point3]
    u: Vec3
    v: Vec3

    @property
    def area(self) -> float:
        return vector.norm(vector.cross(self.u, self.v))

    @property
    def center(self) -> Point3:
        p, q, r, s = self.vertices
        return Vec3(*(0.25 * (p[i] + q[i] + r[i] + s[i]) for i in range(3)))

    @property
    def sides(self) -> tuple[Vec3, Vec3, Vec3, Vec3]:
        p = self.vertices
        return tuple(vector.sub(p[(i + 1) % 4], p[i]) for i in range(4))  # type: ignore[return-value]


def parallelogram_from_points(points: Sequence[Point3], pair: OppositePair) -> MedialParallelogram:
    """Build the medial parallelogram of four labeled vertices in any frame."""
    mids = []
    for letter in pair.cycle:
        i, j = EDGE_VERTICES[letter]
        mids.append(vector.midpoint(points[i], points[j]))
    u = vector.sub(mids[1], mids[0])
    v = vector.sub(mids[0], mids[3])
    return MedialParallelogram(pair, tuple(mids), u, v)  # type: ignore[arg-type]


def medial_parallelogram(embedded: EmbeddedTet, pair: OppositePair) -> MedialParallelogram:
    return parallelogram_from_points(embedded.vertices, pair)
