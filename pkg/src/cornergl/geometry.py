"""Sector, corner-region and wedge geometry in blow-up units.

Conventions used throughout the package:

* the sector has its vertex at the origin, first leg on the positive
  x-axis and opening angle ``beta``, i.e. S = {0 < theta(x) < beta};
* the boundary is parameterized by signed arc length ``s`` with
  p(s) = (-s, 0) for s <= 0 (first leg) and p(s) on the second leg for
  s >= 0; the frame on the first leg is t = (-1, 0), n = (0, 1);
* tubular coordinates map x(s, t) = s*t_vec + t*n_vec, so (s, t) =
  (-2, 1) lands on (2, 1) for any opening angle.

All domains are plain tagged polygons; edge tags are one of
``outer`` (sector legs, natural/Neumann), ``bd`` (tube ends at
|s| = L), ``inner`` (offset boundary at t = ell) and ``artificial``
(truncation arc of the infinite sector, Dirichlet).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

TAGS = ("outer", "bd", "inner", "artificial")


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class SectorGeometry:
    """Opening angle plus truncation parameters, all in blow-up units.

    ``L``/``ell`` describe corner regions and wedges, ``R`` the radius at
    which the infinite sector is truncated.  Only the parameters a given
    domain builder needs have to be set.
    """

    beta: float
    L: float | None = None
    ell: float | None = None
    R: float | None = None

    def __post_init__(self):
        if not 0.0 < self.beta < np.pi + 1e-12:
            raise GeometryError(f"opening angle must lie in (0, pi], got {self.beta}")
        for name in ("L", "ell", "R"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise GeometryError(f"{name} must be positive, got {v}")

    @property
    def half_tan(self) -> float:
        return float(np.tan(self.beta / 2))

    def require_corner(self):
        """Validate the admissible-set constraint ell < L tan(beta/2)."""
        if self.L is None or self.ell is None:
            raise GeometryError("corner region needs both L and ell")
        if self.ell >= self.L * self.half_tan:
            raise GeometryError(
                f"inner boundary self-intersects: ell={self.ell} >= "
                f"L*tan(beta/2)={self.L * self.half_tan:.6g}"
            )

    # unit frames; leg 1 carries s <= 0, leg 2 carries s >= 0
    def frames(self):
        b = self.beta
        t1 = np.array([-1.0, 0.0])
        n1 = np.array([0.0, 1.0])
        t2 = np.array([np.cos(b), np.sin(b)])
        n2 = np.array([np.sin(b), -np.cos(b)])
        return (t1, n1), (t2, n2)

    @property
    def bisectrix(self) -> np.ndarray:
        return np.array([np.cos(self.beta / 2), np.sin(self.beta / 2)])


@dataclass(frozen=True)
class TaggedPolygon:
    """Closed polygon with one tag per edge (edge i joins vertex i to i+1)."""

    vertices: np.ndarray
    edge_tags: tuple[str, ...]

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        object.__setattr__(self, "vertices", v)
        if len(self.edge_tags) != len(v):
            raise GeometryError("need one tag per edge")
        unknown = set(self.edge_tags) - set(TAGS)
        if unknown:
            raise GeometryError(f"unknown edge tags {unknown}")

    @property
    def n_edges(self) -> int:
        return len(self.vertices)

    def edges(self) -> Iterable[tuple[np.ndarray, np.ndarray, str]]:
        v = self.vertices
        for i in range(len(v)):
            yield v[i], v[(i + 1) % len(v)], self.edge_tags[i]

    def perimeter(self) -> float:
        v = self.vertices
        return float(np.sum(np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1)))

    def area(self) -> float:
        x, y = self.vertices[:, 0], self.vertices[:, 1]
        return float(0.5 * abs(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y)))

    def contains(self, pts: np.ndarray, radius: float = 0.0) -> np.ndarray:
        from matplotlib.path import Path

        return Path(self.vertices).contains_points(np.atleast_2d(pts), radius=radius)

    def boundary_distance(self, pts: np.ndarray) -> np.ndarray:
        """Unsigned distance from each point to the polygon boundary."""
        pts = np.atleast_2d(pts)
        d = np.full(len(pts), np.inf)
        for a, b, _ in self.edges():
            d = np.minimum(d, _point_segment_distance(pts, a, b))
        return d


def _point_segment_distance(pts, a, b):
    ab = b - a
    denom = float(ab @ ab)
    if denom == 0.0:
        return np.linalg.norm(pts - a, axis=1)
    u = np.clip((pts - a) @ ab / denom, 0.0, 1.0)
    proj = a + u[:, None] * ab
    return np.linalg.norm(pts - proj, axis=1)


# ----------------------------------------------------------------------
# Tubular coordinates
# ----------------------------------------------------------------------

def tubular_to_cartesian(geom: SectorGeometry, s, t):
    """Map tubular (s, t) to cartesian points; vectorized.

    ``s < 0`` lives on the first (horizontal) leg, ``s > 0`` on the
    second.  ``s = 0`` with ``t = 0`` is the vertex.
    """
    scalar = np.isscalar(s) and np.isscalar(t)
    sb, tb = np.broadcast_arrays(np.atleast_1d(np.asarray(s, dtype=float)),
                                 np.atleast_1d(np.asarray(t, dtype=float)))
    (t1, n1), (t2, n2) = geom.frames()
    on1 = sb <= 0
    out = np.empty(sb.shape + (2,))
    out[on1] = sb[on1, None] * t1 + tb[on1, None] * n1
    out[~on1] = sb[~on1, None] * t2 + tb[~on1, None] * n2
    return out[0] if scalar else out


def cartesian_to_tubular(geom: SectorGeometry, x, strict: bool = True):
    """Inverse tubular map: nearest-leg (s, t) for points in the sector.

    Points on the bisectrix are ambiguous; ``strict=True`` rejects them
    (and the vertex), ``strict=False`` ties to the first leg, which is
    what boundary-datum evaluation uses.
    """
    x = np.atleast_2d(np.asarray(x, dtype=float))
    (t1, n1), (t2, n2) = geom.frames()
    # leg-1 chart: s = x.t1, t = x.n1 (s<=0 there); leg-2 analogous
    s1 = x @ t1
    t1c = x @ n1
    s2 = x @ t2
    t2c = x @ n2
    r = np.linalg.norm(x, axis=1)
    if strict and np.any(r < 1e-14):
        raise GeometryError("vertex has no tubular coordinates")
    # angle relative to the bisectrix decides the leg
    ang = np.arctan2(x[:, 1], x[:, 0])
    db = ang - geom.beta / 2
    if strict and np.any(np.abs(db) < 1e-12):
        raise GeometryError("points on the bisectrix are ambiguous")
    use1 = db <= 0
    s = np.where(use1, s1, s2)
    t = np.where(use1, t1c, t2c)
    return s, t


def boundary_point(geom: SectorGeometry, s):
    """p(s): point on the sector boundary at signed arc length s."""
    return tubular_to_cartesian(geom, s, np.zeros_like(np.asarray(s, dtype=float)))


# ----------------------------------------------------------------------
# Domain builders
# ----------------------------------------------------------------------

def build_corner_region(geom: SectorGeometry) -> TaggedPolygon:
    """Hexagon A-V-B-E-D-C around the vertex: |s| < L, 0 < t < ell.

    Outer boundary AV+VB runs along the sector legs; BE and CA are the
    tube ends at s = +L / -L; ED+DC is the inner offset which meets the
    bisectrix at D.
    """
    geom.require_corner()
    L, ell, b = geom.L, geom.ell, geom.beta
    A = np.array([L, 0.0])
    V = np.array([0.0, 0.0])
    B = L * np.array([np.cos(b), np.sin(b)])
    E = B + ell * np.array([np.sin(b), -np.cos(b)])
    D = ell / np.sin(b / 2) * geom.bisectrix
    C = np.array([L, ell])
    return TaggedPolygon(
        np.array([A, V, B, E, D, C]),
        ("outer", "outer", "bd", "inner", "inner", "bd"),
    )


def build_wedge(geom: SectorGeometry) -> TaggedPolygon:
    """Kite A-V-B-D': the corner region with the inner boundary removed.

    The bd faces are the segments normal to the legs at |s| = L,
    extended until they meet on the bisectrix at D'.
    """
    if geom.L is None or geom.L <= 0:
        raise GeometryError("wedge needs L > 0")
    L, b = geom.L, geom.beta
    if b >= np.pi - 1e-12:
        raise GeometryError("wedge is only defined for beta < pi")
    A = np.array([L, 0.0])
    V = np.array([0.0, 0.0])
    B = L * np.array([np.cos(b), np.sin(b)])
    Dp = L / np.cos(b / 2) * geom.bisectrix
    return TaggedPolygon(np.array([A, V, B, Dp]), ("outer", "outer", "bd", "bd"))


def build_truncated_sector(geom: SectorGeometry, arc_segments: int | None = None,
                           h: float | None = None) -> TaggedPolygon:
    """Sector truncated at radius R; the arc polyline is tagged artificial.

    ``arc_segments`` fixes the arc resolution; when omitted it is chosen
    from ``h`` (chord length about h) or defaults to 64.
    """
    if geom.R is None or geom.R <= 0:
        raise GeometryError("truncated sector needs R > 0")
    R, b = geom.R, geom.beta
    if arc_segments is None:
        arc_segments = max(16, int(np.ceil(b * R / h))) if h else 64
    th = np.linspace(0.0, b, arc_segments + 1)
    arc = R * np.column_stack([np.cos(th), np.sin(th)])
    verts = np.vstack([[0.0, 0.0], arc])
    tags = ("outer",) + ("artificial",) * arc_segments + ("outer",)
    return TaggedPolygon(verts, tags)


def snap_to_lattice(value: float, pitch: float) -> float:
    """Round to the nearest positive multiple of the lattice pitch."""
    return max(1, int(round(value / pitch))) * pitch
