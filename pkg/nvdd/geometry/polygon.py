import math
import logging

import numpy as np

from nvdd.constants import constants
from nvdd.errors import InvalidPolygon, NonPositiveScale
from nvdd.geometry.primitives import Point, Line

logger = logging.getLogger(__name__)


def _as_array(points):
    arr = np.array([[float(p[0]), float(p[1])] for p in points], dtype=float)
    if arr.ndim != 2 or (len(arr) and arr.shape[1] != 2):
        raise InvalidPolygon("Expected a sequence of (x, y) pairs")
    if not np.all(np.isfinite(arr)):
        raise InvalidPolygon("Polygon vertices must be finite")
    return arr


def _tolerance(arr):
    """Absolute tolerance for coordinates of the magnitude found in arr"""
    if len(arr) == 0:
        return constants.EPS_GEOM
    return constants.EPS_GEOM * max(1.0, float(np.abs(arr).max()))


def _signed_area(arr):
    # shoelace relative to the first vertex keeps far-from-origin polygons accurate
    rel = arr - arr[0]
    x, y = rel[:, 0], rel[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def _turns(arr):
    prev = np.roll(arr, 1, axis=0)
    nxt = np.roll(arr, -1, axis=0)
    a = arr - prev
    b = nxt - arr
    cross = a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]
    dot = a[:, 0] * b[:, 0] + a[:, 1] * b[:, 1]
    return a, b, cross, dot


def _is_strictly_convex_ccw(arr):
    if len(arr) < 3:
        return False
    tol = _tolerance(arr)
    a, b, cross, dot = _turns(arr)
    la = np.hypot(a[:, 0], a[:, 1])
    lb = np.hypot(b[:, 0], b[:, 1])
    if np.any(la <= tol):
        return False
    if np.any(cross <= constants.EPS_GEOM * la * lb):
        return False
    # all left turns that wind exactly once
    winding = float(np.sum(np.arctan2(cross, dot)))
    return abs(winding - constants.TWO_PI) < 1e-6


def _simplify(arr, tol):
    """Drop near-duplicate and collinear vertices left over by clipping"""
    while len(arr) >= 3:
        nxt = np.roll(arr, -1, axis=0)
        seg = nxt - arr
        keep = np.hypot(seg[:, 0], seg[:, 1]) > tol
        if not keep.all():
            arr = arr[keep]
            continue
        a, b, cross, _ = _turns(arr)
        keep = cross > constants.EPS_GEOM * np.hypot(a[:, 0], a[:, 1]) * np.hypot(b[:, 0], b[:, 1])
        if keep.all():
            break
        arr = arr[keep]
    return arr


def _contains_many(arr, pts, eps):
    """Mask of pts (k x 2) lying in the CCW polygon arr, eps-inflated"""
    nxt = np.roll(arr, -1, axis=0)
    edges = nxt - arr
    lengths = np.hypot(edges[:, 0], edges[:, 1])
    rel_x = pts[:, 0][:, None] - arr[:, 0][None, :]
    rel_y = pts[:, 1][:, None] - arr[:, 1][None, :]
    inward = (edges[:, 0][None, :] * rel_y - edges[:, 1][None, :] * rel_x) / lengths[None, :]
    return np.all(inward >= -eps, axis=1)


def _clip_array(arr, normal, offset, tol):
    """Sutherland-Hodgman step of a convex CCW array against normal . p <= offset.

    Returns arr itself when nothing is cut and None when nothing is kept.
    """
    d = arr @ normal - offset
    inside = d <= tol
    if inside.all():
        return arr
    if not inside.any():
        return None
    nxt = np.roll(arr, -1, axis=0)
    d_next = np.roll(d, -1)
    crossing = inside != np.roll(inside, -1)
    denom = d[crossing] - d_next[crossing]
    t = np.clip(d[crossing] / denom, 0.0, 1.0)
    cut = arr[crossing] + t[:, None] * (nxt[crossing] - arr[crossing])
    slots = np.empty((len(arr), 2, 2))
    slots[:, 0] = arr
    slots[crossing, 1] = cut
    keep = np.stack([inside, crossing], axis=1).reshape(-1)
    return slots.reshape(-1, 2)[keep]


class ConvexPolygon(object):
    """Strictly convex polygon with counter-clockwise vertices.

    Clockwise input is reversed; anything non-convex, degenerate or with
    fewer than three vertices raises InvalidPolygon. Instances are
    immutable.
    """

    def __init__(self, vertices):
        arr = _as_array(vertices)
        if len(arr) < 3:
            raise InvalidPolygon("A polygon needs at least 3 vertices, got {}".format(len(arr)))
        if _signed_area(arr) < 0.0:
            arr = arr[::-1].copy()
        if not _is_strictly_convex_ccw(arr):
            raise InvalidPolygon("Vertices do not form a strictly convex polygon: {}".format(
                arr.tolist()))
        arr.setflags(write=False)
        self._arr = arr

    @classmethod
    def _wrap(cls, arr):
        """Wrap an array already known to be convex and CCW"""
        poly = cls.__new__(cls)
        arr = np.array(arr, dtype=float)
        arr.setflags(write=False)
        poly._arr = arr
        return poly

    @property
    def array(self):
        return self._arr

    @property
    def vertices(self):
        return tuple(Point(x, y) for x, y in self._arr)

    def __len__(self):
        return len(self._arr)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        x, y = self._arr[i % len(self._arr)]
        return Point(x, y)

    def __repr__(self):
        return 'ConvexPolygon({})'.format(
            ', '.join('({:.6g}, {:.6g})'.format(x, y) for x, y in self._arr))

    def tolerance(self):
        return _tolerance(self._arr)

    def edge(self, i):
        return self[i], self[i + 1]

    def edge_line(self, i):
        """Supporting line of edge i (V_i -> V_i+1), normal pointing outwards"""
        start, end = self.edge(i)
        e = end - start
        return Line.through(start, (e.y, -e.x))

    def edge_lengths(self):
        seg = np.roll(self._arr, -1, axis=0) - self._arr
        return np.hypot(seg[:, 0], seg[:, 1])

    def interior_angles(self):
        _, _, cross, dot = _turns(self._arr)
        return math.pi - np.arctan2(cross, dot)

    def bounding_box(self):
        xmin, ymin = self._arr.min(axis=0)
        xmax, ymax = self._arr.max(axis=0)
        return float(xmin), float(ymin), float(xmax), float(ymax)

    def translated(self, dx, dy):
        return ConvexPolygon._wrap(self._arr + np.array([dx, dy]))

    def rotated(self, angle, about=(0.0, 0.0)):
        c, s = math.cos(angle), math.sin(angle)
        rot = np.array([[c, -s], [s, c]])
        origin = np.array([about[0], about[1]], dtype=float)
        return ConvexPolygon._wrap((self._arr - origin) @ rot.T + origin)

    def max_vertex_distance(self, other):
        """Largest vertex displacement to other under the best cyclic alignment"""
        a = self._arr
        b = np.asarray(other.array if isinstance(other, ConvexPolygon) else _as_array(other))
        if len(a) != len(b):
            return math.inf
        best = math.inf
        for shift in range(len(b)):
            rolled = np.roll(b, -shift, axis=0)
            best = min(best, float(np.max(np.hypot(*(a - rolled).T))))
        return best


def area(poly):
    return _signed_area(poly.array)


def centroid(poly):
    arr = poly.array
    origin = arr[0]
    rel = arr - origin
    nxt = np.roll(rel, -1, axis=0)
    cross = rel[:, 0] * nxt[:, 1] - nxt[:, 0] * rel[:, 1]
    a6 = 3.0 * float(np.sum(cross))
    cx = float(np.sum((rel[:, 0] + nxt[:, 0]) * cross)) / a6
    cy = float(np.sum((rel[:, 1] + nxt[:, 1]) * cross)) / a6
    return Point(origin[0] + cx, origin[1] + cy)


def contains(poly, p, eps=None):
    if eps is None:
        eps = poly.tolerance()
    pts = np.array([[float(p[0]), float(p[1])]])
    return bool(_contains_many(poly.array, pts, eps)[0])


def min_edge_distance(poly, p):
    """Smallest distance from p to the supporting lines of the polygon's edges"""
    arr = poly.array
    edges = np.roll(arr, -1, axis=0) - arr
    rel = np.array([p[0], p[1]], dtype=float) - arr
    dist = np.abs(edges[:, 0] * rel[:, 1] - edges[:, 1] * rel[:, 0]) / np.hypot(
        edges[:, 0], edges[:, 1])
    return float(dist.min())


def edge_distances(poly, p):
    """Distance from p to each edge's supporting line, in edge order"""
    arr = poly.array
    edges = np.roll(arr, -1, axis=0) - arr
    rel = np.array([p[0], p[1]], dtype=float) - arr
    return np.abs(edges[:, 0] * rel[:, 1] - edges[:, 1] * rel[:, 0]) / np.hypot(
        edges[:, 0], edges[:, 1])


def is_convex_ccw(points):
    try:
        arr = _as_array(points)
    except InvalidPolygon:
        return False
    if len(arr) < 3 or _signed_area(arr) <= 0.0:
        return False
    return _is_strictly_convex_ccw(arr)


def is_regular(poly, tol=constants.DEFAULT_REGULARITY_TOL):
    lengths = poly.edge_lengths()
    angles = poly.interior_angles()
    if lengths.max() - lengths.min() > tol * lengths.mean():
        return False
    return bool(angles.max() - angles.min() <= tol * angles.mean())


def scale_about(poly, origin, factor):
    if not (factor > 0.0 and math.isfinite(factor)):
        raise NonPositiveScale("Scale factor must be positive, got {}".format(factor))
    o = np.array([origin[0], origin[1]], dtype=float)
    return ConvexPolygon._wrap(o + factor * (poly.array - o))


def clip_halfplane(poly, hp):
    """poly intersected with hp, or None when the intersection has no area"""
    line = hp.boundary
    arr = poly.array
    tol = _tolerance(arr)
    clipped = _clip_array(arr, np.array([line.a, line.b]), line.c, tol)
    if clipped is arr:
        return poly
    if clipped is None:
        return None
    clipped = _simplify(clipped, tol)
    if len(clipped) < 3 or _signed_area(clipped) < constants.EPS_AREA:
        return None
    return ConvexPolygon._wrap(clipped)


def clip_many(poly, normals, offsets):
    """poly intersected with every half-plane normals[i] . p <= offsets[i].

    Half-planes that cannot cut the starting polygon are skipped up front.
    """
    arr = poly.array
    tol = _tolerance(arr)
    normals = np.asarray(normals, dtype=float)
    offsets = np.asarray(offsets, dtype=float)
    cutting = np.any(arr @ normals.T - offsets[None, :] > tol, axis=0)
    for normal, offset in zip(normals[cutting], offsets[cutting]):
        clipped = _clip_array(arr, normal, offset, tol)
        if clipped is None:
            return None
        if clipped is not arr:
            arr = _simplify(clipped, tol)
            if len(arr) < 3:
                return None
    if _signed_area(arr) < constants.EPS_AREA:
        return None
    if arr is poly.array:
        return poly
    return ConvexPolygon._wrap(arr)


def sample_in_polygon(poly, count, rng):
    """count points uniform in poly, by rejection from its bounding box"""
    xmin, ymin, xmax, ymax = poly.bounding_box()
    found = []
    total = 0
    while total < count:
        batch = max(16, 2 * (count - total))
        pts = np.column_stack([rng.uniform(xmin, xmax, batch), rng.uniform(ymin, ymax, batch)])
        pts = pts[_contains_many(poly.array, pts, 0.0)]
        found.append(pts)
        total += len(pts)
    pts = np.concatenate(found)[:count]
    return [Point(x, y) for x, y in pts]


def monte_carlo_area(region, bbox, samples, rng):
    """Estimate the area of region inside bbox = (xmin, ymin, xmax, ymax).

    region is a ConvexPolygon or a callable mapping a (k x 2) array to a
    boolean mask.
    """
    predicate = region
    if isinstance(region, ConvexPolygon):
        poly_arr = region.array

        def predicate(pts):
            return _contains_many(poly_arr, pts, 0.0)
    xmin, ymin, xmax, ymax = bbox
    pts = np.column_stack([rng.uniform(xmin, xmax, samples), rng.uniform(ymin, ymax, samples)])
    hits = int(np.count_nonzero(predicate(pts)))
    return (xmax - xmin) * (ymax - ymin) * hits / float(samples)
