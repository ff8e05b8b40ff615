import math
import logging

from nvdd.constants import constants
from nvdd.errors import (InvalidN, InvalidFrame, NotDelaunay, ParallelBisectors, SeedOutside,
                         EmptyZone)
from nvdd.geometry import (Point, Line, HalfPlane, direction, perpendicular_bisector,
                           line_intersect, reflect_across, angle_between, ConvexPolygon,
                           area, contains, min_edge_distance, clip_halfplane)

logger = logging.getLogger(__name__)


class SectorFrame(object):
    """Sector rays around a seed.

    Attributes:
        seed: the seed O the rays start from.
        ray_angles: n strictly increasing absolute angles, theta_0 first.
        sector_angles: alpha_i = theta_{i+1} - theta_i, the last one wrapping
            around to theta_0 + 2*pi. All lie in (0, pi) and sum to 2*pi.
    """

    def __init__(self, seed, ray_angles):
        self.seed = Point(*seed)
        self.ray_angles = tuple(float(a) for a in ray_angles)
        n = len(self.ray_angles)
        if n < 3:
            raise InvalidN("A sector frame needs n >= 3 rays, got {}".format(n))
        sectors = [self.ray_angles[i + 1] - self.ray_angles[i] for i in range(n - 1)]
        sectors.append(self.ray_angles[0] + constants.TWO_PI - self.ray_angles[-1])
        for i, alpha in enumerate(sectors):
            if not 0.0 < alpha < math.pi:
                raise InvalidFrame("Sector angle {} is {} rad, expected a value in (0, pi)"
                                   .format(i, alpha))
        if abs(math.fsum(sectors) - constants.TWO_PI) > constants.EPS_DUALITY:
            raise InvalidFrame("Sector angles sum to {}, not 2*pi".format(math.fsum(sectors)))
        self.sector_angles = tuple(sectors)

    @property
    def n(self):
        return len(self.ray_angles)

    def ray_direction(self, i):
        return direction(self.ray_angles[i % self.n])

    def rotated(self, offset):
        return SectorFrame(self.seed, [a + offset for a in self.ray_angles])

    def __repr__(self):
        return 'SectorFrame(seed={}, ray_angles={})'.format(tuple(self.seed), self.ray_angles)


class VddInstance(object):
    """A star Delaunay polygon P_c around a seed and its Voronoi cell P_v.

    Delaunay vertex C_i sits on ray i of the frame; Voronoi vertex V_i sits
    in sector i, between rays i and i+1.
    """

    def __init__(self, frame, delaunay, voronoi):
        if len(delaunay) != frame.n or len(voronoi) != frame.n:
            raise InvalidFrame("Frame has {} rays but polygons have {} and {} vertices".format(
                frame.n, len(delaunay), len(voronoi)))
        self.frame = frame
        self.delaunay = delaunay
        self.voronoi = voronoi

    @property
    def seed(self):
        return self.frame.seed

    @property
    def n(self):
        return self.frame.n

    def sector_radii(self):
        return [c.distance_to(self.seed) for c in self.delaunay]


class AnonymityZone(object):
    """The set of locations indistinguishable from the seed; its vertex count varies"""

    def __init__(self, polygon):
        self.polygon = polygon

    @property
    def vertex_count(self):
        return len(self.polygon)

    def area(self):
        return area(self.polygon)

    def __repr__(self):
        return 'AnonymityZone({!r})'.format(self.polygon)


def _check_n(n):
    if int(n) != n or n < 3:
        raise InvalidN("n must be an integer >= 3, got {}".format(n))
    return int(n)


def delaunay_on_frame(frame, radii):
    """Delaunay polygon with C_i at distance radii[i] along ray i"""
    if len(radii) != frame.n:
        raise InvalidFrame("Expected {} radii, got {}".format(frame.n, len(radii)))
    return ConvexPolygon([Point.polar(frame.seed, rho, theta)
                          for rho, theta in zip(radii, frame.ray_angles)])


def regular_delaunay(seed, n, radius, theta0=0.0):
    n = _check_n(n)
    if not radius > 0.0:
        raise InvalidFrame("Sector radius must be positive, got {}".format(radius))
    frame = SectorFrame(seed, [theta0 + constants.TWO_PI * i / n for i in range(n)])
    delaunay = delaunay_on_frame(frame, [radius] * n)
    return VddInstance(frame, delaunay, voronoi_from_delaunay(frame.seed, frame, delaunay))


def _in_sector(frame, i, p, tol):
    rel = Point(*p) - frame.seed
    return (frame.ray_direction(i).cross(rel) >= -tol and
            rel.cross(frame.ray_direction(i + 1)) >= -tol)


def voronoi_from_delaunay(seed, frame, delaunay):
    """Voronoi cell of seed among the Delaunay vertices.

    V_i is the intersection of the perpendicular bisectors of O-C_i and
    O-C_i+1 and must fall inside sector i.
    """
    seed = Point(*seed)
    n = frame.n
    if len(delaunay) != n:
        raise InvalidFrame("Frame has {} rays but the Delaunay polygon has {} vertices".format(
            n, len(delaunay)))
    tol = delaunay.tolerance()
    for i, c in enumerate(delaunay):
        rel = c - seed
        d = frame.ray_direction(i)
        if abs(d.cross(rel)) > tol or d.dot(rel) <= 0.0:
            raise InvalidFrame("Delaunay vertex {} = {} is not on ray {}".format(i, c, i))

    bisectors = [perpendicular_bisector(seed, c) for c in delaunay]
    vertices = []
    for i in range(n):
        v = line_intersect(bisectors[i], bisectors[(i + 1) % n])
        if v is None:
            raise ParallelBisectors("Bisectors of rays {} and {} are parallel".format(
                i, (i + 1) % n))
        if not _in_sector(frame, i, v, tol * max(1.0, v.distance_to(seed))):
            raise NotDelaunay("Voronoi vertex {} = {} falls outside its sector".format(i, v))
        vertices.append(v)
    voronoi = ConvexPolygon(vertices)
    if not contains(voronoi, seed) or min_edge_distance(voronoi, seed) <= tol:
        raise NotDelaunay("Seed {} is not strictly inside the Voronoi cell".format(seed))
    return voronoi


def delaunay_from_voronoi(o, voronoi):
    """Reflect o across every Voronoi edge; C_i comes from edge V_i-1 V_i"""
    o = Point(*o)
    if not contains(voronoi, o) or min_edge_distance(voronoi, o) <= voronoi.tolerance():
        raise SeedOutside("Point {} is not strictly inside the Voronoi polygon".format(o))
    n = len(voronoi)
    return ConvexPolygon([reflect_across(o, voronoi.edge_line(i - 1)) for i in range(n)])


def frame_from_delaunay(o, delaunay):
    """Sector frame of the rays from o through each Delaunay vertex"""
    o = Point(*o)
    dirs = [c - o for c in delaunay]
    angles = [dirs[0].angle()]
    for prev, cur in zip(dirs, dirs[1:]):
        angles.append(angles[-1] + angle_between(prev, cur))
    return SectorFrame(o, angles)


def strips(voronoi):
    """Pairs of half-planes bounding each edge's perpendicular strip"""
    result = []
    for i in range(len(voronoi)):
        start, end = voronoi.edge(i)
        e = (end - start).unit()
        lower = HalfPlane(Line(-e.x, -e.y, -e.dot(start)))
        upper = HalfPlane(Line(e.x, e.y, e.dot(end)))
        result.append((lower, upper))
    return result


def anonymity_zone(voronoi):
    """Voronoi polygon intersected with all of its edge strips"""
    zone = voronoi
    for lower, upper in strips(voronoi):
        for hp in (lower, upper):
            zone = clip_halfplane(zone, hp)
            if zone is None:
                raise EmptyZone("Anonymity zone of {!r} is empty".format(voronoi))
    return AnonymityZone(zone)
