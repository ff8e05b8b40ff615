import math
from collections import namedtuple

from nvdd.constants import constants
from nvdd.errors import InvalidPoint, DegenerateSegment, DegenerateLine


class Point(namedtuple('Point', ['x', 'y'])):
    """A planar point in meters. Coordinates must be finite."""
    __slots__ = ()

    def __new__(cls, x, y):
        x = float(x)
        y = float(y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise InvalidPoint("Point coordinates must be finite, got ({}, {})".format(x, y))
        return super(Point, cls).__new__(cls, x, y)

    # tuple defines + and * as concatenation/repetition; points are vectors here
    def __add__(self, other):
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])

    def __mul__(self, k):
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __neg__(self):
        return Point(-self.x, -self.y)

    def dot(self, other):
        return self.x * other[0] + self.y * other[1]

    def cross(self, other):
        return self.x * other[1] - self.y * other[0]

    def norm(self):
        return math.hypot(self.x, self.y)

    def distance_to(self, other):
        return math.hypot(self.x - other[0], self.y - other[1])

    def unit(self):
        length = self.norm()
        if length == 0.0:
            raise DegenerateSegment("Cannot normalize the zero vector")
        return Point(self.x / length, self.y / length)

    def angle(self):
        return math.atan2(self.y, self.x)

    @classmethod
    def polar(cls, origin, radius, angle):
        return cls(origin[0] + radius * math.cos(angle), origin[1] + radius * math.sin(angle))


def direction(angle):
    return Point(math.cos(angle), math.sin(angle))


class Line(namedtuple('Line', ['a', 'b', 'c'])):
    """The line a*x + b*y = c, stored with a^2 + b^2 = 1.

    (a, b) is the unit normal; points with a*x + b*y < c lie on the
    negative side.
    """
    __slots__ = ()

    def __new__(cls, a, b, c):
        norm = math.hypot(a, b)
        if norm == 0.0 or not math.isfinite(norm):
            raise DegenerateLine("Line normal must be non-zero, got ({}, {})".format(a, b))
        return super(Line, cls).__new__(cls, a / norm, b / norm, c / norm)

    @classmethod
    def through(cls, point, normal):
        """Line through point with the given normal direction"""
        return cls(normal[0], normal[1], normal[0] * point[0] + normal[1] * point[1])

    @property
    def normal(self):
        return Point(self.a, self.b)

    @property
    def direction(self):
        return Point(-self.b, self.a)

    def signed_distance(self, p):
        return self.a * p[0] + self.b * p[1] - self.c

    def distance(self, p):
        return abs(self.signed_distance(p))

    def project(self, p):
        d = self.signed_distance(p)
        return Point(p[0] - d * self.a, p[1] - d * self.b)

    def flipped(self):
        return Line(-self.a, -self.b, -self.c)


class HalfPlane(namedtuple('HalfPlane', ['boundary'])):
    """Points p with a*p.x + b*p.y <= c of the boundary line"""
    __slots__ = ()

    @classmethod
    def containing(cls, line, point):
        """Half-plane bounded by line on the side of point"""
        if line.signed_distance(point) > 0.0:
            line = line.flipped()
        return cls(line)

    def contains(self, p, eps=constants.EPS_GEOM):
        return self.boundary.signed_distance(p) <= eps


def perpendicular_bisector(p, q):
    """Line of points equidistant from p and q, normal along q - p"""
    p = Point(*p)
    q = Point(*q)
    if p.distance_to(q) <= constants.EPS_GEOM:
        raise DegenerateSegment("Points {} and {} are too close to bisect".format(p, q))
    mid = (p + q) * 0.5
    return Line.through(mid, q - p)


def line_intersect(l1, l2):
    """Intersection point of two lines, or None when they are parallel"""
    cross = l1.a * l2.b - l2.a * l1.b
    if abs(cross) < constants.EPS_PAR:
        return None
    x = (l1.c * l2.b - l2.c * l1.b) / cross
    y = (l1.a * l2.c - l2.a * l1.c) / cross
    return Point(x, y)


def reflect_across(p, line):
    d = line.signed_distance(p)
    return Point(p[0] - 2.0 * d * line.a, p[1] - 2.0 * d * line.b)


def angle_between(u, v):
    """Counter-clockwise angle from u to v in [0, 2*pi)"""
    angle = math.atan2(u[0] * v[1] - u[1] * v[0], u[0] * v[0] + u[1] * v[1])
    if angle < 0.0:
        angle += constants.TWO_PI
    return angle
