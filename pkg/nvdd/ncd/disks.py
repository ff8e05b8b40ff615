"""n-CD baseline: the seed concealed in the intersection of n disks.

Every disk contains the ROI disk around the seed. Disk centres sit at equal
angular spacing with a random phase, each at a uniform distance in (0, r]
from the seed, and each radius is that distance plus r.
"""
import math
import logging
from collections import namedtuple

import numpy as np

from nvdd.constants import constants
from nvdd.errors import ApproximationUnstable, InvalidN, InvalidParams
from nvdd.geometry import Point, ConvexPolygon, area, clip_many, monte_carlo_area
from nvdd.metrics import CostReport, upstream_bytes_ncd

logger = logging.getLogger(__name__)


class Disk(namedtuple('Disk', ['center', 'radius'])):
    __slots__ = ()

    def contains(self, p, eps=constants.EPS_GEOM):
        return Point(*p).distance_to(self.center) <= self.radius + eps


class DiskSet(object):
    """Concealing disks around seed, each covering the ROI disk of radius r"""

    def __init__(self, disks, seed, r):
        self.disks = tuple(Disk(Point(*d[0]), float(d[1])) for d in disks)
        self.seed = Point(*seed)
        self.r = float(r)
        if len(self.disks) < 1:
            raise InvalidN("A disk set needs at least one disk")
        tol = constants.EPS_GEOM * max(1.0, abs(self.seed.x), abs(self.seed.y), self.r)
        for i, disk in enumerate(self.disks):
            if disk.center.distance_to(self.seed) + self.r > disk.radius + tol:
                raise InvalidParams("Disk {} does not cover the ROI disk: {}".format(i, disk))

    @property
    def n(self):
        return len(self.disks)

    def centers(self):
        return np.array([d.center for d in self.disks], dtype=float)

    def radii(self):
        return np.array([d.radius for d in self.disks], dtype=float)

    def bounding_box(self):
        centers = self.centers()
        radii = self.radii()
        lo = (centers - radii[:, None]).min(axis=0)
        hi = (centers + radii[:, None]).max(axis=0)
        return float(lo[0]), float(lo[1]), float(hi[0]), float(hi[1])

    def in_all(self, pts):
        d2 = ((pts[:, None, :] - self.centers()[None, :, :]) ** 2).sum(axis=2)
        return np.all(d2 <= self.radii()[None, :] ** 2, axis=1)

    def in_any(self, pts):
        d2 = ((pts[:, None, :] - self.centers()[None, :, :]) ** 2).sum(axis=2)
        return np.any(d2 <= self.radii()[None, :] ** 2, axis=1)


def generate_ncd(seed, n, r, rng):
    if int(n) != n or n < 3:
        raise InvalidN("n must be an integer >= 3, got {}".format(n))
    if not r > 0.0:
        raise InvalidParams("r must be positive, got {}".format(r))
    n = int(n)
    seed = Point(*seed)
    phase = rng.uniform(0.0, constants.TWO_PI)
    offsets = r - rng.uniform(0.0, r, size=n)
    disks = []
    for i, d in enumerate(offsets):
        center = Point.polar(seed, float(d), phase + constants.TWO_PI * i / n)
        disks.append(Disk(center, float(d) + r))
    return DiskSet(disks, seed, r)


def _tangent_halfplanes(disk_set, segments):
    angles = constants.TWO_PI * np.arange(segments) / segments
    units = np.column_stack([np.cos(angles), np.sin(angles)])
    normals = np.tile(units, (disk_set.n, 1))
    offsets = (disk_set.centers() @ units.T + disk_set.radii()[:, None]).reshape(-1)
    return normals, offsets


def circumscribed_polygon(disk, segments):
    """Regular polygon with segments sides tangent to the disk"""
    angles = constants.TWO_PI * (np.arange(segments) + 0.5) / segments
    reach = disk.radius / math.cos(math.pi / segments)
    center = Point(*disk.center)
    return ConvexPolygon._wrap(np.column_stack([center.x + reach * np.cos(angles),
                                                center.y + reach * np.sin(angles)]))


def intersection_polygon(disk_set, segments=constants.DEFAULT_CIRCLE_SEGMENTS):
    """Polygon enclosing the intersection of all disks.

    Each disk is replaced by its circumscribed polygon, so the result always
    contains the exact intersection.
    """
    normals, offsets = _tangent_halfplanes(disk_set, segments)
    return clip_many(circumscribed_polygon(disk_set.disks[0], segments), normals, offsets)


def union_outline(disk_set, segments=constants.DEFAULT_CIRCLE_SEGMENTS):
    """Vertices of the union outline, sampled as the farthest disk boundary per direction.

    The union is star-shaped about the seed since every disk contains it.
    """
    count = segments * constants.UNION_OVERSAMPLING
    angles = constants.TWO_PI * np.arange(count) / count
    units = np.column_stack([np.cos(angles), np.sin(angles)])
    rel = disk_set.centers() - np.array(disk_set.seed)
    along = units @ rel.T
    reach = along + np.sqrt(disk_set.radii()[None, :] ** 2 - (rel ** 2).sum(axis=1)[None, :]
                            + along ** 2)
    rho = reach.max(axis=1)
    return np.array(disk_set.seed) + rho[:, None] * units


def _star_area(outline, seed):
    rel = outline - np.array(seed)
    nxt = np.roll(rel, -1, axis=0)
    return 0.5 * float(np.sum(rel[:, 0] * nxt[:, 1] - nxt[:, 0] * rel[:, 1]))


def _check_agreement(label, approx, estimate):
    if abs(approx - estimate) > constants.NCD_MC_TOLERANCE * estimate:
        raise ApproximationUnstable(
            "Polygonal {} area {} disagrees with the Monte Carlo estimate {}".format(
                label, approx, estimate))


def ncd_costs(disk_set, circle_segments=constants.DEFAULT_CIRCLE_SEGMENTS, rng=None,
              mc_samples=constants.NCD_MC_SAMPLES):
    """CostReport of an n-CD query: union area as psi, intersection area as gamma.

    Both areas are cross-checked against Monte Carlo estimates over
    mc_samples points; mc_samples=0 skips the check.
    """
    if circle_segments < constants.MIN_CIRCLE_SEGMENTS:
        raise InvalidParams("circle_segments must be at least {}, got {}".format(
            constants.MIN_CIRCLE_SEGMENTS, circle_segments))
    inner = intersection_polygon(disk_set, circle_segments)
    gamma = area(inner)
    psi = _star_area(union_outline(disk_set, circle_segments), disk_set.seed)

    if mc_samples:
        if rng is None:
            rng = np.random.default_rng(constants.DEFAULT_MASTER_SEED)
        _check_agreement('intersection', gamma,
                         monte_carlo_area(disk_set.in_all, inner.bounding_box(), mc_samples, rng))
        _check_agreement('union', psi,
                         monte_carlo_area(disk_set.in_any, disk_set.bounding_box(), mc_samples,
                                          rng))
    return CostReport(psi, gamma, upstream_bytes_ncd(disk_set.n))
