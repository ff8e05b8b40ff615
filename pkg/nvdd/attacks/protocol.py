"""Reversal of the anonymizing protocol from the server's point of view.

Given only P_v*, any point of A_z* must admit a Delaunay polygon whose
dual is P_v*. Checking that for sampled points shows the seed cannot be
singled out.
"""
import math
import logging

from nvdd.constants import constants
from nvdd.errors import NvddError, PointOutsideZone
from nvdd.geometry import Point, contains, min_edge_distance, sample_in_polygon
from nvdd.vdd import delaunay_from_voronoi, voronoi_from_delaunay, frame_from_delaunay

logger = logging.getLogger(__name__)


def _satisfies_duality(o, concealing, delaunay, tol):
    n = len(concealing)
    for i in range(n):
        line = concealing.edge_line(i - 1)
        c = delaunay[i]
        ray = (c - o).unit()
        if abs(ray.cross(line.normal)) > constants.EPS_DUALITY:
            logger.debug("Edge %s is not perpendicular to ray %s", i - 1, i)
            return False
        if abs(line.signed_distance(o) + line.signed_distance(c)) > tol:
            logger.debug("Edge %s is not the bisector of o and C_%s", i - 1, i)
            return False
    return True


def feasibility_check(o, res, kind=None):
    """Could o have produced the concealing space of res?

    Rebuilds P_c* from o by reflection, checks that every edge of P_v* is
    the perpendicular bisector of o and its Delaunay vertex, and that the
    duality maps P_c* back onto P_v*. Kinds with regular sectors must also
    show equal sector angles at o.
    """
    o = Point(*o)
    kind = kind or res.kind
    concealing = res.concealing
    zone = res.zone_scaled.polygon
    tol = concealing.tolerance()
    if not contains(zone, o) or min_edge_distance(concealing, o) <= tol:
        raise PointOutsideZone("Point {} is not inside the anonymity zone".format(o))

    try:
        delaunay = delaunay_from_voronoi(o, concealing)
        if not _satisfies_duality(o, concealing, delaunay, tol):
            return False
        frame = frame_from_delaunay(o, delaunay)
        rebuilt = voronoi_from_delaunay(o, frame, delaunay)
    except NvddError as e:
        logger.debug("Protocol reversal from %s failed: %s", o, e)
        return False
    if rebuilt.max_vertex_distance(concealing) > tol:
        logger.debug("Duality roundtrip from %s drifted", o)
        return False

    if not kind.sector_shifting:
        expected = constants.TWO_PI / frame.n
        if any(abs(alpha - expected) > constants.EPS_DUALITY for alpha in frame.sector_angles):
            logger.debug("Sector angles at %s are not equal", o)
            return False
    return True


def zone_samples(res, count, rng):
    """count points drawn uniformly from A_z*"""
    return sample_in_polygon(res.zone_scaled.polygon, count, rng)


def feasible_fraction(res, count, rng):
    """Share of count uniform points of A_z* that pass feasibility_check"""
    points = zone_samples(res, count, rng)
    passed = 0
    for p in points:
        try:
            passed += feasibility_check(p, res)
        except PointOutsideZone:
            logger.debug("Sample %s landed on the zone boundary", p)
    return passed / float(count) if count else math.nan
