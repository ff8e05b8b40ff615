"""Sector, interior and exterior shifting.

All three draw from a caller-owned numpy Generator (anything with
``uniform`` and ``integers`` works) so that a trial is fully determined by
its random stream.
"""
import math
import logging

import numpy as np

from nvdd.constants import constants
from nvdd.errors import InvalidN, InvalidParams, RangeEmpty, ShiftFailed
from nvdd.geometry import Point, Line, line_intersect, ConvexPolygon
from nvdd.vdd import SectorFrame, delaunay_on_frame

logger = logging.getLogger(__name__)


def sector_frame(seed, n, kappa, rng):
    """Draw sector rays around seed.

    Every sector angle is 2*pi/n scaled by (1 +/- eps_i) with eps_i uniform
    in [0, kappa] and a uniform random sign; the angles are then renormalised
    to close the circle. theta_0 is uniform in [0, 2*pi).
    """
    if int(n) != n or n < 3:
        raise InvalidN("n must be an integer >= 3, got {}".format(n))
    n = int(n)
    if not 0.0 <= kappa < constants.MAX_KAPPA:
        raise InvalidParams("kappa must lie in [0, {}), got {}".format(constants.MAX_KAPPA, kappa))
    alphas = np.full(n, constants.TWO_PI / n)
    if kappa > 0.0:
        # only n = 3 with kappa above 1/3 can open a sector to pi; redraw those
        while True:
            signs = rng.integers(0, 2, size=n) * 2 - 1
            eps = rng.uniform(0.0, kappa, size=n)
            drawn = alphas * (1.0 + signs * eps)
            drawn = drawn * (constants.TWO_PI / drawn.sum())
            if drawn.max() < math.pi:
                break
        alphas = drawn
    theta0 = rng.uniform(0.0, constants.TWO_PI)
    angles = theta0 + np.concatenate([[0.0], np.cumsum(alphas[:-1])])
    return SectorFrame(seed, angles.tolist())


def _draw(rng, lower, upper, what):
    if not lower <= upper:
        raise RangeEmpty("Empty range ({}, {}) for {}".format(lower, upper, what))
    return float(rng.uniform(lower, upper))


def _successor_range(current, alpha):
    """Values the next sector's edge distance (or radius) may take.

    Keeps the Voronoi vertex between the two rays: next * cos(alpha) <=
    current and next >= current * cos(alpha). The lower bound never drops
    below RANGE_FLOOR * current.
    """
    c = math.cos(alpha)
    lower = current * max(c, constants.RANGE_FLOOR)
    if c > 0.0:
        return lower, current / c
    return lower, math.inf


def _interior_shift_once(inst, rng):
    frame = inst.frame
    seed = frame.seed
    n = frame.n
    alphas = frame.sector_angles
    # edge k of the cell lies on the bisector of O C_k
    original = [c.distance_to(seed) / 2.0 for c in inst.delaunay]

    distances = [original[0]]
    for k in range(n - 1):
        lower, upper = _successor_range(distances[k], alphas[k])
        upper = min(upper, original[k + 1])
        if k + 1 == n - 1:
            closing_lower, closing_upper = _successor_range(distances[0], alphas[n - 1])
            lower = max(lower, closing_lower)
            upper = min(upper, closing_upper)
        distances.append(_draw(rng, lower, upper, "edge {}".format(k + 1)))

    lines = []
    for k, h in enumerate(distances):
        d = frame.ray_direction(k)
        lines.append(Line.through(seed + d * h, d))
    vertices = [line_intersect(lines[k], lines[(k + 1) % n]) for k in range(n)]
    if any(v is None for v in vertices):
        raise RangeEmpty("Shifted edges became parallel")
    return ConvexPolygon(vertices)


def interior_shift(inst, rng, max_retries=constants.DEFAULT_MAX_RETRIES):
    """Shift the Voronoi edges of inst inwards, parallel to themselves.

    Edge 0 stays on its bisector. Each following edge is moved to a uniform
    distance in the range that keeps the shared vertex inside its sector and
    never beyond the original bisector; the last edge must also close up
    against edge 0. An empty range restarts the whole draw.
    """
    for attempt in range(max_retries):
        try:
            return _interior_shift_once(inst, rng)
        except RangeEmpty as e:
            logger.debug("Interior shift attempt %s rejected: %s", attempt, e)
    raise ShiftFailed("Interior shift found no valid draw in {} attempts".format(max_retries))


def _exterior_radii_once(frame, mu, r0, rng):
    n = frame.n
    alphas = frame.sector_angles
    radii = [r0]
    for i in range(n - 1):
        lower, upper = _successor_range(radii[i], alphas[i])
        upper = min(upper, mu * radii[i])
        if i + 1 == n - 1:
            closing_lower, closing_upper = _successor_range(r0, alphas[n - 1])
            lower = max(lower, closing_lower)
            upper = min(upper, closing_upper, mu * r0)
        radii.append(_draw(rng, lower, upper, "radius {}".format(i + 1)))
    return radii


def exterior_shift(seed, frame, mu, rng, r0=constants.DEFAULT_SECTOR_RADIUS,
                   max_retries=constants.DEFAULT_MAX_RETRIES):
    """Move the Delaunay vertices along their sector rays.

    C_0 sits at distance r0 on ray 0. Every following radius is drawn from
    the range that keeps the dual Voronoi vertex inside its sector, capped at
    mu times the previous radius. The frame is kept across retries; only the
    radii are redrawn.
    """
    if not mu > 1.0:
        raise InvalidParams("mu must be greater than 1, got {}".format(mu))
    if Point(*seed) != frame.seed:
        frame = SectorFrame(seed, frame.ray_angles)
    for attempt in range(max_retries):
        try:
            radii = _exterior_radii_once(frame, mu, r0, rng)
        except RangeEmpty as e:
            logger.debug("Exterior shift attempt %s rejected: %s", attempt, e)
            continue
        return delaunay_on_frame(frame, radii)
    raise ShiftFailed("Exterior shift found no valid draw in {} attempts".format(max_retries))
