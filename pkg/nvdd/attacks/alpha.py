import logging

from nvdd.errors import DegenerateConfiguration, DegenerateLine
from nvdd.geometry import Line, line_intersect
from nvdd.vdd import VddInstance

logger = logging.getLogger(__name__)


def _equal_distance_line(a, b):
    """Points whose signed distances to lines a and b agree"""
    return Line(a.a - b.a, a.b - b.b, a.c - b.c)


def recover_alpha_center(inst):
    """Locate the seed of a sector-shifted cell with equal sector radii.

    Every edge line of such a cell sits at the same distance from the seed,
    so the seed is where consecutive edge lines are equidistant. inst is a
    VddInstance or the Voronoi polygon itself.
    """
    voronoi = inst.voronoi if isinstance(inst, VddInstance) else inst
    lines = [voronoi.edge_line(i) for i in range(len(voronoi))]
    n = len(lines)
    for i in range(n):
        try:
            first = _equal_distance_line(lines[i], lines[(i + 1) % n])
            second = _equal_distance_line(lines[(i + 1) % n], lines[(i + 2) % n])
        except DegenerateLine:
            logger.debug("Edges %s..%s have parallel lines, trying the next pair", i, i + 2)
            continue
        center = line_intersect(first, second)
        if center is not None:
            return center
        logger.debug("Bisectors at edges %s..%s are parallel, trying the next pair", i, i + 2)
    raise DegenerateConfiguration("No pair of edge bisectors intersects in {!r}".format(voronoi))
