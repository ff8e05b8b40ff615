import math
import logging

from nvdd.constants import constants
from nvdd.geometry import area

logger = logging.getLogger(__name__)


class CostReport(object):
    """Areas and traffic of one anonymized query.

    psi - concealing cost, area of the region sent to the server (m^2)
    gamma - privacy level, area of the anonymity zone (m^2)
    upstream_bytes / downstream_bytes - message sizes of the query and reply
    """

    def __init__(self, psi, gamma, upstream_bytes, downstream_bytes=0):
        if not gamma > 0.0:
            raise ValueError("Privacy level must be positive, got {}".format(gamma))
        self.psi = psi
        self.gamma = gamma
        self.upstream_bytes = upstream_bytes
        self.downstream_bytes = downstream_bytes

    @property
    def ratio(self):
        return self.psi / self.gamma

    @property
    def communication_cost(self):
        return self.upstream_bytes + self.downstream_bytes

    def __repr__(self):
        return 'CostReport(psi={:.6g}, gamma={:.6g}, upstream={}, downstream={})'.format(
            self.psi, self.gamma, self.upstream_bytes, self.downstream_bytes)


def concealing_cost(res):
    return area(res.concealing)


def privacy_level(res):
    return area(res.zone_scaled.polygon)


def expected_privacy_level(iota):
    """Area a user asking for privacy radius iota expects to hide in"""
    return math.pi * iota * iota


def _check_count(value, what):
    if int(value) != value or value < 0:
        raise ValueError("{} must be a non-negative integer, got {}".format(what, value))
    return int(value)


def upstream_bytes_vdd(n):
    n = _check_count(n, 'n')
    return constants.HEADER_BYTES + constants.UID_BYTES + constants.COORD_BYTES * n


def downstream_bytes(poi_count):
    poi_count = _check_count(poi_count, 'POI count')
    return constants.HEADER_BYTES + constants.COORD_BYTES * poi_count


def upstream_bytes_ncd(n):
    n = _check_count(n, 'n')
    return constants.HEADER_BYTES + constants.UID_BYTES + constants.DISK_BYTES * n


def expected_poi_count(psi, poi_density):
    """Expected number of POIs returned for a concealing space of area psi"""
    if poi_density < 0.0:
        raise ValueError("POI density must be non-negative, got {}".format(poi_density))
    return int(round(psi * poi_density))


def cost_report(res, poi_count=None, poi_density=None):
    """CostReport of an anonymization result.

    The reply size uses poi_count when given, else the count expected from
    poi_density over the concealing space, else zero POIs.
    """
    psi = concealing_cost(res)
    if poi_count is None:
        poi_count = expected_poi_count(psi, poi_density) if poi_density is not None else 0
    return CostReport(psi, privacy_level(res), upstream_bytes_vdd(len(res.concealing)),
                      downstream_bytes(poi_count))
