import math

from nvdd.constants import constants
from nvdd.geometry import Point, ConvexPolygon

MAX_UID = 2 ** 64 - 1
MAX_CATEGORY = 2 ** 16 - 1


def _check_uid(uid):
    if int(uid) != uid or not 0 <= uid <= MAX_UID:
        raise ValueError("uid must be an unsigned 64-bit integer, got {}".format(uid))
    return int(uid)


def _check_category(category):
    if int(category) != category or not 0 <= category <= MAX_CATEGORY:
        raise ValueError("POI category must be an unsigned 16-bit integer, got {}".format(
            category))
    return int(category)


class Query(object):
    """What the user asks: who, where, how wide, how private and for which POIs"""

    def __init__(self, uid, location, r, poi_category, iota=None):
        self.uid = _check_uid(uid)
        self.location = Point(*location)
        if not (r > 0.0 and math.isfinite(r)):
            raise ValueError("r must be positive, got {}".format(r))
        if iota is not None and not (iota > 0.0 and math.isfinite(iota)):
            raise ValueError("iota must be positive when given, got {}".format(iota))
        self.r = float(r)
        self.iota = iota
        self.poi_category = _check_category(poi_category)

    def __repr__(self):
        return 'Query(uid={}, location={}, r={}, iota={}, poi_category={})'.format(
            self.uid, tuple(self.location), self.r, self.iota, self.poi_category)


class AnonymizedQuery(object):
    """What the server sees: the concealing space replaces the location"""

    def __init__(self, uid, concealing, poi_category):
        if not isinstance(concealing, ConvexPolygon):
            concealing = ConvexPolygon(concealing)
        self.uid = _check_uid(uid)
        self.concealing = concealing
        self.poi_category = _check_category(poi_category)

    @property
    def n(self):
        return len(self.concealing)

    def __eq__(self, other):
        if not isinstance(other, AnonymizedQuery):
            return NotImplemented
        return (self.uid == other.uid and self.poi_category == other.poi_category and
                self.concealing.array.shape == other.concealing.array.shape and
                bool((self.concealing.array == other.concealing.array).all()))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return 'AnonymizedQuery(uid={}, n={}, poi_category={})'.format(
            self.uid, self.n, self.poi_category)


class PoiResponse(object):

    def __init__(self, pois):
        self.pois = tuple(Point(*p) for p in pois)

    def __len__(self):
        return len(self.pois)

    def __eq__(self, other):
        if not isinstance(other, PoiResponse):
            return NotImplemented
        return self.pois == other.pois

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return 'PoiResponse({} POIs)'.format(len(self.pois))
