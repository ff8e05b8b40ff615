"""Little-endian wire format of anonymized queries and POI replies.

Upstream (client to server), 48 + 8n bytes:

    0   4s   magic b'NVDD'
    4   u8   version
    5   u8   vertex count n
    6   u16  POI category
    8   32x  reserved, zero
    40  u64  user id
    48  n x (f32 x, f32 y)  concealing space vertices, counter-clockwise

Downstream (server to client), 40 + 8N bytes:

    0   4s   magic b'NVDP'
    4   u8   version
    5   x    reserved
    6   u16  POI count N
    8   32x  reserved, zero
    40  N x (f32 x, f32 y)
"""
import struct
import logging

import numpy as np

from nvdd.constants import constants
from nvdd.errors import (WireError, BadMagic, BadVersion, LengthMismatch, TooManyVertices,
                         TooManyPois)
from nvdd.geometry import ConvexPolygon
from nvdd.models import anonymize
from nvdd.wire.messages import AnonymizedQuery, PoiResponse

logger = logging.getLogger(__name__)

UPSTREAM_HEADER = struct.Struct('<4sBBH32x')
DOWNSTREAM_HEADER = struct.Struct('<4sBxH32x')
UID = struct.Struct('<Q')
COORDS_DTYPE = np.dtype('<f4')
# (start, stop) byte ranges that must be zero
UPSTREAM_RESERVED = ((8, constants.HEADER_BYTES),)
DOWNSTREAM_RESERVED = ((5, 6), (8, constants.HEADER_BYTES))


def _coords_to_bytes(points):
    return np.asarray(points, dtype=float).astype(COORDS_DTYPE).tobytes()


def _bytes_to_coords(buf, count):
    if not count:
        return np.empty((0, 2))
    arr = np.frombuffer(buf, dtype=COORDS_DTYPE, count=2 * count)
    return arr.astype(float).reshape(count, 2)


def _check_header(buf, header, magic, minimum, reserved):
    if len(buf) < minimum:
        raise LengthMismatch("Message of {} bytes is shorter than its {}-byte header".format(
            len(buf), minimum))
    fields = header.unpack_from(buf)
    if fields[0] != magic:
        raise BadMagic("Expected magic {!r}, got {!r}".format(magic, fields[0]))
    if fields[1] != constants.WIRE_VERSION:
        raise BadVersion("Unsupported wire version {}".format(fields[1]))
    for start, stop in reserved:
        if any(buf[start:stop]):
            raise WireError("Reserved bytes {}..{} must be zero, got {}".format(
                start, stop - 1, buf[start:stop].hex()))
    return fields


def encode_upstream(query):
    n = query.n
    if n > constants.MAX_WIRE_VERTICES:
        raise TooManyVertices("{} vertices do not fit the u8 count field".format(n))
    header = UPSTREAM_HEADER.pack(constants.UPSTREAM_MAGIC, constants.WIRE_VERSION, n,
                                  query.poi_category)
    return header + UID.pack(query.uid) + _coords_to_bytes(query.concealing.array)


def decode_upstream(buf):
    buf = bytes(buf)
    minimum = constants.HEADER_BYTES + constants.UID_BYTES
    _, _, n, category = _check_header(buf, UPSTREAM_HEADER, constants.UPSTREAM_MAGIC,
                                      minimum, UPSTREAM_RESERVED)
    expected = minimum + constants.COORD_BYTES * n
    if len(buf) != expected:
        raise LengthMismatch("Upstream message with {} vertices must be {} bytes, got {}".format(
            n, expected, len(buf)))
    if n < 3:
        raise WireError("Upstream message carries {} vertices, a polygon needs 3".format(n))
    uid, = UID.unpack_from(buf, constants.HEADER_BYTES)
    vertices = _bytes_to_coords(buf[minimum:], n)
    return AnonymizedQuery(uid, ConvexPolygon(vertices), category)


def encode_downstream(response):
    count = len(response)
    if count > constants.MAX_WIRE_POIS:
        raise TooManyPois("{} POIs do not fit the u16 count field".format(count))
    header = DOWNSTREAM_HEADER.pack(constants.DOWNSTREAM_MAGIC, constants.WIRE_VERSION, count)
    if not count:
        return header
    return header + _coords_to_bytes(response.pois)


def decode_downstream(buf):
    buf = bytes(buf)
    _, _, count = _check_header(buf, DOWNSTREAM_HEADER, constants.DOWNSTREAM_MAGIC,
                                constants.HEADER_BYTES, DOWNSTREAM_RESERVED)
    expected = constants.HEADER_BYTES + constants.COORD_BYTES * count
    if len(buf) != expected:
        raise LengthMismatch("Downstream message with {} POIs must be {} bytes, got {}".format(
            count, expected, len(buf)))
    coords = _bytes_to_coords(buf[constants.HEADER_BYTES:], count)
    return PoiResponse([tuple(p) for p in coords])


def anonymize_query(query, kind, params, rng=None):
    """Turn a user's query into the one sent to the server.

    r and iota come from the query. Returns the anonymized query and the
    full anonymization result.
    """
    params = params.replace(r=query.r, iota=query.iota)
    res = anonymize(query.location, kind, params, rng=rng)
    logger.debug("Anonymized query of user %s into %s vertices", query.uid, len(res.concealing))
    return AnonymizedQuery(query.uid, res.concealing, query.poi_category), res
