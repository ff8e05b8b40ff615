from unittest.mock import MagicMock

import numpy as np
import pytest

from nvdd.errors import (WireError, BadMagic, BadVersion, LengthMismatch, TooManyVertices,
                         TooManyPois)
from nvdd.geometry import ConvexPolygon, min_edge_distance
from nvdd.models import ModelKind, ModelParams
from nvdd.wire import (Query, AnonymizedQuery, PoiResponse, encode_upstream, decode_upstream,
                       encode_downstream, decode_downstream, anonymize_query)

TRIANGLE = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]

UPSTREAM_TRIANGLE = (b'NVDD\x01\x03\x07\x00' + b'\x00' * 32 +
                     b'\x01' + b'\x00' * 7 +
                     bytes.fromhex('00000000' '00000000' '0000803f' '00000000'
                                   '00000000' '0000803f'))

DOWNSTREAM_ONE_POI = (b'NVDP\x01\x00\x01\x00' + b'\x00' * 32 +
                      bytes.fromhex('0000003f' '000080bf'))


def test_encode_upstream():
    payload = encode_upstream(AnonymizedQuery(1, TRIANGLE, 7))
    assert len(payload) == 72
    assert payload == UPSTREAM_TRIANGLE


def test_decode_upstream():
    query = decode_upstream(UPSTREAM_TRIANGLE)
    assert query == AnonymizedQuery(1, TRIANGLE, 7)
    assert query.n == 3
    assert query.poi_category == 7


def test_encode_downstream():
    assert encode_downstream(PoiResponse([(0.5, -1.0)])) == DOWNSTREAM_ONE_POI


def test_decode_downstream():
    response = decode_downstream(DOWNSTREAM_ONE_POI)
    assert response == PoiResponse([(0.5, -1.0)])


def test_empty_downstream():
    payload = encode_downstream(PoiResponse([]))
    assert len(payload) == 40
    assert len(decode_downstream(payload)) == 0


def test_decode_accepts_bytearray():
    assert decode_upstream(bytearray(UPSTREAM_TRIANGLE)).uid == 1


@pytest.mark.parametrize('decode, payload, error', [
    (decode_upstream, b'XXXX' + UPSTREAM_TRIANGLE[4:], BadMagic),
    (decode_upstream, UPSTREAM_TRIANGLE[:4] + b'\x02' + UPSTREAM_TRIANGLE[5:], BadVersion),
    (decode_upstream, UPSTREAM_TRIANGLE[:-1], LengthMismatch),
    (decode_upstream, UPSTREAM_TRIANGLE + b'\x00', LengthMismatch),
    (decode_upstream, UPSTREAM_TRIANGLE[:20], LengthMismatch),
    (decode_downstream, DOWNSTREAM_ONE_POI[:-8], LengthMismatch),
    (decode_downstream, b'NVDD' + DOWNSTREAM_ONE_POI[4:], BadMagic),
])
def test_decode_rejects_malformed_messages(decode, payload, error):
    with pytest.raises(error):
        decode(payload)


def with_byte(payload, index, value):
    return payload[:index] + bytes([value]) + payload[index + 1:]


@pytest.mark.parametrize('decode, payload', [
    (decode_upstream, with_byte(UPSTREAM_TRIANGLE, 8, 1)),
    (decode_upstream, with_byte(UPSTREAM_TRIANGLE, 39, 0xff)),
    (decode_downstream, with_byte(DOWNSTREAM_ONE_POI, 5, 1)),
    (decode_downstream, with_byte(DOWNSTREAM_ONE_POI, 20, 1)),
])
def test_decode_rejects_nonzero_reserved_bytes(decode, payload):
    with pytest.raises(WireError):
        decode(payload)


def test_decoded_messages_encode_to_the_same_bytes():
    assert encode_upstream(decode_upstream(UPSTREAM_TRIANGLE)) == UPSTREAM_TRIANGLE
    assert encode_downstream(decode_downstream(DOWNSTREAM_ONE_POI)) == DOWNSTREAM_ONE_POI


def test_wire_errors_are_value_errors():
    with pytest.raises(ValueError):
        decode_upstream(b'')


def test_decode_rejects_too_few_vertices():
    payload = (b'NVDD\x01\x02\x00\x00' + b'\x00' * 32 + b'\x00' * 8 +
               np.array([0, 0, 1, 0], dtype='<f4').tobytes())
    with pytest.raises(WireError):
        decode_upstream(payload)


def test_decode_rejects_non_convex_polygon():
    coords = np.array([0, 0, 2, 0, 1, 0.5, 2, 2, 0, 2], dtype='<f4').tobytes()
    payload = b'NVDD\x01\x05\x00\x00' + b'\x00' * 32 + b'\x00' * 8 + coords
    with pytest.raises(ValueError):
        decode_upstream(payload)


def test_encode_rejects_too_many_vertices():
    query = MagicMock(n=256)
    with pytest.raises(TooManyVertices):
        encode_upstream(query)


def test_encode_rejects_too_many_pois():
    response = MagicMock()
    response.__len__.return_value = 65536
    with pytest.raises(TooManyPois):
        encode_downstream(response)


@pytest.mark.parametrize('kwargs', [
    dict(uid=-1, location=(0, 0), r=1.0, poi_category=0),
    dict(uid=2 ** 64, location=(0, 0), r=1.0, poi_category=0),
    dict(uid=1, location=(0, 0), r=1.0, poi_category=2 ** 16),
    dict(uid=1, location=(0, 0), r=0.0, poi_category=0),
    dict(uid=1, location=(0, 0), r=1.0, poi_category=0, iota=-5.0),
    dict(uid=1, location=(float('nan'), 0), r=1.0, poi_category=0),
])
def test_query_validation(kwargs):
    with pytest.raises(ValueError):
        Query(**kwargs)


def test_anonymized_query_equality():
    a = AnonymizedQuery(5, TRIANGLE, 1)
    assert a == AnonymizedQuery(5, ConvexPolygon(TRIANGLE), 1)
    assert a != AnonymizedQuery(6, TRIANGLE, 1)
    assert a != AnonymizedQuery(5, [(0, 0), (1, 0), (0, 2)], 1)


def test_anonymize_query_uses_query_radius():
    query = Query(42, (5000.0, 5000.0), 250.0, 3)
    anonymized, res = anonymize_query(query, ModelKind.III, ModelParams(6, 1.0))
    assert anonymized.uid == 42
    assert anonymized.poi_category == 3
    assert anonymized.concealing is res.concealing
    assert min_edge_distance(anonymized.concealing, (5000.0, 5000.0)) == pytest.approx(250.0)


def test_anonymized_query_survives_the_wire():
    query = Query(2 ** 63 + 7, (5000.0, 5000.0), 1000.0, 12, iota=1500.0)
    anonymized, _ = anonymize_query(query, ModelKind.IIAlpha,
                                    ModelParams(8, 1.0, kappa=0.1, rng_seed=4))
    payload = encode_upstream(anonymized)
    assert len(payload) == 48 + 8 * 8
    decoded = decode_upstream(payload)
    assert decoded.uid == 2 ** 63 + 7
    assert decoded.poi_category == 12
    assert decoded.concealing.max_vertex_distance(anonymized.concealing) < 1e-3
