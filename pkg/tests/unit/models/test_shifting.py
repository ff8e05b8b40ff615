import math
from unittest.mock import patch

import numpy as np
import pytest

from nvdd.constants import constants
from nvdd.errors import InvalidN, InvalidParams, RangeEmpty, ShiftFailed
from nvdd.geometry import ConvexPolygon, edge_distances
from nvdd.models.shifting import (sector_frame, interior_shift, exterior_shift,
                                  _successor_range)
from nvdd.vdd import SectorFrame, regular_delaunay, voronoi_from_delaunay


class UpperRng(object):
    """Always picks the top of the requested range"""

    def uniform(self, low, high, size=None):
        return high


@pytest.mark.parametrize('n', [3, 5, 8])
def test_sector_frame_without_kappa_is_regular(n):
    frame = sector_frame((1, 2), n, 0.0, np.random.default_rng(0))
    assert frame.sector_angles == pytest.approx([2 * math.pi / n] * n)
    assert 0.0 <= frame.ray_angles[0] < 2 * math.pi


@pytest.mark.parametrize('kappa', [0.02, 0.1, 0.3])
def test_sector_frame_perturbation_is_bounded(kappa):
    rng = np.random.default_rng(42)
    for n in range(3, 11):
        frame = sector_frame((0, 0), n, kappa, rng)
        alphas = np.array(frame.sector_angles)
        assert math.fsum(alphas) == pytest.approx(2 * math.pi)
        base = 2 * math.pi / n
        assert np.all(alphas >= base * (1 - kappa) / (1 + kappa) - 1e-12)
        assert np.all(alphas <= base * (1 + kappa) / (1 - kappa) + 1e-12)


def test_sector_frame_is_deterministic():
    a = sector_frame((0, 0), 6, 0.1, np.random.default_rng(9))
    b = sector_frame((0, 0), 6, 0.1, np.random.default_rng(9))
    assert a.ray_angles == b.ray_angles


def test_sector_frame_rejects_bad_input():
    rng = np.random.default_rng(0)
    with pytest.raises(InvalidN):
        sector_frame((0, 0), 2, 0.0, rng)
    with pytest.raises(InvalidParams):
        sector_frame((0, 0), 5, constants.MAX_KAPPA, rng)
    with pytest.raises(InvalidParams):
        sector_frame((0, 0), 5, -0.01, rng)


def test_successor_range():
    alpha = 2 * math.pi / 5
    assert _successor_range(1.0, alpha) == pytest.approx((math.cos(alpha), 1 / math.cos(alpha)))
    assert _successor_range(2.0, 2.0) == (2.0 * constants.RANGE_FLOOR, math.inf)
    lower, upper = _successor_range(1.0, math.pi / 2 - 1e-3)
    assert lower == constants.RANGE_FLOOR
    assert upper > 100


@pytest.mark.parametrize('n', [3, 4, 5, 7, 10])
def test_interior_shift_at_range_top_is_identity(n):
    inst = regular_delaunay((5, 5), n, 2.0, theta0=0.4)
    shifted = interior_shift(inst, UpperRng())
    assert shifted.max_vertex_distance(inst.voronoi) <= 1e-9


@pytest.mark.parametrize('n', [3, 4, 5, 6, 8, 10])
def test_interior_shift_moves_edges_inwards_only(n):
    rng = np.random.default_rng(n)
    inst = regular_delaunay((0, 0), n, 2.0)
    for _ in range(50):
        shifted = interior_shift(inst, rng)
        distances = edge_distances(shifted, inst.seed)
        assert np.all(distances > 0)
        assert np.all(distances <= 1.0 + 1e-9)
        # the edge on ray 0 stays on its bisector
        assert distances[-1] == pytest.approx(1.0)
        for i, v in enumerate(shifted):
            rel = v - inst.seed
            assert inst.frame.ray_direction(i).cross(rel) >= -1e-9
            assert rel.cross(inst.frame.ray_direction(i + 1)) >= -1e-9


def test_interior_shift_retries_then_fails():
    inst = regular_delaunay((0, 0), 5, 1.0)
    with patch('nvdd.models.shifting._interior_shift_once',
               side_effect=RangeEmpty('empty')) as once:
        with pytest.raises(ShiftFailed):
            interior_shift(inst, np.random.default_rng(0), max_retries=7)
    assert once.call_count == 7


def test_interior_shift_recovers_after_empty_range():
    inst = regular_delaunay((0, 0), 5, 1.0)
    with patch('nvdd.models.shifting._interior_shift_once',
               side_effect=[RangeEmpty('empty'), inst.voronoi]) as once:
        assert interior_shift(inst, np.random.default_rng(0)) is inst.voronoi
    assert once.call_count == 2


def test_exterior_shift_rejects_small_mu():
    frame = sector_frame((0, 0), 5, 0.0, np.random.default_rng(0))
    with pytest.raises(InvalidParams):
        exterior_shift((0, 0), frame, 1.0, np.random.default_rng(0))


@pytest.mark.parametrize('kappa', [0.0, 0.1])
def test_exterior_shift_keeps_vertices_in_sectors(kappa):
    rng = np.random.default_rng(123)
    mu = 2.0
    for n in range(3, 11):
        for _ in range(30):
            frame = sector_frame((7, -3), n, kappa, rng)
            delaunay = exterior_shift((7, -3), frame, mu, rng, r0=10.0)
            radii = [c.distance_to(frame.seed) for c in delaunay]
            assert radii[0] == pytest.approx(10.0)
            for a, b in zip(radii, radii[1:]):
                assert b <= mu * a * (1 + 1e-12)
            assert radii[-1] <= mu * 10.0 * (1 + 1e-12)
            voronoi_from_delaunay(frame.seed, frame, delaunay)


def test_exterior_shift_keeps_frame_across_retries():
    frame = sector_frame((0, 0), 5, 0.0, np.random.default_rng(0))
    with patch('nvdd.models.shifting._exterior_radii_once',
               side_effect=[RangeEmpty('empty'), [1.0] * 5]) as once:
        delaunay = exterior_shift((0, 0), frame, 2.0, np.random.default_rng(0))
    assert once.call_count == 2
    assert once.call_args_list[0][0][0] is once.call_args_list[1][0][0]
    assert isinstance(delaunay, ConvexPolygon)
    assert [c.distance_to((0, 0)) for c in delaunay] == pytest.approx([1.0] * 5)


def test_exterior_shift_fails_after_retries():
    frame = sector_frame((0, 0), 5, 0.0, np.random.default_rng(0))
    with patch('nvdd.models.shifting._exterior_radii_once', side_effect=RangeEmpty('empty')):
        with pytest.raises(ShiftFailed):
            exterior_shift((0, 0), frame, 2.0, np.random.default_rng(0), max_retries=3)


def test_exterior_shift_moves_frame_to_seed():
    frame = SectorFrame((0, 0), [0.0, 2.0, 4.0])
    delaunay = exterior_shift((100, 100), frame, 2.0, np.random.default_rng(1), r0=5.0)
    assert delaunay[0].distance_to((100, 100)) == pytest.approx(5.0)


def test_sector_frame_triangle_with_large_kappa_stays_valid():
    rng = np.random.default_rng(8)
    for _ in range(200):
        frame = sector_frame((0, 0), 3, 0.45, rng)
        assert max(frame.sector_angles) < math.pi
