import math
from unittest.mock import patch

import numpy as np
import pytest

from nvdd.errors import InvalidParams, ModelNotApplicable, ShiftFailed
from nvdd.geometry import area, contains, edge_distances, min_edge_distance
from nvdd.models import (ModelKind, ModelParams, PIPELINES, anonymize, model_alpha,
                         reveals_seed)
from nvdd.models.principles import Scaling, get_principle
from nvdd.vdd import delaunay_on_frame, regular_delaunay, voronoi_from_delaunay

ANONYMIZING = [kind for kind in ModelKind if kind is not ModelKind.AlphaOnly]


def test_model_kind_from_label():
    assert ModelKind.from_label('Ia') is ModelKind.IAlpha
    assert ModelKind.from_label('IIIAlpha') is ModelKind.IIIAlpha
    with pytest.raises(ValueError):
        ModelKind.from_label('IV')


def test_sector_shifting_kinds():
    assert [k.label for k in ModelKind if k.sector_shifting] == ['Ia', 'IIa', 'IIIa', 'alpha']


def test_pipelines():
    assert ModelKind.AlphaOnly not in PIPELINES
    for kind, labels in PIPELINES.items():
        assert labels[0] == ('S1' if kind.sector_shifting else 'S0')
        assert labels[-1] == 'R0'
        assert 'R1' in labels
    assert PIPELINES[ModelKind.III] == ('S0', 'P2', 'R1', 'P1', 'R0')


def test_get_principle():
    assert isinstance(get_principle('R0'), Scaling)
    with pytest.raises(ValueError):
        get_principle('Q9')


@pytest.mark.parametrize('kwargs', [
    dict(n=2, r=100.0),
    dict(n=5.5, r=100.0),
    dict(n=5, r=0.0),
    dict(n=5, r=float('inf')),
    dict(n=5, r=100.0, iota=-1.0),
    dict(n=5, r=100.0, kappa=0.5),
    dict(n=5, r=100.0, kappa=-0.1),
    dict(n=5, r=100.0, mu=1.0),
    dict(n=5, r=100.0, r0=0.0),
    dict(n=5, r=100.0, max_retries=0),
    dict(n=5, r=100.0, scale_mode='area'),
    dict(n=5, r=100.0, scale_mode='privacy'),
])
def test_params_validation(kwargs):
    with pytest.raises(InvalidParams):
        ModelParams(**kwargs)


def test_params_replace_validates():
    params = ModelParams(5, 100.0)
    assert params.replace(n=7).n == 7
    assert params.n == 5
    with pytest.raises(InvalidParams):
        params.replace(mu=0.5)


def test_scale_factor():
    assert ModelParams(5, 100.0).scale_factor(0.5) == pytest.approx(200.0)
    assert ModelParams(5, 100.0, iota=300.0).scale_factor(0.5) == pytest.approx(600.0)
    assert ModelParams(5, 100.0, iota=300.0, scale_mode='roi').scale_factor(0.5) == \
        pytest.approx(200.0)
    assert ModelParams(5, 100.0, iota=300.0, scale_mode='privacy').scale_factor(0.5) == \
        pytest.approx(600.0)


def test_reveals_seed():
    inst = regular_delaunay((4, 4), 6, 1.0)
    assert reveals_seed(inst.voronoi, inst.seed)
    assert not reveals_seed(inst.voronoi, (4.1, 4.0))
    frame = inst.frame
    skewed = delaunay_on_frame(frame, [1.0, 1.2, 1.0, 1.1, 0.9, 1.0])
    assert not reveals_seed(voronoi_from_delaunay(frame.seed, frame, skewed), inst.seed)


@pytest.mark.parametrize('kind', ANONYMIZING)
@pytest.mark.parametrize('n', [3, 4, 5, 7, 10])
def test_anonymize_covers_roi_and_keeps_seed_in_zone(kind, n):
    seed = (2500.0, 7300.0)
    params = ModelParams(n, 1000.0, kappa=0.1, rng_seed=n)
    res = anonymize(seed, kind, params)
    assert res.kind is kind
    assert res.n == n
    assert res.trace == list(PIPELINES[kind])
    assert res.seed == seed
    assert min_edge_distance(res.concealing, seed) == pytest.approx(1000.0, rel=1e-9)
    assert np.all(edge_distances(res.concealing, seed) >= 1000.0 * (1 - 1e-9))
    assert contains(res.zone_scaled.polygon, seed)
    assert contains(res.zone.polygon, seed)
    assert area(res.zone_scaled.polygon) <= area(res.concealing) * (1 + 1e-9)
    assert res.scale == pytest.approx(1000.0 / res.d0)
    assert area(res.concealing) == pytest.approx(res.scale ** 2 * area(res.instance.voronoi))


def test_anonymize_scales_to_privacy_radius():
    res = anonymize((0, 0), ModelKind.II, ModelParams(6, 100.0, iota=400.0))
    assert min_edge_distance(res.concealing, (0, 0)) == pytest.approx(400.0)
    res = anonymize((0, 0), ModelKind.II, ModelParams(6, 100.0, iota=400.0, scale_mode='roi'))
    assert min_edge_distance(res.concealing, (0, 0)) == pytest.approx(100.0)


def test_anonymize_is_deterministic():
    params = ModelParams(6, 500.0, kappa=0.05, rng_seed=99)
    a = anonymize((10, 10), ModelKind.IIIAlpha, params)
    b = anonymize((10, 10), ModelKind.IIIAlpha, params)
    assert np.array_equal(a.concealing.array, b.concealing.array)
    assert np.array_equal(a.zone_scaled.polygon.array, b.zone_scaled.polygon.array)


def test_anonymize_shape_does_not_depend_on_location():
    params = ModelParams(8, 500.0, rng_seed=3)
    a = anonymize((0, 0), ModelKind.III, params)
    b = anonymize((1000, 2000), ModelKind.III, params)
    assert np.allclose(b.concealing.array - (1000, 2000), a.concealing.array, atol=1e-9)
    assert a.scale == b.scale


def test_regular_sector_kinds_ignore_kappa():
    res = anonymize((0, 0), ModelKind.II, ModelParams(5, 100.0, kappa=0.2))
    assert res.instance.frame.sector_angles == pytest.approx([2 * math.pi / 5] * 5)


def test_sector_shifting_kinds_use_kappa():
    res = anonymize((0, 0), ModelKind.IIAlpha, ModelParams(5, 100.0, kappa=0.2))
    angles = res.instance.frame.sector_angles
    assert max(angles) - min(angles) > 1e-3


def test_exterior_only_kinds_keep_duality():
    res = anonymize((50, 50), ModelKind.II, ModelParams(6, 100.0))
    inst = res.instance
    rebuilt = voronoi_from_delaunay(inst.seed, inst.frame, inst.delaunay)
    assert rebuilt.max_vertex_distance(inst.voronoi) <= 1e-9


def test_alpha_only_is_not_applicable():
    with pytest.raises(ModelNotApplicable):
        anonymize((0, 0), ModelKind.AlphaOnly, ModelParams(5, 100.0, kappa=0.1))


def test_regular_draws_are_redrawn():
    params = ModelParams(5, 100.0, max_retries=4)
    with patch('nvdd.models.anonymizer.reveals_seed', side_effect=[True, True, False]) as check:
        res = anonymize((0, 0), ModelKind.I, params)
    assert check.call_count == 3
    assert res.trace == list(PIPELINES[ModelKind.I])


def test_only_regular_draws_fail():
    params = ModelParams(5, 100.0, max_retries=4)
    with patch('nvdd.models.anonymizer.reveals_seed', return_value=True):
        with pytest.raises(ShiftFailed):
            anonymize((0, 0), ModelKind.I, params)


def test_result_translated():
    res = anonymize((0, 0), ModelKind.I, ModelParams(5, 100.0))
    moved = res.translated(10.0, -5.0)
    assert moved.seed == (10.0, -5.0)
    assert np.allclose(moved.concealing.array, res.concealing.array + (10.0, -5.0))
    assert moved.trace == res.trace
    assert moved.zone_scaled.vertex_count == res.zone_scaled.vertex_count


def test_model_alpha():
    inst = model_alpha((3, 3), 6, 2.0, 0.1, np.random.default_rng(1))
    assert inst.sector_radii() == pytest.approx([2.0] * 6)
    assert math.fsum(inst.frame.sector_angles) == pytest.approx(2 * math.pi)
    assert contains(inst.voronoi, (3, 3))
