import math
import logging

import numpy as np

from nvdd.constants import constants
from nvdd.errors import InvalidParams, ModelNotApplicable, ShiftFailed
from nvdd.geometry import Point, is_regular, edge_distances
from nvdd.vdd import (SectorFrame, VddInstance, AnonymityZone, delaunay_on_frame,
                      voronoi_from_delaunay)
from nvdd.models.principles import ModelKind, PIPELINES, PipelineState, get_principle
from nvdd.models.shifting import sector_frame

logger = logging.getLogger(__name__)


class ModelParams(object):
    """Parameters of one anonymization.

    n - number of Delaunay vertices / Voronoi edges
    r - radius of the region of interest, meters
    iota - privacy radius, meters, or None
    kappa - sector angle randomness, used by the alpha variants only
    mu - cap on the growth of consecutive radii under exterior shifting
    r0 - sector radius of the unscaled structure
    rng_seed - seed of the default random stream
    max_retries - redraws allowed before a shift gives up
    regularity_tol - relative tolerance of the regularity rejection test
    scale_mode - 'max', 'roi' or 'privacy'
    """

    def __init__(self,
                 n,
                 r,
                 iota=None,
                 kappa=0.0,
                 mu=constants.DEFAULT_MU,
                 r0=constants.DEFAULT_SECTOR_RADIUS,
                 rng_seed=constants.DEFAULT_MASTER_SEED,
                 max_retries=constants.DEFAULT_MAX_RETRIES,
                 regularity_tol=constants.DEFAULT_REGULARITY_TOL,
                 scale_mode=constants.DEFAULT_SCALE_MODE):
        self.n = n
        self.r = r
        self.iota = iota
        self.kappa = kappa
        self.mu = mu
        self.r0 = r0
        self.rng_seed = rng_seed
        self.max_retries = max_retries
        self.regularity_tol = regularity_tol
        self.scale_mode = scale_mode
        self.validate()

    def validate(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 3:
            raise InvalidParams("n must be an integer >= 3, got {}".format(self.n))
        if not (self.r > 0.0 and math.isfinite(self.r)):
            raise InvalidParams("r must be positive, got {}".format(self.r))
        if self.iota is not None and not (self.iota > 0.0 and math.isfinite(self.iota)):
            raise InvalidParams("iota must be positive when given, got {}".format(self.iota))
        if not 0.0 <= self.kappa < constants.MAX_KAPPA:
            raise InvalidParams("kappa must lie in [0, {}), got {}".format(
                constants.MAX_KAPPA, self.kappa))
        if not self.mu > 1.0:
            raise InvalidParams("mu must be greater than 1, got {}".format(self.mu))
        if not self.r0 > 0.0:
            raise InvalidParams("r0 must be positive, got {}".format(self.r0))
        if self.max_retries < 1:
            raise InvalidParams("max_retries must be at least 1, got {}".format(
                self.max_retries))
        if self.scale_mode not in constants.SCALE_MODES:
            raise InvalidParams("scale_mode must be one of {}, got {}".format(
                constants.SCALE_MODES, self.scale_mode))
        if self.scale_mode == 'privacy' and self.iota is None:
            raise InvalidParams("scale_mode 'privacy' needs iota")

    def replace(self, **kwargs):
        values = dict(vars(self))
        values.update(kwargs)
        return ModelParams(**values)

    def scale_factor(self, d0):
        """lambda for a cell whose closest edge is d0 from the seed"""
        if self.scale_mode == 'roi':
            return self.r / d0
        if self.scale_mode == 'privacy':
            return self.iota / d0
        return max(self.r, self.iota or 0.0) / d0

    def __repr__(self):
        return 'ModelParams({})'.format(', '.join(
            '{}={!r}'.format(k, v) for k, v in sorted(vars(self).items())))


class AnonymizationResult(object):
    """Output of one anonymization.

    instance holds the (possibly shifted) Delaunay polygon and the shifted
    Voronoi cell P_v'; zone is A_z' before scaling. concealing (P_v*) and
    zone_scaled (A_z*) are both scaled by the same factor about the seed.
    """

    def __init__(self, kind, instance, zone, scale, d0, concealing, zone_scaled, trace):
        self.kind = kind
        self.instance = instance
        self.zone = zone
        self.scale = scale
        self.d0 = d0
        self.concealing = concealing
        self.zone_scaled = zone_scaled
        self.trace = list(trace)

    @property
    def seed(self):
        return self.instance.seed

    @property
    def n(self):
        return self.instance.n

    def translated(self, dx, dy):
        frame = self.instance.frame
        instance = VddInstance(SectorFrame(frame.seed + (dx, dy), frame.ray_angles),
                               self.instance.delaunay.translated(dx, dy),
                               self.instance.voronoi.translated(dx, dy))
        return AnonymizationResult(self.kind, instance,
                                   AnonymityZone(self.zone.polygon.translated(dx, dy)),
                                   self.scale, self.d0,
                                   self.concealing.translated(dx, dy),
                                   AnonymityZone(self.zone_scaled.polygon.translated(dx, dy)),
                                   self.trace)

    def rotated(self, angle):
        """Same result turned counter-clockwise by angle about the seed"""
        seed = self.seed
        instance = VddInstance(self.instance.frame.rotated(angle),
                               self.instance.delaunay.rotated(angle, seed),
                               self.instance.voronoi.rotated(angle, seed))
        return AnonymizationResult(self.kind, instance,
                                   AnonymityZone(self.zone.polygon.rotated(angle, seed)),
                                   self.scale, self.d0,
                                   self.concealing.rotated(angle, seed),
                                   AnonymityZone(self.zone_scaled.polygon.rotated(angle, seed)),
                                   self.trace)

    def __repr__(self):
        return 'AnonymizationResult(kind={}, n={}, scale={:.6g})'.format(
            self.kind.label, self.n, self.scale)


def reveals_seed(voronoi, seed, tol=constants.DEFAULT_REGULARITY_TOL):
    """True when the cell is regular and centred on seed, so its centroid is seed"""
    if not is_regular(voronoi, tol):
        return False
    distances = edge_distances(voronoi, seed)
    return bool(distances.max() - distances.min() <= tol * distances.mean())


def _run_pipeline(seed, kind, params, rng):
    state = PipelineState(seed, params)
    for label in PIPELINES[kind]:
        get_principle(label).apply(state, rng)
        state.trace.append(label)
    return state


def anonymize(seed, kind, params, rng=None):
    """Run the pipeline of kind around seed.

    Draws whose shifted cell is regular and centred on the seed are thrown
    away and redrawn. rng defaults to a generator seeded with
    params.rng_seed.
    """
    if kind is ModelKind.AlphaOnly or kind not in PIPELINES:
        raise ModelNotApplicable("Model {} is not applicable for anonymization".format(
            getattr(kind, 'label', kind)))
    seed = Point(*seed)
    if not kind.sector_shifting and params.kappa != 0.0:
        params = params.replace(kappa=0.0)
    if rng is None:
        rng = np.random.default_rng(params.rng_seed)

    # built around the origin and moved onto the seed afterwards, so a draw
    # gives the same shape wherever the user stands
    origin = Point(0.0, 0.0)
    for attempt in range(params.max_retries):
        state = _run_pipeline(origin, kind, params, rng)
        if reveals_seed(state.voronoi, origin, params.regularity_tol):
            logger.debug("Draw %s of model %s is regular around the seed, redrawing",
                         attempt, kind.label)
            continue
        local = AnonymizationResult(kind, state.instance(), state.zone, state.scale, state.d0,
                                    state.concealing, state.zone_scaled, state.trace)
        return local.translated(seed.x, seed.y)
    raise ShiftFailed("Model {} produced only regular cells in {} attempts".format(
        kind.label, params.max_retries))


def model_alpha(seed, n, r0, kappa, rng):
    """Sector shifting alone: perturbed rays, every Delaunay vertex at r0"""
    frame = sector_frame(seed, n, kappa, rng)
    delaunay = delaunay_on_frame(frame, [r0] * frame.n)
    return VddInstance(frame, delaunay, voronoi_from_delaunay(frame.seed, frame, delaunay))
