"""Monte Carlo runs over models, n, kappa and r.

Every trial draws from its own random streams, derived from the master
seed, the model, n, kappa and the trial index. r is left out of the key so
that cells differing only in r see the same shapes, scaled.
"""
import math
import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from nvdd import utils
from nvdd.constants import constants
from nvdd.errors import ApproximationUnstable, InvalidParams, ShiftFailed
from nvdd.geometry import Point, centroid, edge_distances
from nvdd.vdd import delaunay_on_frame, voronoi_from_delaunay, VddInstance
from nvdd.models import ModelKind, ModelParams, anonymize, sector_frame, interior_shift
from nvdd.attacks import CentroidAttackStats, centroid_attack, two_centroid_circle_test
from nvdd.metrics import (concealing_cost, privacy_level, upstream_bytes_vdd,
                          upstream_bytes_ncd)
from nvdd.ncd import generate_ncd, ncd_costs
from nvdd.sim.records import SweepRecord, ComparisonRecord

logger = logging.getLogger(__name__)

MODEL_ORDER = list(ModelKind)
NCD_STREAM = len(MODEL_ORDER)
ANONYMIZING_MODELS = [kind for kind in MODEL_ORDER if kind is not ModelKind.AlphaOnly]


class SweepConfig(object):
    """Parameter grid and run settings of a simulation.

    region_side - side of the square region users are placed in, meters
    models, n_values, kappa_values, r_values - the grid; kappa only applies
        to the sector-shifting models
    iterations - trials per cell
    master_seed - root of every random stream
    threads - worker threads per cell; None reads NVDD_THREADS
    """

    def __init__(self,
                 region_side=constants.DEFAULT_REGION_SIDE,
                 models=None,
                 n_values=constants.DEFAULT_N_VALUES,
                 kappa_values=constants.DEFAULT_KAPPA_VALUES,
                 r_values=constants.DEFAULT_R_VALUES,
                 iterations=constants.DEFAULT_ITERATIONS,
                 master_seed=constants.DEFAULT_MASTER_SEED,
                 iota=None,
                 mu=constants.DEFAULT_MU,
                 r0=constants.DEFAULT_SECTOR_RADIUS,
                 max_retries=constants.DEFAULT_MAX_RETRIES,
                 scale_mode=constants.DEFAULT_SCALE_MODE,
                 circle_segments=constants.DEFAULT_CIRCLE_SEGMENTS,
                 ncd_mc_samples=constants.NCD_MC_SAMPLES,
                 threads=None):
        self.region_side = float(region_side)
        self.models = list(models) if models is not None else list(ANONYMIZING_MODELS)
        self.n_values = list(n_values)
        self.kappa_values = list(kappa_values)
        self.r_values = list(r_values)
        self.iterations = iterations
        self.master_seed = master_seed
        self.iota = iota
        self.mu = mu
        self.r0 = r0
        self.max_retries = max_retries
        self.scale_mode = scale_mode
        self.circle_segments = circle_segments
        self.ncd_mc_samples = ncd_mc_samples
        self.threads = threads
        self.validate()

    def validate(self):
        if not self.iterations > 0:
            raise InvalidParams("iterations must be positive, got {}".format(self.iterations))
        if self.master_seed < 0:
            raise InvalidParams("master_seed must be non-negative, got {}".format(
                self.master_seed))
        if not self.models:
            raise InvalidParams("At least one model is needed")
        if ModelKind.AlphaOnly in self.models:
            raise InvalidParams("Model {} cannot be simulated".format(ModelKind.AlphaOnly.label))
        if not (self.n_values and self.kappa_values and self.r_values):
            raise InvalidParams("n_values, kappa_values and r_values must not be empty")
        for r in self.r_values:
            if not 0.0 < 2.0 * r < self.region_side:
                raise InvalidParams("ROI radius {} does not fit a region of side {}".format(
                    r, self.region_side))
        # each combination must make a valid parameter set
        for n in self.n_values:
            for kappa in self.kappa_values:
                self.params(n, kappa, self.r_values[0])

    def params(self, n, kappa, r):
        return ModelParams(n, r, iota=self.iota, kappa=kappa, mu=self.mu, r0=self.r0,
                           rng_seed=self.master_seed, max_retries=self.max_retries,
                           scale_mode=self.scale_mode)

    def kappas_for(self, kind):
        return self.kappa_values if kind.sector_shifting else [0.0]

    def get_threads(self):
        return self.threads if self.threads else utils.get_threads()


def _kappa_key(kappa):
    return int(round(kappa * 1e6))


def draw_location(side, r, rng):
    """Uniform point of the region whose ROI disk stays inside the region"""
    while True:
        x, y = rng.uniform(0.0, side, size=2)
        if r <= x <= side - r and r <= y <= side - r:
            return Point(x, y)


def _map_trials(cfg, fn):
    trials = range(cfg.iterations)
    threads = cfg.get_threads()
    if threads <= 1:
        return [fn(t) for t in trials]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(fn, trials))


def _cell_streams(cfg, stream_index, n, kappa, trial):
    return utils.trial_streams(cfg.master_seed, (stream_index, n, _kappa_key(kappa), trial))


def _anonymize_trial(cfg, kind, n, kappa, r, trial):
    loc_rng, model_rng = _cell_streams(cfg, MODEL_ORDER.index(kind), n, kappa, trial)
    seed = draw_location(cfg.region_side, r, loc_rng)
    try:
        return seed, anonymize(seed, kind, cfg.params(n, kappa, r), rng=model_rng)
    except ShiftFailed as e:
        logger.debug("Trial %s of %s n=%s kappa=%s failed: %s", trial, kind.label, n, kappa, e)
        return seed, None


def _report_failures(label, n, kappa, r, failures, iterations):
    if failures:
        level = logging.WARNING if failures > constants.MAX_FAILURE_RATE * iterations \
            else logging.INFO
        logger.log(level, "%s n=%s kappa=%s r=%s: %s of %s trials failed", label, n, kappa, r,
                   failures, iterations)


def _summarize(label, n, kappa, r, upstream, psi, gamma, iterations):
    trials = len(psi)
    failures = iterations - trials
    _report_failures(label, n, kappa, r, failures, iterations)
    if not trials:
        return SweepRecord(label, n, kappa, r, math.nan, math.nan, math.nan, upstream, 0,
                           failures)
    psi = np.asarray(psi)
    gamma = np.asarray(gamma)
    return SweepRecord(label, n, kappa, r, float(np.mean(psi)), float(np.mean(gamma)),
                       float(np.mean(psi / gamma)), upstream, trials, failures)


def run_cell(cfg, kind, n, kappa, r):
    def trial_costs(trial):
        _, res = _anonymize_trial(cfg, kind, n, kappa, r, trial)
        if res is None:
            return None
        return concealing_cost(res), privacy_level(res)

    costs = [c for c in _map_trials(cfg, trial_costs) if c is not None]
    return _summarize(kind.label, n, kappa, r, upstream_bytes_vdd(n), [c[0] for c in costs],
                      [c[1] for c in costs], cfg.iterations)


def run_sweep(cfg):
    """One SweepRecord per (model, n, kappa, r) cell"""
    records = []
    for kind in cfg.models:
        for n in cfg.n_values:
            for kappa in cfg.kappas_for(kind):
                for r in cfg.r_values:
                    record = run_cell(cfg, kind, n, kappa, r)
                    logger.info("%s", record)
                    records.append(record)
    return records


def run_attack_stats(cfg):
    """Centroid attack statistics per (model, n); alpha kinds use the largest kappa"""
    r = cfg.r_values[0]
    stats = []
    for kind in cfg.models:
        kappa = max(cfg.kappas_for(kind))
        for n in cfg.n_values:
            def trial_attack(trial, kind=kind, n=n, kappa=kappa):
                seed, res = _anonymize_trial(cfg, kind, n, kappa, r, trial)
                if res is None:
                    return None
                _, dist_pv = centroid_attack(res, seed)
                dist_az = centroid(res.zone_scaled.polygon).distance_to(seed)
                return dist_pv, dist_az, two_centroid_circle_test(res, seed)

            outcomes = [o for o in _map_trials(cfg, trial_attack) if o is not None]
            failures = cfg.iterations - len(outcomes)
            _report_failures(kind.label, n, kappa, r, failures, cfg.iterations)
            if not outcomes:
                raise ShiftFailed("Every attack trial of {} n={} failed".format(kind.label, n))
            item = CentroidAttackStats.from_trials(kind.label, n, [o[0] for o in outcomes],
                                                   [o[1] for o in outcomes],
                                                   [o[2] for o in outcomes], failures)
            logger.info("%s", item)
            stats.append(item)
    return stats


def run_ncd_cell(cfg, n, r):
    def trial_costs(trial):
        loc_rng, disk_rng = _cell_streams(cfg, NCD_STREAM, n, 0.0, trial)
        seed = draw_location(cfg.region_side, r, loc_rng)
        try:
            report = ncd_costs(generate_ncd(seed, n, r, disk_rng), cfg.circle_segments,
                               rng=disk_rng, mc_samples=cfg.ncd_mc_samples)
        except ApproximationUnstable as e:
            logger.debug("Trial %s of %s n=%s failed: %s", trial, constants.NCD_LABEL, n, e)
            return None
        return report.psi, report.gamma

    costs = [c for c in _map_trials(cfg, trial_costs) if c is not None]
    return _summarize(constants.NCD_LABEL, n, 0.0, r, upstream_bytes_ncd(n),
                      [c[0] for c in costs], [c[1] for c in costs], cfg.iterations)


def run_comparison(cfg):
    """Every model cell paired with the n-CD cell of the same n and r"""
    pairs = []
    for n in cfg.n_values:
        for r in cfg.r_values:
            ncd = run_ncd_cell(cfg, n, r)
            logger.info("%s", ncd)
            for kind in cfg.models:
                kappa = max(cfg.kappas_for(kind))
                pairs.append(ComparisonRecord(run_cell(cfg, kind, n, kappa, r), ncd))
    return pairs


def edge_shift_distances(n, draws, seed=constants.DEFAULT_MASTER_SEED,
                         r0=constants.DEFAULT_SECTOR_RADIUS):
    """Distances from the seed of every edge of draws interior-shifted cells.

    The cells start from equal sectors with sector radius r0, so unshifted
    edges sit at r0 / 2.
    """
    origin = Point(0.0, 0.0)
    distances = []
    for draw in range(draws):
        rng = np.random.default_rng(utils.stream_seed(seed, n, draw))
        frame = sector_frame(origin, n, 0.0, rng)
        delaunay = delaunay_on_frame(frame, [r0] * n)
        inst = VddInstance(frame, delaunay, voronoi_from_delaunay(origin, frame, delaunay))
        distances.append(edge_distances(interior_shift(inst, rng), origin))
    return np.concatenate(distances) if distances else np.empty(0)
