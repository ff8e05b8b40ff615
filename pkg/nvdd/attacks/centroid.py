import math
import logging

import numpy as np

from nvdd.constants import constants
from nvdd.geometry import Point, centroid

logger = logging.getLogger(__name__)


class CentroidAttackStats(object):
    """Centroid attack outcome aggregated over the trials of one (model, n) cell.

    mean_dist_pv - mean distance from the seed to the centroid of P_v*
    mean_dist_az - mean distance from the seed to the centroid of A_z*
    circle_hit_fraction - share of trials where the two-centroid circle
        holds the seed
    """

    def __init__(self, model, n, trials, failures, mean_dist_pv, mean_dist_az,
                 stderr_dist_pv, circle_hit_fraction):
        if trials <= 0:
            raise ValueError("Attack statistics need at least one trial, got {}".format(trials))
        if not 0.0 <= circle_hit_fraction <= 1.0:
            raise ValueError("Hit fraction must lie in [0, 1], got {}".format(
                circle_hit_fraction))
        self.model = model
        self.n = n
        self.trials = trials
        self.failures = failures
        self.mean_dist_pv = mean_dist_pv
        self.mean_dist_az = mean_dist_az
        self.stderr_dist_pv = stderr_dist_pv
        self.circle_hit_fraction = circle_hit_fraction

    @classmethod
    def from_trials(cls, model, n, dist_pv, dist_az, hits, failures=0):
        dist_pv = np.asarray(dist_pv, dtype=float)
        dist_az = np.asarray(dist_az, dtype=float)
        trials = len(dist_pv)
        stderr = float(np.std(dist_pv, ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
        return cls(model, n, trials, failures, float(np.mean(dist_pv)), float(np.mean(dist_az)),
                   stderr, float(np.count_nonzero(hits)) / trials)

    def as_row(self):
        return {
            'model': self.model,
            'n': self.n,
            'trials': self.trials,
            'failures': self.failures,
            'mean_dist_pv': self.mean_dist_pv,
            'mean_dist_az': self.mean_dist_az,
            'stderr_dist_pv': self.stderr_dist_pv,
            'circle_hit_fraction': self.circle_hit_fraction,
        }

    def __repr__(self):
        return 'CentroidAttackStats(model={}, n={}, trials={}, hits={:.3f})'.format(
            self.model, self.n, self.trials, self.circle_hit_fraction)


def centroid_attack(res, seed):
    """Guess the seed as the centroid of the concealing space"""
    guess = centroid(res.concealing)
    return guess, guess.distance_to(seed)


def two_centroid_circle_test(res, seed):
    """Does the circle spanned by the centroids of P_v* and A_z* hold the seed?"""
    seed = Point(*seed)
    a = centroid(res.concealing)
    b = centroid(res.zone_scaled.polygon)
    radius = a.distance_to(b) / 2.0
    tol = constants.EPS_GEOM * max(1.0, abs(seed.x), abs(seed.y))
    if 2.0 * radius <= tol:
        return seed.distance_to(a) <= tol
    center = (a + b) * 0.5
    return seed.distance_to(center) <= radius + tol
