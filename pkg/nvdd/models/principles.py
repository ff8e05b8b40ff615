import abc
import enum
import logging

import six

from nvdd.geometry import min_edge_distance, scale_about
from nvdd.vdd import (VddInstance, AnonymityZone, delaunay_on_frame, voronoi_from_delaunay,
                      anonymity_zone)
from nvdd.models.shifting import sector_frame, interior_shift, exterior_shift

logger = logging.getLogger(__name__)


class ModelKind(enum.Enum):
    I = 'I'
    II = 'II'
    III = 'III'
    IAlpha = 'Ia'
    IIAlpha = 'IIa'
    IIIAlpha = 'IIIa'
    AlphaOnly = 'alpha'

    @property
    def label(self):
        return self.value

    @property
    def sector_shifting(self):
        """True for kinds that perturb the sector angles"""
        return self in (ModelKind.IAlpha, ModelKind.IIAlpha, ModelKind.IIIAlpha,
                        ModelKind.AlphaOnly)

    @classmethod
    def from_label(cls, label):
        for kind in cls:
            if kind.value == label or kind.name == label:
                return kind
        raise ValueError('Model name not found: {}\nAvailable models: {}'.format(
            label, [kind.value for kind in cls]))


PIPELINES = {
    ModelKind.I: ('S0', 'R1', 'P1', 'R0'),
    ModelKind.II: ('S0', 'P2', 'R1', 'R0'),
    ModelKind.III: ('S0', 'P2', 'R1', 'P1', 'R0'),
    ModelKind.IAlpha: ('S1', 'R1', 'P1', 'R0'),
    ModelKind.IIAlpha: ('S1', 'P2', 'R1', 'R0'),
    ModelKind.IIIAlpha: ('S1', 'P2', 'R1', 'P1', 'R0'),
}


class PipelineState(object):
    """Intermediate polygons handed from one principle to the next"""

    def __init__(self, seed, params):
        self.seed = seed
        self.params = params
        self.frame = None
        self.delaunay = None
        self.voronoi = None
        self.zone = None
        self.d0 = None
        self.scale = None
        self.concealing = None
        self.zone_scaled = None
        self.trace = []

    def instance(self):
        return VddInstance(self.frame, self.delaunay, self.voronoi)


@six.add_metaclass(abc.ABCMeta)
class PrincipleInterface(object):
    """One step of an anonymizing pipeline"""

    label = None

    @abc.abstractmethod
    def apply(self, state, rng):
        """Advance state in place"""
        raise NotImplementedError('PrincipleInterface.apply')


class RegularSectors(PrincipleInterface):
    """Equal sector angles at a random orientation"""
    label = 'S0'

    def apply(self, state, rng):
        state.frame = sector_frame(state.seed, state.params.n, 0.0, rng)


class SectorShift(PrincipleInterface):
    """Sector angles perturbed by up to kappa"""
    label = 'S1'

    def apply(self, state, rng):
        state.frame = sector_frame(state.seed, state.params.n, state.params.kappa, rng)


class ExteriorShift(PrincipleInterface):
    label = 'P2'

    def apply(self, state, rng):
        params = state.params
        state.delaunay = exterior_shift(state.seed, state.frame, params.mu, rng,
                                        r0=params.r0, max_retries=params.max_retries)


class Duality(PrincipleInterface):
    """Voronoi cell and anonymity zone of the Delaunay polygon.

    Without a prior exterior shift the Delaunay polygon has every vertex at
    distance r0.
    """
    label = 'R1'

    def apply(self, state, rng):
        if state.delaunay is None:
            state.delaunay = delaunay_on_frame(state.frame, [state.params.r0] * state.frame.n)
        state.voronoi = voronoi_from_delaunay(state.seed, state.frame, state.delaunay)
        state.zone = anonymity_zone(state.voronoi)


class InteriorShift(PrincipleInterface):
    label = 'P1'

    def apply(self, state, rng):
        state.voronoi = interior_shift(state.instance(), rng,
                                       max_retries=state.params.max_retries)
        state.zone = anonymity_zone(state.voronoi)


class Scaling(PrincipleInterface):
    """Scale the cell and zone about the seed so the ROI and privacy radius fit"""
    label = 'R0'

    def apply(self, state, rng):
        state.d0 = min_edge_distance(state.voronoi, state.seed)
        state.scale = state.params.scale_factor(state.d0)
        state.concealing = scale_about(state.voronoi, state.seed, state.scale)
        state.zone_scaled = AnonymityZone(scale_about(state.zone.polygon, state.seed,
                                                      state.scale))


principle_map = {
    'S0': RegularSectors,
    'S1': SectorShift,
    'P2': ExteriorShift,
    'R1': Duality,
    'P1': InteriorShift,
    'R0': Scaling,
}


def get_principle(label):
    fn = principle_map.get(label)
    if fn is None:
        raise ValueError('Principle name not found: {}\nAvailable principles: {}'.format(
            label, list(principle_map.keys())))
    return fn()
