import logging

from nvdd import utils
from nvdd.models import ModelKind, ModelParams, anonymize
from nvdd.sim import SweepConfig

logger = logging.getLogger(__name__)

DEFAULT_MODEL = 'I'

model_map = {kind.label: kind for kind in ModelKind}

# canonical option -> accepted spellings in a config file
config_aliases = {
    'model': ['model', 'kind'],
    'n': ['n', 'vertices', 'num_vertices'],
    'r': ['r', 'roi', 'roi_radius'],
    'iota': ['iota', 'privacy_radius'],
    'kappa': ['kappa'],
    'mu': ['mu'],
    'seed': ['seed', 'rng_seed', 'master_seed'],
    'iterations': ['iterations', 'trials'],
    'x': ['x'],
    'y': ['y'],
    'uid': ['uid', 'user_id'],
    'category': ['category', 'poi_category'],
    'out': ['out', 'output'],
    'format': ['format'],
}

config_types = {
    'n': int,
    'r': float,
    'iota': float,
    'kappa': float,
    'mu': float,
    'seed': int,
    'iterations': int,
    'x': float,
    'y': float,
    'uid': int,
    'category': int,
}


def read_config_file(config_file):
    """Options of a flat key = value file under their canonical names"""
    raw = utils.load_properties_config_file(config_file)
    options = {}
    for name, aliases in config_aliases.items():
        key, value = utils.get_config_value(raw, aliases)
        if key is None:
            continue
        options[name] = config_types.get(name, str)(value)
    unknown = set(raw) - {alias for aliases in config_aliases.values() for alias in aliases}
    for key in sorted(unknown):
        logger.warning("Ignoring unknown option %s in %s", key, config_file)
    return options


class Config(object):
    def __init__(self):
        self.reset()

    def reset(self):
        self._model_name = DEFAULT_MODEL
        self._model_kwargs = {}
        self._sweep_kwargs = {}

    def set_model(self, name=DEFAULT_MODEL, **kwargs):
        self._model_name = name
        self._model_kwargs = kwargs

    def get_model(self):
        kind = model_map.get(self._model_name)
        if kind is None:
            raise ValueError('Model name not found: {}\nAvailable models: {}'.format(
                self._model_name, list(model_map.keys())))
        return kind

    def get_params(self, **overrides):
        kwargs = dict(self._model_kwargs)
        kwargs.update(overrides)
        return ModelParams(**kwargs)

    def set_sweep(self, **kwargs):
        self._sweep_kwargs = kwargs

    def get_sweep_config(self, **overrides):
        kwargs = dict(self._sweep_kwargs)
        kwargs.update(overrides)
        return SweepConfig(**kwargs)

    def threads(self):
        return utils.get_threads()

    def anonymize(self, seed, rng=None):
        kind = self.get_model()
        params = self.get_params()
        logger.info("Using model %s with %s", kind.label, params)
        return anonymize(seed, kind, params, rng=rng)


config = Config()
