import os
import configparser
import logging

import numpy as np

from nvdd.constants import constants

logger = logging.getLogger(__name__)


def load_properties_config_file(config_file):
    """key = value pairs of a flat file with no section header"""
    parser = configparser.ConfigParser()
    with open(config_file, 'r') as f:
        try:
            parser.read_string("[default]\n" + f.read())
        except configparser.Error as e:
            raise ValueError("Cannot parse {}: {}".format(config_file, e))
    return dict(parser['default'])


def get_config_value(config, aliases):
    """(alias, value) of the one alias set in config, (None, None) when none is"""
    found = [(alias, config[alias]) for alias in aliases if alias in config]
    if len(found) > 1:
        raise ValueError("Conflicting options {}".format(dict(found)))
    return found[0] if found else (None, None)


def get_threads():
    """Worker threads allowed by NVDD_THREADS, 1 when unset or invalid"""
    value = os.environ.get(constants.THREADS_ENV)
    if not value:
        return 1
    try:
        threads = int(value)
    except ValueError:
        threads = 0
    if threads < 1:
        logger.warning("Ignoring %s=%s, expected a positive integer", constants.THREADS_ENV,
                       value)
        return 1
    return threads


def stream_seed(master_seed, *key):
    """SeedSequence for the random stream identified by key under master_seed"""
    return np.random.SeedSequence([int(master_seed)] + [int(k) for k in key])


def trial_streams(master_seed, key, count=2):
    """count independent generators for one trial"""
    return [np.random.default_rng(s) for s in stream_seed(master_seed, *key).spawn(count)]
