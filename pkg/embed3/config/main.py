# -*- coding: utf-8 -*-
"""
embed3 configuration options.

"""
import copy
import logging

from embed3.config.base import get_conf_path
from embed3.config.user import UserConfig
from embed3.constants import (
    CONFIG_DIR_NAME, MAX_CIRCUIT_SUBSETS, MAX_REALIZATION_STEPS,
    MAX_ISOMORPHISM_STEPS, TIETZE_BUDGET, MAX_RELATOR_LENGTH,
)

logger = logging.getLogger(__name__)

# =============================================================================
#  Defaults
# =============================================================================

DEFAULTS = [
    ('main',
     {
         'field': 'gf2',  # field of the dual matroid
         'format': 'text',  # report format, 'text' or 'structured'
     }
     ),
    ('app',
     {
         'log_level': 20,  # log level for the log file, default to INFO
     }
     ),
    ('limits',
     {
         'max_circuit_subsets': MAX_CIRCUIT_SUBSETS,
         'max_realization_steps': MAX_REALIZATION_STEPS,
         'max_isomorphism_steps': MAX_ISOMORPHISM_STEPS,
         'tietze_budget': TIETZE_BUDGET,
         'max_relator_length': MAX_RELATOR_LENGTH,
     }
     ),
    ('pipeline',
     {
         'workers': 1,  # threads for per-vertex and per-face checks
         'allow_two_vertex_links': False,  # accept link graphs with two vertices
     }
     ),
]

# If you *change* a default value, do a MINOR update of the config version. If you
# *remove* or *rename* options, do a MAJOR update.
CONF_VERSION = '1.0.0'


# =============================================================================
# Factories
# =============================================================================

_config_instances = {}


def Embed3Config(config_name):
    """
    Returns the existing config instance for ``config_name`` or creates a new one.
    """

    if config_name in _config_instances:
        return _config_instances[config_name]

    config_path = get_conf_path(CONFIG_DIR_NAME, create=True)

    try:
        conf = UserConfig(config_path, config_name, defaults=copy.deepcopy(DEFAULTS),
                          version=CONF_VERSION, load=True)
    except OSError:
        conf = UserConfig(config_path, config_name, defaults=copy.deepcopy(DEFAULTS),
                          version=CONF_VERSION, load=False)

    _config_instances[config_name] = conf
    return conf
