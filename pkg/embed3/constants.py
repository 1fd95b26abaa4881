# -*- coding: utf-8 -*-
"""
Enums, status strings, exit codes and default limits shared across embed3.

"""
from enum import Enum, IntEnum


# app
APP_NAME = 'embed3'
CONFIG_DIR_NAME = 'embed3'

# document formats
CERTIFICATE_FORMAT = 'embed3-certificate'
CERTIFICATE_VERSION = '1.0'
REPORT_FORMAT = 'embed3-report'
REPORT_VERSION = '1.0'

# default limits, overridden by the 'limits' config section
MAX_GROUND_SET = 24
MAX_CIRCUIT_SUBSETS = 2_000_000
MAX_REALIZATION_STEPS = 200_000
MAX_ISOMORPHISM_STEPS = 200_000
TIETZE_BUDGET = 2000
MAX_RELATOR_LENGTH = 400


class Status(Enum):
    """Outcome of the decision pipeline."""
    EmbeddableCertified = 'EMBEDDABLE_CERTIFIED'
    NotEmbeddable = 'NOT_EMBEDDABLE_DUAL_NOT_GRAPHIC'
    HypothesisFailed = 'HYPOTHESIS_FAILED'
    Inconclusive = 'INCONCLUSIVE'


class ExitCode(IntEnum):
    Certified = 0
    NotEmbeddable = 1
    HypothesisFailed = 2
    Inconclusive = 3
    InputError = 10
    ScaleExceeded = 11
    IOError = 12
    InternalError = 13


STATUS_EXIT_CODES = {
    Status.EmbeddableCertified: ExitCode.Certified,
    Status.NotEmbeddable: ExitCode.NotEmbeddable,
    Status.HypothesisFailed: ExitCode.HypothesisFailed,
    Status.Inconclusive: ExitCode.Inconclusive,
}


class Colour(Enum):
    """Colour of an edge of a complex with respect to a rotation framework."""
    Green = 'green'
    Red = 'red'
    DegenerateGreen = 'degenerate-green'


class Parity(Enum):
    Even = 'even'
    Odd = 'odd'


class MatroidMode(Enum):
    Cycle = 'cycle'
    Bond = 'bond'


class GroupStatus(Enum):
    """Outcome of the bounded fundamental group simplification."""
    CertifiedTrivial = 'CERTIFIED_TRIVIAL'
    Unknown = 'UNKNOWN'


class Connectivity(Enum):
    """How simple connectivity was established."""
    CertifiedTrivial = 'certified-trivial'
    HomologyOnly = 'homology-surrogate-only'
    RefutedByHomology = 'refuted-by-homology'


class Outcome(Enum):
    """Outcome of a single pipeline stage."""
    Passed = 'pass'
    Failed = 'fail'
    Info = 'info'
