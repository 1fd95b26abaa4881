# -*- coding: utf-8 -*-
"""
The :class:`Embed3` front end. It reads a named configuration, sets up logging and runs
the decision pipeline and the certificate verifier with the configured field, limits
and worker count.

"""
import sys
import logging.handlers
from collections import deque

from embed3.algebra import Field
from embed3.complex import DirectedComplex, load_complex
from embed3.config import Embed3Config
from embed3.constants import CONFIG_DIR_NAME
from embed3.maclane import maclane_check
from embed3.pipeline import (
    Limits, Certificate, decide, decide_cross_field, verify_certificate,
)
from embed3.utils.appdirs import get_log_path
from embed3.utils.serializer import read_json

logger = logging.getLogger(__name__)


# custom logging handlers

class CachedHandler(logging.Handler):
    """Handler which stores past records.

    :param int maxlen: Maximum number of records to store.
    """

    def __init__(self, maxlen=None):
        logging.Handler.__init__(self)
        self.cached_records = deque([], maxlen)

    def emit(self, record):
        self.format(record)
        self.cached_records.append(record)

    def getAllMessages(self):
        return [r.message for r in self.cached_records]

    def clear(self):
        self.cached_records.clear()


class Embed3:
    """
    Runs checks with the settings of a configuration.

    :param str config_name: Name of the configuration. A new configuration file is
        created if none exists.
    :param bool log_to_stderr: Echo log messages to stderr.
    """

    def __init__(self, config_name='embed3', log_to_stderr=False):

        self._log_to_stderr = log_to_stderr
        self._config_name = config_name
        self._conf = Embed3Config(self._config_name)

        self._setup_logging()

    def _setup_logging(self):
        """
        Sets up logging to a rotating log file, to stderr if requested and to a cache
        whose warnings are attached to verdicts.
        """

        log_level = self._conf.get('app', 'log_level')
        embed3_logger = logging.getLogger('embed3')
        embed3_logger.setLevel(logging.DEBUG)

        # drop handlers of earlier front ends in this process
        for handler in list(embed3_logger.handlers):
            if handler.get_name() and handler.get_name().startswith('embed3-'):
                embed3_logger.removeHandler(handler)
                handler.close()

        log_fmt_long = logging.Formatter(
            fmt='%(asctime)s %(name)s %(levelname)s: %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )
        log_fmt_short = logging.Formatter(fmt='%(message)s')

        # log to file
        rfh_log_file = get_log_path(CONFIG_DIR_NAME, self._config_name + '.log')
        self.log_handler_file = logging.handlers.RotatingFileHandler(
            rfh_log_file, maxBytes=10 ** 7, backupCount=1
        )
        self.log_handler_file.set_name('embed3-file')
        self.log_handler_file.setFormatter(log_fmt_long)
        self.log_handler_file.setLevel(log_level)
        embed3_logger.addHandler(self.log_handler_file)

        # log to stderr (disabled by default)
        level = log_level if self._log_to_stderr else 100
        self.log_handler_stream = logging.StreamHandler(sys.stderr)
        self.log_handler_stream.set_name('embed3-stream')
        self.log_handler_stream.setFormatter(log_fmt_long)
        self.log_handler_stream.setLevel(level)
        embed3_logger.addHandler(self.log_handler_stream)

        # collect warnings for reports
        self._log_handler_warning_cache = CachedHandler(maxlen=200)
        self._log_handler_warning_cache.set_name('embed3-warnings')
        self._log_handler_warning_cache.setFormatter(log_fmt_short)
        self._log_handler_warning_cache.setLevel(logging.WARNING)
        embed3_logger.addHandler(self._log_handler_warning_cache)

    # ==== config access =================================================================

    @property
    def config_name(self):
        """The selected configuration."""
        return self._config_name

    def get_conf(self, section, name):
        """Gets a configuration option."""
        return self._conf.get(section, name)

    @property
    def log_level(self):
        """Log level for the log file and the stream handler."""
        return self._conf.get('app', 'log_level')

    @log_level.setter
    def log_level(self, level_num):
        """Setter: Log level for the log file and the stream handler."""
        self.log_handler_file.setLevel(level_num)
        if self.log_to_stderr:
            self.log_handler_stream.setLevel(level_num)
        self._conf.set('app', 'log_level', level_num)

    @property
    def log_to_stderr(self):
        return self._log_to_stderr

    @log_to_stderr.setter
    def log_to_stderr(self, enabled=True):
        """Enables or disables logging to stderr."""
        self._log_to_stderr = enabled
        level = self.log_level if enabled else 100
        self.log_handler_stream.setLevel(level)

    @property
    def log_file(self):
        return self.log_handler_file.baseFilename

    @property
    def limits(self):
        return Limits.from_config(self._conf)

    def field(self, name=None):
        """Parses ``name``, defaulting to the configured field."""
        return Field.parse(name or self._conf.get('main', 'field'))

    # ==== checks ========================================================================

    def _load(self, source):
        if isinstance(source, DirectedComplex):
            return source
        return load_complex(source)

    def check(self, source, field=None, cross_field=False):
        """
        Runs the decision pipeline.

        :param source: Path of a complex file or a :class:`DirectedComplex`.
        :param str field: Field name, defaults to the configured field.
        :param bool cross_field: Also run over GF(2), GF(3), GF(5) and Q and compare
            the dual matroids.
        :returns: Verdict and the cross-field report, if requested.
        """
        c = self._load(source)
        workers = self._conf.get('pipeline', 'workers')
        allow_two = self._conf.get('pipeline', 'allow_two_vertex_links')

        self._log_handler_warning_cache.clear()
        verdict = decide(c, self.field(field), workers, allow_two, self.limits)
        verdict.warnings = self._log_handler_warning_cache.getAllMessages()

        cross = None
        if cross_field:
            cross = decide_cross_field(c, workers=workers, allow_two_vertex=allow_two,
                                       limits=self.limits)
        return verdict, cross

    def verify(self, path):
        """
        Reads and verifies a certificate file.

        :returns: Parsed certificate and the verification report.
        :raises CertificateError: if the file is not a readable certificate.
        """
        cert = Certificate.from_dict(read_json(path))
        workers = self._conf.get('pipeline', 'workers')
        return cert, verify_certificate(cert, workers)

    def maclane(self, source, field=None):
        c = self._load(source)
        limits = self.limits
        return maclane_check(c, self.field(field), limits.max_realization_steps,
                             limits.max_circuit_subsets)

    def __repr__(self):
        return f'<{self.__class__.__name__}(config={self._config_name!r})>'
