# -*- coding: utf-8 -*-
"""
Typed user configuration files based on :class:`configparser.ConfigParser`.

Values are stored as Python literals and converted back according to the type of their
default value. Files are replaced atomically on every save.

"""
import ast
import logging
import os.path as osp
import re
import configparser as cp
from threading import RLock

from atomicwrites import atomic_write

logger = logging.getLogger(__name__)


class NoDefault:
    pass


class UserConfig(cp.ConfigParser):
    """
    A ConfigParser with typed getters and setters and a versioned default section.

    :param str path: Folder of the configuration file.
    :param str name: File name without suffix.
    :param list defaults: List of tuples ``(section, {option: default})``.
    :param bool load: Read an existing file, if any, on top of the defaults.
    :param str version: Configuration version in 'major.minor.micro' format. Options
        which are no longer in the defaults are dropped when the major version changes.
    :param str suffix: File suffix.
    """

    DEFAULT_SECTION_NAME = 'main'
    _lock = RLock()

    def __init__(self, path, name, defaults=None, load=True, version='0.0.0',
                 suffix='.ini'):
        super().__init__(interpolation=None)

        self._path = path
        self._name = name
        self._suffix = suffix
        self._version = self._check_version(version)
        self.defaults = defaults or [(self.DEFAULT_SECTION_NAME, {})]

        self.reset_to_defaults(save=False)

        if load and osp.isfile(self.get_config_fpath()):
            with self._lock:
                try:
                    self.read(self.get_config_fpath(), encoding='utf-8')
                except cp.MissingSectionHeaderError:
                    logger.error('File contains no section headers.')

            old_version = self.get(self.DEFAULT_SECTION_NAME, 'version', '0.0.0')
            if old_version.split('.')[0] != version.split('.')[0]:
                self._remove_deprecated_options()

        self.set_version(version, save=False)

    @staticmethod
    def _check_version(version):
        if re.match(r'^(\d+)\.(\d+)\.(\d+)$', version) is None:
            raise ValueError(f'Version number {version} is incorrect - must be in '
                             f'major.minor.micro format')
        return version

    def _set(self, section, option, value):
        if not self.has_section(section):
            self.add_section(section)
        if not isinstance(value, str):
            value = repr(value)
        super().set(section, option, value)

    def _remove_deprecated_options(self):
        for section in self.sections():
            for option, _ in self.items(section, raw=True):
                if option != 'version' and self.get_default(section, option) is NoDefault:
                    super().remove_option(section, option)
            if not self.items(section, raw=True):
                super().remove_section(section)

    def get_config_fpath(self):
        """Returns the ini file where this configuration is stored."""
        return osp.join(self._path, self._name + self._suffix)

    def save(self):
        """Writes the configuration to its file."""
        with self._lock:
            try:
                with atomic_write(self.get_config_fpath(), overwrite=True,
                                  encoding='utf-8') as f:
                    self.write(f)
            except OSError:
                logger.exception('Failed to write user configuration file to disk')

    def set_version(self, version='0.0.0', save=True):
        self.set(self.DEFAULT_SECTION_NAME, 'version', self._check_version(version),
                 save=save)

    def reset_to_defaults(self, save=True, section=None):
        """Resets all options, or those of ``section``, to their defaults."""
        for sec, options in self.defaults:
            if section is None or section == sec:
                for option, value in options.items():
                    self._set(sec, option, value)
        if save:
            self.save()

    def get_default(self, section, option):
        for sec, options in self.defaults:
            if sec == section and option in options:
                return options[option]
        return NoDefault

    def get(self, section, option, default=NoDefault, **kwargs):
        """
        Gets an option, converted to the type of its default value.

        :param str section: Section name.
        :param str option: Option name.
        :param default: Returned and stored if the option does not exist. If not
            given, a missing option raises :class:`configparser.NoOptionError`.
        """
        if not self.has_option(section, option):
            if default is NoDefault:
                raise cp.NoOptionError(option, section)
            self.set(section, option, default, save=False)
            return default

        value = super().get(section, option, raw=True)
        default_value = self.get_default(section, option)

        if isinstance(default_value, str):
            return value
        elif isinstance(default_value, bool):
            value = ast.literal_eval(value)
        elif isinstance(default_value, int):
            value = int(value)
        else:
            try:
                value = ast.literal_eval(value)
            except (SyntaxError, ValueError):
                pass

        if default_value is not NoDefault and type(default_value) is not type(value):
            logger.error(f'Inconsistent config type for [{section}][{option}]. '
                         f'Expected {default_value.__class__.__name__} but '
                         f'got {value.__class__.__name__}.')

        return value

    def set(self, section, option, value, save=True):
        """Sets an option and saves the file unless ``save`` is ``False``."""
        default_value = self.get_default(section, option)

        if isinstance(default_value, bool):
            value = bool(value)
        elif isinstance(default_value, int):
            value = int(value)
        elif default_value is not NoDefault and not isinstance(default_value, str):
            value = repr(value)

        self._set(section, option, value)
        if save:
            self.save()
