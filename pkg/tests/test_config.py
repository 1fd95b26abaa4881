import configparser as cp

import pytest

from embed3.config.main import DEFAULTS, CONF_VERSION
from embed3.config.user import UserConfig
from embed3.pipeline import Limits


def _config(path, version=CONF_VERSION, defaults=DEFAULTS):
    return UserConfig(str(path), 'test', defaults=defaults, version=version, load=True)


def test_defaults(tmp_path):
    conf = _config(tmp_path)
    assert conf.get('main', 'field') == 'gf2'
    assert conf.get('app', 'log_level') == 20
    assert conf.get('pipeline', 'allow_two_vertex_links') is False
    assert conf.get('main', 'version') == CONF_VERSION

    with pytest.raises(cp.NoOptionError):
        conf.get('main', 'colour')
    assert conf.get('main', 'colour', 'red') == 'red'


def test_typed_round_trip(tmp_path):
    conf = _config(tmp_path)
    conf.set('pipeline', 'workers', 4)
    conf.set('pipeline', 'allow_two_vertex_links', True)
    conf.set('main', 'field', 'gf3')

    reloaded = _config(tmp_path)
    assert reloaded.get('pipeline', 'workers') == 4
    assert reloaded.get('pipeline', 'allow_two_vertex_links') is True
    assert reloaded.get('main', 'field') == 'gf3'

    reloaded.reset_to_defaults(section='pipeline')
    assert reloaded.get('pipeline', 'workers') == 1
    assert reloaded.get('main', 'field') == 'gf3'


def test_major_version_drops_removed_options(tmp_path):
    conf = _config(tmp_path, version='0.9.0',
                   defaults=[('main', {'field': 'gf2', 'old_option': 1})])
    conf.save()
    assert conf.has_option('main', 'old_option')

    conf = _config(tmp_path, version='1.0.0', defaults=[('main', {'field': 'gf2'})])
    assert not conf.has_option('main', 'old_option')
    assert conf.get('main', 'version') == '1.0.0'


def test_invalid_version(tmp_path):
    with pytest.raises(ValueError):
        _config(tmp_path, version='1.0')


def test_limits_from_config(tmp_path):
    conf = _config(tmp_path)
    conf.set('limits', 'max_realization_steps', 50)
    limits = Limits.from_config(conf)
    assert limits.max_realization_steps == 50
    assert limits.tietze_budget == Limits().tietze_budget
