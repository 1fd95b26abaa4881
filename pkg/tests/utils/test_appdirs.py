import os

from embed3.utils.appdirs import (
    get_home_dir, get_conf_path, get_log_path, get_cache_path, platform,
)


def test_macos_dirs():
    platform.system = lambda: 'Darwin'

    assert get_conf_path(create=False) == get_home_dir() + '/Library/Application Support'
    assert get_cache_path(create=False) == get_conf_path(create=False)
    assert get_log_path(create=False) == get_home_dir() + '/Library/Logs'
    assert get_log_path('embed3', 'test.log', create=False) == \
        get_home_dir() + '/Library/Logs/embed3/test.log'


def test_linux_dirs():
    platform.system = lambda: 'Linux'

    os.environ['XDG_CONFIG_HOME'] = '/xdg_config_home'
    os.environ['XDG_CACHE_HOME'] = '/xdg_cache_home'

    assert get_conf_path(create=False) == '/xdg_config_home'
    assert get_cache_path(create=False) == '/xdg_cache_home'
    assert get_log_path(create=False) == '/xdg_cache_home'
    assert get_conf_path('embed3', 'embed3.ini', create=False) == \
        '/xdg_config_home/embed3/embed3.ini'

    del os.environ['XDG_CONFIG_HOME']
    del os.environ['XDG_CACHE_HOME']

    assert get_conf_path(create=False) == get_home_dir() + '/.config'
    assert get_cache_path(create=False) == get_home_dir() + '/.cache'
    assert get_log_path(create=False) == get_home_dir() + '/.cache'
