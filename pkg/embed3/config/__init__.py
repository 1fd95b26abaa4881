from .base import get_conf_path, list_configs
from .main import Embed3Config

__all__ = ['get_conf_path', 'list_configs', 'Embed3Config']
