from .loader import ENV_PREFIX, get_env_settings, load_config
from .models import SETTINGS, DelayGameConfig

__all__ = [
    'ENV_PREFIX',
    'SETTINGS',
    'DelayGameConfig',
    'get_env_settings',
    'load_config',
]
