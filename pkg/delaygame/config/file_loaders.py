"""Reading raw settings from YAML files and pyproject.toml."""

import tomllib
from pathlib import Path
from typing import Any

import yaml


def load_yaml_settings(config_path: Path) -> dict[str, Any]:
    """Load a YAML mapping of settings.

    Raises:
        ValueError: The file cannot be read or does not hold a mapping.
    """
    try:
        with config_path.open('r') as f:
            data = yaml.safe_load(f)
    except (OSError, yaml.YAMLError) as e:
        msg = f'Error loading YAML config file {config_path}; {e}'
        raise ValueError(msg) from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        msg = f'{config_path} must contain a mapping of settings'
        raise ValueError(msg)
    return data


def load_pyproject_toml(pyproject_path: Path) -> dict[str, Any] | None:
    """The ``[tool.delaygame]`` table, or None when absent or unreadable."""
    try:
        with pyproject_path.open('rb') as f:
            data = tomllib.load(f)
        return data.get('tool', {}).get('delaygame')
    except (OSError, ValueError, TypeError):
        return None


def load_settings_file(config_path: Path) -> dict[str, Any]:
    """Settings from an explicit file: YAML, or a pyproject-style TOML file."""
    if config_path.suffix in ['.yaml', '.yml']:
        return load_yaml_settings(config_path)
    if config_path.suffix == '.toml':
        if not config_path.exists():
            msg = f'config file {config_path} does not exist'
            raise ValueError(msg)
        table = load_pyproject_toml(config_path)
        if table is None:
            msg = f'{config_path} has no [tool.delaygame] table'
            raise ValueError(msg)
        return table
    msg = f'Unsupported configuration file type: {config_path.suffix}'
    raise ValueError(msg)
