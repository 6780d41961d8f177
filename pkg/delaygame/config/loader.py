import os
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from delaygame.errors import UsageError

from .discovery import find_config_source
from .file_loaders import load_settings_file
from .models import SETTINGS, DelayGameConfig

ENV_PREFIX = 'DELAYGAME_'


def get_env_settings(environ: Mapping[str, str] | None = None) -> dict[str, str]:
    """Settings given as ``DELAYGAME_<FIELD>`` environment variables."""
    environ = os.environ if environ is None else environ
    found = {}
    for name in SETTINGS:
        value = environ.get(f'{ENV_PREFIX}{name.upper()}')
        if value is not None:
            found[name] = value
    return found


def load_config(
    config_path: Path | None = None,
    *,
    cwd: Path | None = None,
    environ: Mapping[str, str] | None = None,
    overrides: Mapping[str, Any] | None = None,
) -> DelayGameConfig:
    """Merge every configuration source into one validated config.

    Precedence, lowest first: defaults, ``[tool.delaygame]`` in
    pyproject.toml or a standalone delaygame.yaml, the explicit
    ``config_path``, ``DELAYGAME_*`` environment variables, ``overrides``
    (command-line flags; None values are ignored).

    Raises:
        UsageError: A source cannot be read or holds invalid settings.
    """
    layers: list[tuple[str, Mapping[str, Any]]] = []
    try:
        implicit = find_config_source(cwd)
        if implicit is not None:
            layers.append((str(implicit), load_settings_file(implicit)))
        if config_path is not None:
            layers.append((str(config_path), load_settings_file(config_path)))
    except ValueError as e:
        raise UsageError(str(e)) from e
    for name, value in get_env_settings(environ).items():
        layers.append((f'env:{ENV_PREFIX}{name.upper()}', {name: value}))
    if overrides:
        layers.append(('command line', {k: v for k, v in overrides.items() if v is not None}))

    values: dict[str, Any] = {}
    origins: dict[str, str] = {}
    sources: list[str] = []
    for origin, settings in layers:
        if origin not in sources and settings:
            sources.append(origin)
        for key, value in settings.items():
            values[key] = value
            origins[key] = origin

    try:
        return DelayGameConfig.model_validate({**values, 'sources': sources, 'origins': origins})
    except ValidationError as e:
        problems = '; '.join(f'{".".join(str(p) for p in err["loc"])}: {err["msg"]}' for err in e.errors())
        msg = f'invalid configuration: {problems}'
        raise UsageError(msg) from e
