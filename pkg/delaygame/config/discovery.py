"""Configuration source discovery in the working directory."""

from pathlib import Path

from .file_loaders import load_pyproject_toml

STANDALONE_NAMES = ('delaygame.yaml', 'delaygame.yml')


def find_config_source(cwd: Path | None = None) -> Path | None:
    """The implicit configuration file, if any.

    A ``pyproject.toml`` with a ``[tool.delaygame]`` table wins over a
    standalone ``delaygame.yaml``/``delaygame.yml``.
    """
    cwd = cwd or Path.cwd()
    pyproject_path = cwd / 'pyproject.toml'
    if pyproject_path.exists() and load_pyproject_toml(pyproject_path) is not None:
        return pyproject_path
    for fname in STANDALONE_NAMES:
        config_file = cwd / fname
        if config_file.exists():
            return config_file
    return None
