"""Fixtures for integration tests."""

import json
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import pytest

from delaygame.cli.main import main


@dataclass
class CliResult:
    exit_code: int
    out: str
    err: str

    @property
    def payload(self) -> dict[str, Any]:
        return json.loads(self.out)


CliRunner = Callable[..., CliResult]


def reference(name: str) -> str:
    return f'@delaygame:resources/instances/{name}.json'


@pytest.fixture
def run_cli(tmp_path: Path, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> CliRunner:
    """Run the CLI in-process from an empty working directory."""
    monkeypatch.chdir(tmp_path)
    for name in ('VERTEX_BUDGET', 'LAYER_CAP', 'ENUMERATION_GUARD', 'OUTPUT', 'PARALLELISM', 'SCAN'):
        monkeypatch.delenv(f'DELAYGAME_{name}', raising=False)

    def run(*argv: str) -> CliResult:
        capsys.readouterr()
        code = main(list(argv))
        captured = capsys.readouterr()
        return CliResult(exit_code=code, out=captured.out, err=captured.err)

    return run
