from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field

SETTINGS = ('vertex_budget', 'layer_cap', 'enumeration_guard', 'output', 'parallelism', 'scan')


class DelayGameConfig(BaseModel):
    """Effective settings for a run."""

    model_config = ConfigDict(extra='forbid')

    vertex_budget: int = Field(
        default=5_000_000,
        gt=0,
        description='Largest parity game, in vertices, any command may build',
    )
    layer_cap: int = Field(
        default=1_000_000,
        gt=0,
        description='Most distinct behavior-function layers explored before giving up',
    )
    enumeration_guard: int = Field(
        default=1_000_000,
        gt=0,
        description='Most positional strategies the brute-force solver may enumerate per player',
    )
    output: Literal['text', 'json'] = Field(default='text', description='Report format on standard output')
    parallelism: int = Field(default=1, gt=0, description='Worker processes for the abstract-game scan')
    scan: Literal['linear', 'binary'] = Field(
        default='linear',
        description='How approx searches k; binary assumes monotone abstract games',
    )
    sources: list[str] = Field(
        default_factory=list,
        description='Configuration sources applied, lowest precedence first',
    )
    origins: dict[str, str] = Field(
        default_factory=dict,
        description='Source that last set each setting; unset settings are defaults',
    )

    def settings(self) -> dict[str, Any]:
        return self.model_dump(include=set(SETTINGS))
