"""Report schemas.

Each report keeps run-dependent diagnostics in ``meta``, which is left out
of the model dump; ``payload()`` puts both halves side by side.
"""

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

Winner = Literal['O', 'I']


class ScanStep(BaseModel):
    model_config = ConfigDict(extra='forbid')

    k: int = Field(..., ge=0, description='Lookahead evaluated')
    winner: Winner = Field(..., description='Winner from the initial vertex')


class LayerStats(BaseModel):
    model_config = ConfigDict(extra='forbid')

    preperiod: int = Field(..., ge=0, description='Index μ where the layer cycle starts')
    period: int = Field(..., ge=1, description='Cycle length λ')


class ReportMeta(BaseModel):
    """Run-dependent diagnostics."""

    wall_time_s: float = Field(default=0.0, description='Elapsed wall-clock seconds')
    largest_game: int = Field(default=0, description='Vertices of the largest game built')
    layer_sizes: list[int] = Field(default_factory=list, description='Size of every explored layer')


class _Report(BaseModel):
    model_config = ConfigDict(extra='forbid')

    meta: ReportMeta = Field(default_factory=ReportMeta, exclude=True)

    def payload(self) -> dict[str, Any]:
        return {'result': self.model_dump(mode='json'), 'meta': self.meta.model_dump(mode='json')}


class LookaheadReport(_Report):
    """Outcome of the factor-two approximation."""

    outcome: Literal['win', 'no_win']
    k_star: int | None = Field(default=None, description='Smallest k for which O wins the abstract game')
    reported: int | None = Field(default=None, description='The approximation 2·k_star − 1')
    scan: Literal['linear', 'binary'] = 'linear'
    scanned_ks: list[ScanStep] = Field(default_factory=list)
    layer_stats: LayerStats
    effective_bound: int = Field(..., ge=1, description='Largest k the scan had to consider')
    k_max: int = Field(..., description='2^(n²·c+1)')

    @model_validator(mode='after')
    def _check_outcome(self) -> 'LookaheadReport':
        if self.outcome == 'win':
            if self.k_star is None or self.reported != 2 * self.k_star - 1:
                msg = 'a win must report 2·k_star − 1'
                raise ValueError(msg)
            if self.k_star > self.effective_bound:
                msg = 'k_star lies beyond the effective bound'
                raise ValueError(msg)
        elif self.k_star is not None or self.reported is not None:
            msg = 'no_win carries no k_star'
            raise ValueError(msg)
        ks = [step.k for step in self.scanned_ks]
        if any(a >= b for a, b in zip(ks, ks[1:], strict=False)):
            msg = 'scanned_ks must be strictly increasing'
            raise ValueError(msg)
        return self


class ExactReport(_Report):
    """Outcome of the queue-game oracle."""

    outcome: Literal['exact', 'no_win_up_to']
    k_opt: int | None = None
    bound: int = Field(..., ge=0)
    per_k: list[ScanStep] = Field(default_factory=list)
    monotone_violations: list[int] = Field(
        default_factory=list,
        description='Lookaheads O loses although she wins some smaller one',
    )

    @model_validator(mode='after')
    def _check_outcome(self) -> 'ExactReport':
        if (self.outcome == 'exact') != (self.k_opt is not None):
            msg = 'k_opt is set exactly when the outcome is exact'
            raise ValueError(msg)
        return self


class ComparisonReport(_Report):
    """Approximation against the exact optimum."""

    k_opt: int | None = None
    reported: int | None = None
    sandwich_holds: bool | None = Field(
        default=None,
        description='k_opt ≤ reported ≤ 2·k_opt − 1; null when k_opt is 0 or unknown',
    )
    boundary: bool = Field(default=False, description='k_opt is 0, which the approximation cannot report')
    approx_outcome: Literal['win', 'no_win']
    exact_outcome: Literal['exact', 'no_win_up_to']
