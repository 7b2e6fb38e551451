"""Four-player quantum Minority game under correlated noise channels."""

from ._core import (
    ChannelKind,
    ChannelSpec,
    FormulaId,
    GameConfig,
    StrategyTriple,
    best_response_search,
    build_channel,
    compare,
    completeness_residual,
    entangler,
    formula_payoff,
    minority_payoff,
    ne_strategy,
    overlap_check,
    pauli,
    payoff_curve,
    run_game,
    strategy_unitary,
    validate_density,
)

__all__ = [
    "ChannelKind",
    "ChannelSpec",
    "FormulaId",
    "GameConfig",
    "StrategyTriple",
    "best_response_search",
    "build_channel",
    "compare",
    "completeness_residual",
    "entangler",
    "formula_payoff",
    "minority_payoff",
    "ne_strategy",
    "overlap_check",
    "pauli",
    "payoff_curve",
    "run_game",
    "strategy_unitary",
    "validate_density",
]
