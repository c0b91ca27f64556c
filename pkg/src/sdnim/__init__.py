"""Perfect-play engine and verification workbench for Single-delete Nim."""

from .classifier import (
    ConditionReport,
    Outcome,
    Pattern,
    classify,
    classify2,
    classify3,
    classify4,
    diagnose4,
    family_outcome,
)
from .core import (
    InvalidMoveError,
    InvalidPositionError,
    Move,
    Position,
    StandardForm,
    apply_move,
    bit_at,
    bit_length,
    is_terminal,
    legal_moves,
    split_at_level,
    standardize,
    v2,
)
from .harness import (
    Transcript,
    VerificationReport,
    enumerate_p_positions,
    play_session,
    run_game,
    verify,
)
from .oracle import (
    OracleBudgetError,
    OracleTable,
    compare_with_classifier,
    solve,
    solve_with_length,
    sweep,
)
from .strategy import (
    DEFAULT_ENGINE_BUDGET,
    MoveAdvice,
    TerminalPositionError,
    UnknownOutcomeError,
    constructive_move3,
    constructive_move4,
    engine_move,
    winning_move,
)

__version__ = "0.1.0"

__all__ = [
    "ConditionReport",
    "DEFAULT_ENGINE_BUDGET",
    "InvalidMoveError",
    "InvalidPositionError",
    "Move",
    "MoveAdvice",
    "OracleBudgetError",
    "OracleTable",
    "Outcome",
    "Pattern",
    "Position",
    "StandardForm",
    "TerminalPositionError",
    "Transcript",
    "UnknownOutcomeError",
    "VerificationReport",
    "apply_move",
    "bit_at",
    "bit_length",
    "classify",
    "classify2",
    "classify3",
    "classify4",
    "compare_with_classifier",
    "constructive_move3",
    "constructive_move4",
    "diagnose4",
    "engine_move",
    "enumerate_p_positions",
    "family_outcome",
    "is_terminal",
    "legal_moves",
    "play_session",
    "run_game",
    "solve",
    "solve_with_length",
    "split_at_level",
    "standardize",
    "sweep",
    "v2",
    "verify",
    "winning_move",
]
