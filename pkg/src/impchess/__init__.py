"""Impartial chess games played on integer partitions.

A position is a Young diagram; a move by a piece deletes rows from the top
and columns from the left. The package computes normal and misère Grundy
values, closed forms for King, Rook and Queen, game-DAG equivalences, and
Conway-Gurvich-Ho classifications of (piece, family) pairs.
"""

from .partition import (
    EMPTY,
    FamilySpec,
    InvalidInput,
    Partition,
    build_family,
    conjugate,
    corners,
    durfee,
    enumerate_partitions,
    gen_staircase,
    hook,
    lambda_stair,
    make_partition,
    parse_family,
    parse_partition,
    rank,
    rectangle,
    remove_corners,
    staircase,
    subpartition,
    young_leq,
)
from .moveset import (
    ALL_PIECES,
    BISHOP,
    DOWNRIGHT,
    KING,
    KNIGHT,
    PAWN,
    QUEEN,
    ROOK,
    Moveset,
    PieceId,
    inverse,
    legal_moves,
    parse_moveset,
    piece_moveset,
)
from .game_graph import (
    GameDag,
    build_dag,
    edge_labels,
    game_equivalent,
    longest_path,
    minimal_equivalent,
    partition_equivalent,
    phi_knight,
    phi_pawn,
    to_dot,
)
from .solver import (
    ConwayPair,
    Outcome,
    SgCache,
    TerminalPosition,
    ValueGrid,
    conway_pair,
    misere_g,
    outcome,
    sg,
    truncate,
    value_grid,
)
from .cgh import CghReport, PositionSet, classify, close_positions, evaluate

__version__ = "0.1.0"

__all__ = [
    "ALL_PIECES",
    "BISHOP",
    "CghReport",
    "ConwayPair",
    "DOWNRIGHT",
    "EMPTY",
    "FamilySpec",
    "GameDag",
    "InvalidInput",
    "KING",
    "KNIGHT",
    "Moveset",
    "Outcome",
    "PAWN",
    "Partition",
    "PieceId",
    "PositionSet",
    "QUEEN",
    "ROOK",
    "SgCache",
    "TerminalPosition",
    "ValueGrid",
    "build_dag",
    "build_family",
    "classify",
    "close_positions",
    "conjugate",
    "conway_pair",
    "corners",
    "durfee",
    "edge_labels",
    "enumerate_partitions",
    "evaluate",
    "game_equivalent",
    "gen_staircase",
    "hook",
    "inverse",
    "lambda_stair",
    "legal_moves",
    "longest_path",
    "make_partition",
    "minimal_equivalent",
    "misere_g",
    "outcome",
    "parse_family",
    "parse_moveset",
    "parse_partition",
    "partition_equivalent",
    "phi_knight",
    "phi_pawn",
    "piece_moveset",
    "rank",
    "rectangle",
    "remove_corners",
    "sg",
    "staircase",
    "subpartition",
    "to_dot",
    "truncate",
    "value_grid",
    "young_leq",
]
