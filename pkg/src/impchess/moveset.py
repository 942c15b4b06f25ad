"""Piece movesets and legal-move generation.

A move ``(y, x)`` takes a position ``lam`` to ``lam.sub(y, x)``: it deletes
``y`` rows from the top and ``x`` columns from the left. A moveset holds a
finite set of single steps plus a finite set of ray generators; a ray
``(dy, dx)`` stands for every positive multiple ``(k*dy, k*dx)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .partition import InvalidInput, Partition

__all__ = [
    "PieceId",
    "Moveset",
    "piece_moveset",
    "inverse",
    "legal_moves",
    "expanded_moves",
    "parse_moveset",
    "DOWNRIGHT",
    "PAWN",
    "KNIGHT",
    "BISHOP",
    "KING",
    "ROOK",
    "QUEEN",
    "ALL_PIECES",
]

Move = tuple[int, int]


class PieceId(str, Enum):
    DOWNRIGHT = "downright"
    PAWN = "pawn"
    KNIGHT = "knight"
    BISHOP = "bishop"
    KING = "king"
    ROOK = "rook"
    QUEEN = "queen"


def _check_vectors(vectors: Iterable[Move], what: str) -> frozenset:
    out = set()
    for v in vectors:
        dy, dx = v
        if not (isinstance(dy, int) and isinstance(dx, int)) or dy < 0 or dx < 0:
            raise InvalidInput(f"{what} must be pairs of non-negative integers, got {v!r}")
        if (dy, dx) == (0, 0):
            raise InvalidInput(f"(0,0) is not a legal {what[:-1]}")
        out.add((dy, dx))
    return frozenset(out)


@dataclass(frozen=True)
class Moveset:
    steps: frozenset = frozenset()
    rays: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "steps", _check_vectors(self.steps, "steps"))
        object.__setattr__(self, "rays", _check_vectors(self.rays, "rays"))

    @property
    def name(self) -> Optional[str]:
        for piece in PieceId:
            if _PIECES[piece] == self:
                return piece.value
        return None

    def literal(self) -> str:
        """Canonical text form; named pieces render as their name."""
        if self.name:
            return self.name
        parts = []
        if self.steps:
            parts.append("steps:" + ",".join(f"({a},{b})" for a, b in sorted(self.steps)))
        if self.rays:
            parts.append("rays:" + ",".join(f"({a},{b})" for a, b in sorted(self.rays)))
        return ";".join(parts)

    def __str__(self) -> str:
        return self.literal()

    def inverse(self) -> "Moveset":
        return inverse(self)


_PIECES = {
    PieceId.DOWNRIGHT: Moveset(steps={(0, 1), (1, 0)}),
    PieceId.PAWN: Moveset(steps={(0, 1), (1, 1)}),
    PieceId.KNIGHT: Moveset(steps={(1, 2), (2, 1)}),
    PieceId.BISHOP: Moveset(rays={(1, 1)}),
    PieceId.KING: Moveset(steps={(0, 1), (1, 0), (1, 1)}),
    PieceId.ROOK: Moveset(rays={(1, 0), (0, 1)}),
    PieceId.QUEEN: Moveset(rays={(1, 0), (0, 1), (1, 1)}),
}

DOWNRIGHT = _PIECES[PieceId.DOWNRIGHT]
PAWN = _PIECES[PieceId.PAWN]
KNIGHT = _PIECES[PieceId.KNIGHT]
BISHOP = _PIECES[PieceId.BISHOP]
KING = _PIECES[PieceId.KING]
ROOK = _PIECES[PieceId.ROOK]
QUEEN = _PIECES[PieceId.QUEEN]
ALL_PIECES = tuple(_PIECES.values())


def piece_moveset(piece) -> Moveset:
    try:
        return _PIECES[PieceId(piece.lower() if isinstance(piece, str) else piece)]
    except ValueError:
        raise InvalidInput(f"unknown piece {piece!r}") from None


def inverse(m: Moveset) -> Moveset:
    return Moveset(
        steps={(b, a) for a, b in m.steps},
        rays={(b, a) for a, b in m.rays},
    )


def expanded_moves(m: Moveset, rows: int, cols: int) -> list[Move]:
    """Every move of ``m`` that could fit a ``rows`` x ``cols`` bounding box."""
    out = {s for s in m.steps if s[0] < rows and s[1] < cols}
    for dy, dx in m.rays:
        k = 1
        while k * dy < rows and k * dx < cols:
            out.add((k * dy, k * dx))
            k += 1
    return sorted(out)


def legal_moves(m: Moveset, lam: Partition) -> list[tuple[Move, Partition]]:
    """``[(move, target), ...]`` sorted by move; empty iff ``lam`` is terminal."""
    if not lam:
        raise InvalidInput("legal_moves needs a nonempty partition")
    out = []
    for y, x in expanded_moves(m, len(lam), lam[0]):
        if lam[y] > x:
            out.append(((y, x), lam.sub(y, x)))
    return out


_PAIR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_moveset(text: str) -> Moveset:
    """Parse a piece name or ``"steps:(0,1),(1,0);rays:(1,1)"``."""
    text = text.strip()
    if ":" not in text:
        return piece_moveset(text)
    steps, rays = [], []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        head, _, body = chunk.partition(":")
        head = head.strip().lower()
        if head not in ("steps", "rays"):
            raise InvalidInput(f"unknown moveset section {head!r} in {text!r}")
        pairs = [(int(a), int(b)) for a, b in _PAIR.findall(body)]
        leftover = _PAIR.sub("", body).replace(",", "").strip()
        if leftover or not pairs:
            raise InvalidInput(f"cannot parse moveset section {chunk!r}")
        (steps if head == "steps" else rays).extend(pairs)
    return Moveset(steps=steps, rays=rays)
