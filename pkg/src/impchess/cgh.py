"""Conway-Gurvich-Ho properties of impartial chess games on finite position sets.

A family of games is scanned by closing a finite list of seed boards under
moves and checking every property position by position. A "holds" verdict is
therefore corroboration up to the scanned bound; a "fails" verdict always
names the offending position.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .moveset import Moveset, legal_moves, parse_moveset
from .partition import (
    InvalidInput,
    Partition,
    enumerate_partitions,
    gen_staircase,
    graded_key,
    hook,
    rectangle,
    staircase,
)
from .solver import SWAP_01, SWAP_10, ConwayPair, SgCache, conway_pair

__all__ = [
    "PROPERTIES",
    "PositionSet",
    "Verdict",
    "CghReport",
    "close_positions",
    "subposition_closure",
    "same_region",
    "check_returnable",
    "check_forced",
    "check_domestic",
    "check_tame",
    "check_miserable",
    "check_pet",
    "evaluate",
    "region_of",
    "family_seeds",
    "classify",
    "table1",
    "table1_columns",
    "TABLE1_EXPECTED",
    "TABLE1_PIECES",
    "TABLE1_COLUMNS",
    "WITNESS_BOARDS",
    "FAMILIES",
    "CSV_HEADER",
    "reports_to_csv",
]

PROPERTIES = ("returnable", "forced", "domestic", "tame", "miserable", "pet")


@dataclass(frozen=True)
class PositionSet:
    """Move-closed finite set of boards for one moveset, in graded order."""

    moveset: Moveset
    positions: tuple
    members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.positions))

    def __contains__(self, lam) -> bool:
        return lam in self.members

    def __len__(self) -> int:
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)


def close_positions(m: Moveset, seeds: Iterable[Partition]) -> PositionSet:
    seen = set()
    stack = [Partition(s) for s in seeds]
    if not stack:
        raise InvalidInput("close_positions needs at least one seed")
    while stack:
        lam = stack.pop()
        if lam in seen:
            continue
        if not lam:
            raise InvalidInput("seeds must be nonempty partitions")
        seen.add(lam)
        stack.extend(t for _, t in legal_moves(m, lam) if t not in seen)
    return PositionSet(m, tuple(sorted(seen, key=graded_key)))


def subposition_closure(seeds: Iterable[Partition]) -> set[Partition]:
    """Every nonempty ``lam[i, j]`` of every seed.

    This is a superset of any move closure, and it is what the families
    ``{lam[i, j]}`` (generalised staircases, ``s1``, ``s2``) are made of.
    """
    out = set()
    for lam in seeds:
        lam = Partition(lam)
        for i, width in enumerate(lam):
            for j in range(width):
                out.add(lam.sub(i, j))
    return out


@dataclass(frozen=True)
class Verdict:
    holds: bool
    position: Optional[Partition] = None
    pair: Optional[ConwayPair] = None
    move: Optional[tuple] = None
    target: Optional[Partition] = None

    def __bool__(self) -> bool:
        return self.holds

    def witness(self) -> Optional[dict]:
        if self.holds:
            return None
        out = {"partition": list(self.position), "pair": list(self.pair)}
        if self.move is not None:
            out["move"] = list(self.move)
            out["target"] = list(self.target)
        return out


_HOLDS = Verdict(True)


def _pairs(s: PositionSet, cache: Optional[SgCache]):
    return {lam: conway_pair(s.moveset, lam, cache) for lam in s.positions}


def check_returnable(s: PositionSet, cache: Optional[SgCache] = None) -> Verdict:
    pairs = _pairs(s, cache)
    for lam in s.positions:
        p = pairs[lam]
        if not p.is_swap:
            continue
        for mv, y in legal_moves(s.moveset, lam):
            onward = legal_moves(s.moveset, y)
            if onward and not any(conway_pair(s.moveset, z, cache) == p for _, z in onward):
                return Verdict(False, lam, p, mv, y)
    return _HOLDS


def check_forced(s: PositionSet, cache: Optional[SgCache] = None) -> Verdict:
    pairs = _pairs(s, cache)
    for lam in s.positions:
        p = pairs[lam]
        if not p.is_swap:
            continue
        other = SWAP_10 if p == SWAP_01 else SWAP_01
        for mv, y in legal_moves(s.moveset, lam):
            if conway_pair(s.moveset, y, cache) != other:
                return Verdict(False, lam, p, mv, y)
    return _HOLDS


def _first_bad(s: PositionSet, cache, bad) -> Verdict:
    for lam, p in _pairs(s, cache).items():
        if bad(p):
            return Verdict(False, lam, p)
    return _HOLDS


def check_domestic(s: PositionSet, cache: Optional[SgCache] = None) -> Verdict:
    return _first_bad(s, cache, lambda p: (p.normal == 0 and p.misere >= 2) or (p.misere == 0 and p.normal >= 2))


def check_tame(s: PositionSet, cache: Optional[SgCache] = None) -> Verdict:
    return _first_bad(s, cache, lambda p: not (p.is_swap or p.is_symmetric))


def check_pet(s: PositionSet, cache: Optional[SgCache] = None) -> Verdict:
    return _first_bad(s, cache, lambda p: not (p.is_swap or (p.is_symmetric and p.normal >= 2)))


def check_miserable(s: PositionSet, cache: Optional[SgCache] = None) -> Verdict:
    pairs = _pairs(s, cache)
    for lam in s.positions:
        p = pairs[lam]
        if p.is_swap:
            continue
        reach = {conway_pair(s.moveset, y, cache) for _, y in legal_moves(s.moveset, lam)}
        has01, has10 = SWAP_01 in reach, SWAP_10 in reach
        if has01 != has10:
            return Verdict(False, lam, p)
    return _HOLDS


_CHECKS = {
    "returnable": check_returnable,
    "forced": check_forced,
    "domestic": check_domestic,
    "tame": check_tame,
    "miserable": check_miserable,
    "pet": check_pet,
}


def evaluate(s: PositionSet, cache: Optional[SgCache] = None) -> dict:
    return {name: _CHECKS[name](s, cache) for name in PROPERTIES}


def region_of(verdicts: dict) -> str:
    """Table-style region label, e.g. ``"F∩M"``, from the six verdicts."""
    if verdicts["pet"]:
        first = "P"
    elif verdicts["miserable"]:
        first = "M"
    elif verdicts["tame"]:
        first = "T"
    elif verdicts["domestic"]:
        first = "D"
    else:
        first = "N"
    if verdicts["forced"]:
        second = "F"
    elif verdicts["returnable"]:
        second = "R"
    else:
        second = "N'"
    # the miserable column is conventionally written second, e.g. F∩M
    if first == "M":
        return f"{second}∩{first}"
    return f"{first}∩{second}"


def same_region(a: str, b: str) -> bool:
    """Compare region labels regardless of the order the two classes are written in."""
    return set(a.split("∩")) == set(b.split("∩"))


# ---------------------------------------------------------------------------
# families and reports

FAMILIES = ("rect", "stair", "gs", "hook", "all", "s1", "s2")


def family_seeds(family: str, bound: int) -> list[Partition]:
    """Seed boards for a family with every parameter (or cell count) at most ``bound``.

    ``all`` is every partition of at most ``bound`` cells. ``s1`` is
    ``<l+1, l^k>`` for ``3 <= l`` and ``l < k`` with ``l + k <= bound``;
    ``s2`` is ``<5, 4^k>`` for ``7 <= k <= bound``.
    """
    rng = range(1, bound + 1)
    if family == "rect":
        return [rectangle(r, c) for r in rng for c in rng]
    if family == "stair":
        return [staircase(k) for k in rng]
    if family == "hook":
        return [hook(r, c) for r in rng for c in rng]
    if family == "gs":
        return [gen_staircase(r, c, k) for r in rng for c in rng for k in rng]
    if family == "all":
        return list(enumerate_partitions(max_cells=bound))
    if family == "s1":
        return [
            Partition((ell + 1,) + (ell,) * k)
            for ell in range(3, bound + 1)
            for k in range(ell + 1, bound + 1)
            if ell + k <= bound
        ]
    if family == "s2":
        return [Partition((5,) + (4,) * k) for k in range(7, bound + 1)]
    raise InvalidInput(f"unknown family {family!r}; expected one of {FAMILIES}")


@dataclass
class CghReport:
    piece: str
    family: str
    bounds: dict
    verdicts: dict
    region: str
    positions: int = 0
    extra: list = field(default_factory=list)

    def __post_init__(self):
        v = self.verdicts
        # containments between the classes
        assert not v["pet"] or (v["tame"] and v["miserable"]), "pet without tame/miserable"
        assert not v["tame"] or v["domestic"], "tame without domestic"
        assert not v["forced"] or v["returnable"], "forced without returnable"

    def witnesses(self) -> list[dict]:
        out = []
        for name in PROPERTIES:
            w = self.verdicts[name].witness()
            if w is not None:
                w["violated"] = name
                out.append(w)
        return out

    def to_dict(self) -> dict:
        return {
            "piece": self.piece,
            "family": self.family,
            "bounds": self.bounds,
            "positions": self.positions,
            "extra": [list(p) for p in self.extra],
            "scan": "bounded",
            "verdicts": {k: ("holds" if v.holds else "fails") for k, v in self.verdicts.items()},
            "region": self.region,
            "witnesses": self.witnesses(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: dict) -> "CghReport":
        wit = {w["violated"]: w for w in data["witnesses"]}
        verdicts = {}
        for name, state in data["verdicts"].items():
            if state == "holds":
                verdicts[name] = Verdict(True)
                continue
            w = wit[name]
            verdicts[name] = Verdict(
                False,
                Partition(w["partition"]),
                ConwayPair(*w["pair"]),
                tuple(w["move"]) if "move" in w else None,
                Partition(w["target"]) if "target" in w else None,
            )
        return cls(
            data["piece"],
            data["family"],
            data["bounds"],
            verdicts,
            data["region"],
            data.get("positions", 0),
            [Partition(p) for p in data.get("extra", [])],
        )

    @classmethod
    def from_json(cls, text: str) -> "CghReport":
        return cls.from_dict(json.loads(text))

    def csv_row(self) -> list:
        return [self.piece, self.family, self.region] + [
            "holds" if self.verdicts[k].holds else "fails" for k in PROPERTIES
        ]

    def __eq__(self, other):
        if not isinstance(other, CghReport):
            return NotImplemented
        return self.to_dict() == other.to_dict()


CSV_HEADER = ["piece", "family", "region", *PROPERTIES]


def reports_to_csv(reports: Iterable[CghReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for rep in reports:
        w.writerow(rep.csv_row())
    return buf.getvalue()


def classify(
    m: Moveset,
    family: str,
    bound: int,
    extra: Iterable[Partition] = (),
    cache: Optional[SgCache] = None,
) -> CghReport:
    if isinstance(m, str):
        m = parse_moveset(m)
    extra = [Partition(p) for p in extra]
    seeds = subposition_closure(family_seeds(family, bound) + extra)
    s = close_positions(m, sorted(seeds, key=graded_key))
    verdicts = evaluate(s, cache)
    return CghReport(
        m.literal(), family, {"max": bound}, verdicts, region_of(verdicts), len(s), extra
    )


# ---------------------------------------------------------------------------
# the seven-piece classification table

TABLE1_PIECES = ("downright", "pawn", "knight", "rook", "queen", "bishop", "king")
TABLE1_COLUMNS = ("Y+", "gs", "rect", "stair")

# expected region of every (piece, column) cell
TABLE1_EXPECTED = {
    "downright": ("R∩D", "P∩R", "P∩F", "P∩F"),
    "pawn": ("P∩R", "P∩R", "P∩F", "P∩R"),
    "knight": ("D∩R", "D∩R", "P∩R", "P∩F"),
    "rook": ("N∩N'", "F∩M", "F∩M", "P∩F"),
    "queen": ("N∩N'", "R∩M", "R∩M", "P∩F"),
    "bishop": ("P∩F", "P∩F", "P∩F", "P∩F"),
    "king": ("N∩N'", "N∩N'", "F∩M", "P∩R"),
}

# boards whose Conway pairs witness the "not X" verdicts beyond the small scans
WITNESS_GS = (
    gen_staircase(2, 2, 4),
    gen_staircase(4, 3, 2),
    gen_staircase(6, 6, 2),
)
WITNESS_BOARDS = (
    Partition((5, 4, 4, 4)),
    Partition((9, 8, 8, 8, 8)),
    Partition((6, 5, 5, 5, 5)),
    Partition((11,) * 13 + (10,) * 4),
) + WITNESS_GS


def table1_columns(max_cells: int = 14, gs_max: int = 3, rect_max: int = 6, stair_max: int = 8):
    """``(column, family, bound, extra seeds)`` for each column of the table."""
    return (
        ("Y+", "all", max_cells, WITNESS_BOARDS),
        ("gs", "gs", gs_max, WITNESS_GS),
        ("rect", "rect", rect_max, ()),
        ("stair", "stair", stair_max, ()),
    )


def table1(pieces: Iterable[str] = TABLE1_PIECES, cache: Optional[SgCache] = None, **bounds):
    """Classify every (piece, column) cell; returns ``{piece: [CghReport, ...]}``."""
    out = {}
    for piece in pieces:
        m = parse_moveset(piece)
        out[piece] = [
            classify(m, family, bound, extra, cache)
            for _, family, bound, extra in table1_columns(**bounds)
        ]
    return out
