"""Normal and misère Grundy values for impartial chess positions.

Both values come out of one memoized pass: a position's Conway pair is
``(mex of successor SG values, mex of successor misère values)``, with a
terminal position scoring ``(0, 1)``.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import NamedTuple, Optional, Union

from .moveset import Moveset, legal_moves, parse_moveset
from .partition import InvalidInput, Partition, parse_partition

__all__ = [
    "ConwayPair",
    "Outcome",
    "Convention",
    "SgCache",
    "TerminalPosition",
    "ValueGrid",
    "mex",
    "sg",
    "misere_g",
    "conway_pair",
    "outcome",
    "truncate",
    "value_grid",
    "default_cache",
]


class TerminalPosition(InvalidInput):
    """Raised when an operation needs a position with at least one move."""


class ConwayPair(NamedTuple):
    normal: int
    misere: int

    @property
    def is_swap(self) -> bool:
        return self in ((0, 1), (1, 0))

    @property
    def is_symmetric(self) -> bool:
        return self.normal == self.misere

    def __str__(self) -> str:
        return f"({self.normal},{self.misere})"


SWAP_01 = ConwayPair(0, 1)
SWAP_10 = ConwayPair(1, 0)


class Outcome(str, Enum):
    P = "P"
    N = "N"

    def __str__(self) -> str:
        return self.value


class Convention(str, Enum):
    NORMAL = "normal"
    MISERE = "misere"


def mex(values) -> int:
    values = list(values)
    seen = bytearray(len(values) + 1)
    for v in values:
        if v < len(seen):
            seen[v] = 1
    return seen.index(0)


class SgCache:
    """Per-moveset table of Conway pairs.

    Entries are written once and never change. Concurrent readers see either
    no entry or the final pair; two threads racing on one key compute the
    same value, so the duplicate write is harmless.
    """

    def __init__(self):
        self._tables: dict[Moveset, dict[Partition, ConwayPair]] = {}
        self._lock = threading.Lock()
        self.hits = 0

    def table(self, m: Moveset) -> dict:
        t = self._tables.get(m)
        if t is None:
            with self._lock:
                t = self._tables.setdefault(m, {})
        return t

    @property
    def entries(self) -> int:
        return sum(len(t) for t in self._tables.values())

    def clear(self) -> None:
        self._tables.clear()
        self.hits = 0

    def pair(self, m: Moveset, lam: Partition) -> ConwayPair:
        if not lam:
            raise InvalidInput("games are played on nonempty partitions")
        table = self.table(m)
        hit = table.get(lam)
        if hit is not None:
            self.hits += 1
            return hit
        # iterative post-order so long chains do not hit the recursion limit
        succ: dict[Partition, list[Partition]] = {}
        stack = [lam]
        while stack:
            p = stack[-1]
            if p in table:
                stack.pop()
                continue
            kids = succ.get(p)
            if kids is None:
                kids = succ[p] = [t for _, t in legal_moves(m, p)]
            missing = [q for q in kids if q not in table]
            if missing:
                stack.extend(missing)
                continue
            if kids:
                pairs = [table[q] for q in kids]
                table[p] = ConwayPair(mex(a for a, _ in pairs), mex(b for _, b in pairs))
            else:
                table[p] = ConwayPair(0, 1)
            del succ[p]
            stack.pop()
        return table[lam]

    # text table: one "moveset<TAB>parts<TAB>normal<TAB>misere" record per line
    def dump(self, path: Union[str, Path]) -> None:
        lines = []
        for m, table in self._tables.items():
            lit = m.literal()
            for lam, (a, b) in table.items():
                lines.append(f"{lit}\t{lam.literal()}\t{a}\t{b}")
        lines.sort()
        Path(path).write_text("\n".join(lines) + ("\n" if lines else ""))

    def load(self, path: Union[str, Path]) -> int:
        count = 0
        by_literal: dict[str, Moveset] = {}
        for line in Path(path).read_text().splitlines():
            if not line.strip():
                continue
            lit, parts, a, b = line.split("\t")
            m = by_literal.get(lit)
            if m is None:
                m = by_literal[lit] = parse_moveset(lit)
            self.table(m).setdefault(parse_partition(parts), ConwayPair(int(a), int(b)))
            count += 1
        return count


_default = SgCache()


def default_cache() -> SgCache:
    return _default


def conway_pair(m: Moveset, lam: Partition, cache: Optional[SgCache] = None) -> ConwayPair:
    return (cache or _default).pair(m, lam)


def sg(m: Moveset, lam: Partition, cache: Optional[SgCache] = None) -> int:
    return conway_pair(m, lam, cache).normal


def misere_g(m: Moveset, lam: Partition, cache: Optional[SgCache] = None) -> int:
    return conway_pair(m, lam, cache).misere


def outcome(
    m: Moveset,
    lam: Partition,
    convention: Union[Convention, str] = Convention.NORMAL,
    cache: Optional[SgCache] = None,
) -> Outcome:
    pair = conway_pair(m, lam, cache)
    value = pair.normal if Convention(convention) is Convention.NORMAL else pair.misere
    return Outcome.P if value == 0 else Outcome.N


def is_terminal(m: Moveset, lam: Partition) -> bool:
    return not legal_moves(m, lam)


def truncate(m: Moveset, lam: Partition) -> Partition:
    """Shrink ``lam`` to the cells whose subposition still has a move.

    Normal play on the result has the same P-positions as misère play on
    ``lam``. Row ``i`` keeps the cells ``(i, x)`` for which ``lam[i, x]`` is
    defined and non-terminal; those cells form a Young diagram because
    non-terminality is inherited by every larger subposition.
    """
    if not lam or is_terminal(m, lam):
        raise TerminalPosition(f"{lam} is terminal for {m}")
    rows = []
    for i, width in enumerate(lam):
        best = 0
        for x in range(width, 0, -1):
            if legal_moves(m, lam.sub(i, x - 1)):
                best = x
                break
        if best == 0:
            break
        rows.append(best)
    return Partition(rows)


# ---------------------------------------------------------------------------
# grids


GRID_KINDS = ("sg", "misere", "pair", "outcome")


@dataclass(frozen=True)
class ValueGrid:
    """Values of every subposition ``lam[i, j]``, laid out over the diagram of ``lam``.

    ``cells[i][j]`` is ``None`` outside the diagram.
    """

    moveset: Moveset
    partition: Partition
    kind: str
    cells: tuple

    def __getitem__(self, ij):
        i, j = ij
        return self.cells[i][j]

    @staticmethod
    def _fmt(v) -> str:
        if v is None:
            return "."
        if isinstance(v, tuple):
            return f"{v[0]},{v[1]}"
        return str(v)

    def to_text(self) -> str:
        rows = [[self._fmt(v) for v in row] for row in self.cells]
        w = max((len(s) for row in rows for s in row), default=1)
        return "\n".join(" ".join(s.rjust(w) for s in row) for row in rows) + "\n"

    def to_json(self) -> str:
        def enc(v):
            if v is None:
                return None
            if isinstance(v, tuple):
                return [v[0], v[1]]
            if isinstance(v, Outcome):
                return v.value
            return v

        return json.dumps(
            {
                "piece": self.moveset.literal(),
                "partition": list(self.partition),
                "kind": self.kind,
                "grid": [[enc(v) for v in row] for row in self.cells],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "ValueGrid":
        data = json.loads(text)
        kind = data["kind"]

        def dec(v):
            if v is None:
                return None
            if kind == "pair":
                return ConwayPair(*v)
            if kind == "outcome":
                return Outcome(v)
            return v

        return cls(
            parse_moveset(data["piece"]),
            Partition(data["partition"]),
            kind,
            tuple(tuple(dec(v) for v in row) for row in data["grid"]),
        )


def value_grid(
    m: Moveset, lam: Partition, kind: str = "sg", cache: Optional[SgCache] = None
) -> ValueGrid:
    if kind not in GRID_KINDS:
        raise InvalidInput(f"grid kind must be one of {GRID_KINDS}, got {kind!r}")
    cols = lam[0]
    rows = []
    for i in range(len(lam)):
        row = []
        for j in range(cols):
            sub = lam.sub(i, j) if j < lam[i] else None
            if sub is None:
                row.append(None)
                continue
            pair = conway_pair(m, sub, cache)
            if kind == "sg":
                row.append(pair.normal)
            elif kind == "misere":
                row.append(pair.misere)
            elif kind == "pair":
                row.append(pair)
            else:
                row.append(Outcome.P if pair.normal == 0 else Outcome.N)
        rows.append(tuple(row))
    return ValueGrid(m, lam, kind, tuple(rows))
