"""Integer partitions and Young-diagram operations.

A :class:`Partition` is an immutable, weakly decreasing tuple of positive
integers. Rows and columns are indexed from zero, so ``lam.sub(i, j)`` deletes
the first ``i`` rows and the first ``j`` columns of the diagram.

The comparison operators implement the Young order (diagram containment),
which is only a partial order; sort partitions with ``key=tuple`` or use
:func:`graded_key` when a total order is needed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

__all__ = [
    "InvalidInput",
    "Partition",
    "FamilySpec",
    "make_partition",
    "conjugate",
    "subpartition",
    "corners",
    "remove_corners",
    "young_leq",
    "rank",
    "durfee",
    "rectangle",
    "staircase",
    "hook",
    "gen_staircase",
    "lambda_stair",
    "build_family",
    "enumerate_partitions",
    "graded_key",
    "parse_partition",
    "parse_family",
]


class InvalidInput(ValueError):
    """Raised when an argument violates an operation's precondition."""


class Partition(tuple):
    """A weakly decreasing tuple of positive parts.

    >>> Partition([5, 4, 4, 2, 1, 1]).conjugate()
    Partition(6, 4, 3, 3, 1)
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        prev = None
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise InvalidInput(f"partition parts must be integers, got {p!r}")
            if p <= 0:
                raise InvalidInput(f"partition parts must be positive, got {parts}")
            if prev is not None and p > prev:
                raise InvalidInput(f"partition parts must be weakly decreasing, got {parts}")
            prev = p
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: tuple) -> "Partition":
        # skips validation; callers guarantee the invariant
        return tuple.__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self)) + ">"

    # Young order
    def __le__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return young_leq(self, other)

    def __ge__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return young_leq(other, self)

    def __lt__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self != other and young_leq(self, other)

    def __gt__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self != other and young_leq(other, self)

    # tuple's own __eq__/__hash__ are kept; a Partition never equals a plain
    # tuple in practice because all construction goes through this class.

    @property
    def rows(self) -> int:
        return len(self)

    @property
    def cols(self) -> int:
        return self[0] if self else 0

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-based part lookup, zero past the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def defined(self, i: int, j: int) -> bool:
        """True iff ``self.sub(i, j)`` is nonempty."""
        return 0 <= i < len(self) and j >= 0 and self[i] > j

    def sub(self, i: int, j: int) -> Optional["Partition"]:
        return subpartition(self, i, j)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self):
            for j in range(p):
                yield (i, j)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def literal(self) -> str:
        return ",".join(map(str, self))


EMPTY = Partition._trusted(())


def make_partition(raw: Iterable[int]) -> Partition:
    return Partition(raw)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    out = []
    r = len(lam)
    for j in range(lam[0]):
        while r and lam[r - 1] <= j:
            r -= 1
        out.append(r)
    return Partition._trusted(tuple(out))


def subpartition(lam: Partition, i: int, j: int) -> Optional[Partition]:
    """Return ``lam[i, j]``, or ``None`` when the result would be empty."""
    if i < 0 or j < 0:
        raise InvalidInput("subpartition offsets must be non-negative")
    if i >= len(lam) or lam[i] <= j:
        return None
    if j == 0:
        return Partition._trusted(lam[i:]) if i else lam
    out = []
    for p in lam[i:]:
        if p <= j:
            break
        out.append(p - j)
    return Partition._trusted(tuple(out))


def corners(lam: Partition) -> set[tuple[int, int]]:
    if not lam:
        raise InvalidInput("the empty partition has no corners")
    r = len(lam)
    return {(i, lam[i] - 1) for i in range(r) if i == r - 1 or lam[i] > lam[i + 1]}


def remove_corners(lam: Partition) -> Partition:
    """Delete every corner cell of ``lam`` (the partition lambda-minus)."""
    if len(lam) == 0 or lam == (1,):
        raise InvalidInput(f"remove_corners needs a partition larger than <1>, got {lam}")
    r = len(lam)
    out = [p - 1 if (i == r - 1 or p > lam[i + 1]) else p for i, p in enumerate(lam)]
    if out[-1] == 0:
        out.pop()
    return Partition._trusted(tuple(out))


def young_leq(lam: Partition, beta: Partition) -> bool:
    if len(lam) > len(beta):
        return False
    return all(a <= b for a, b in zip(lam, beta))


def rank(lam: Partition) -> int:
    if not lam:
        raise InvalidInput("rank is undefined for the empty partition")
    return abs(lam[0] - len(lam))


def durfee(lam: Partition) -> int:
    if not lam:
        raise InvalidInput("Durfee length is undefined for the empty partition")
    d = 0
    for idx, p in enumerate(lam, start=1):
        if p >= idx:
            d = idx
        else:
            break
    return d


# ---------------------------------------------------------------------------
# families


def _positive(*values: int) -> None:
    for v in values:
        if not isinstance(v, int) or v < 1:
            raise InvalidInput(f"family parameters must be positive integers, got {values}")


def rectangle(r: int, c: int) -> Partition:
    _positive(r, c)
    return Partition._trusted((c,) * r)


def staircase(k: int) -> Partition:
    _positive(k)
    return Partition._trusted(tuple(range(k, 0, -1)))


def hook(r: int, c: int) -> Partition:
    _positive(r, c)
    return Partition._trusted((c,) + (1,) * (r - 1))


def gen_staircase(r: int, c: int, k: int) -> Partition:
    """``k`` blocks of ``r`` equal rows with widths ``kc, (k-1)c, ..., c``."""
    _positive(r, c, k)
    return Partition._trusted(tuple(c * (k - (i - 1) // r) for i in range(1, r * k + 1)))


def lambda_stair(base: Partition, k: int) -> Partition:
    """``k`` copies of ``base`` placed diagonally, each shifted by ``base[0]``."""
    _positive(k)
    if not base:
        raise InvalidInput("lambda_stair needs a nonempty base partition")
    w = base[0]
    return Partition._trusted(tuple(s * w + p for s in range(k - 1, -1, -1) for p in base))


@dataclass(frozen=True)
class FamilySpec:
    """A parametrised partition family, e.g. ``FamilySpec("gs", (3, 2, 2))``."""

    kind: str
    params: tuple
    base: Optional[Partition] = None

    KINDS = ("rect", "stair", "hook", "gs", "lstair")

    def __post_init__(self):
        arity = {"rect": 2, "stair": 1, "hook": 2, "gs": 3, "lstair": 1}
        if self.kind not in arity:
            raise InvalidInput(f"unknown family kind {self.kind!r}")
        if len(self.params) != arity[self.kind]:
            raise InvalidInput(f"family {self.kind} takes {arity[self.kind]} parameters")
        if self.kind == "lstair" and not self.base:
            raise InvalidInput("lstair needs a nonempty base partition")

    def build(self) -> Partition:
        return build_family(self)

    def literal(self) -> str:
        if self.kind == "lstair":
            return f"lstair:[{self.base.literal()}]x{self.params[0]}"
        return f"{self.kind}:" + "x".join(map(str, self.params))


def build_family(spec: FamilySpec) -> Partition:
    kind, p = spec.kind, spec.params
    if kind == "rect":
        return rectangle(*p)
    if kind == "stair":
        return staircase(*p)
    if kind == "hook":
        return hook(*p)
    if kind == "gs":
        return gen_staircase(*p)
    return lambda_stair(spec.base, p[0])


# ---------------------------------------------------------------------------
# enumeration


def graded_key(lam: Partition):
    """Sort key for the canonical order: cell count, then parts descending."""
    return (sum(lam), tuple(-p for p in lam))


def _partitions_of(n: int, cap: int, row_caps: Optional[tuple] = None, row: int = 0):
    # parts in decreasing lexicographic order, each part <= cap and <= row_caps[row]
    if n == 0:
        yield ()
        return
    if row_caps is not None:
        if row >= len(row_caps):
            return
        cap = min(cap, row_caps[row])
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions_of(n - first, first, row_caps, row + 1):
            yield (first,) + rest


def enumerate_partitions(
    max_cells: Optional[int] = None, inside: Optional[Partition] = None
) -> Iterator[Partition]:
    """Yield nonempty partitions in graded order.

    Exactly one bound must be given: ``max_cells`` yields every partition of
    1..max_cells cells; ``inside`` yields every nonempty ``mu <= inside``.
    Within a cell count, partitions appear in decreasing lexicographic order
    of their parts, so ``<2>`` precedes ``<1,1>``.
    """
    if (max_cells is None) == (inside is None):
        raise InvalidInput("give exactly one of max_cells or inside")
    if inside is not None:
        caps = tuple(inside)
        for n in range(1, sum(caps) + 1):
            for parts in _partitions_of(n, n, caps):
                yield Partition._trusted(parts)
        return
    for n in range(1, max_cells + 1):
        for parts in _partitions_of(n, n):
            yield Partition._trusted(parts)


# ---------------------------------------------------------------------------
# text literals

_INT_LIST = re.compile(r"^\s*\d+(\s*,\s*\d+)*\s*$")


def parse_partition(text: str) -> Partition:
    """Parse ``"5,4,4,2,1,1"`` or a family literal such as ``"gs:3x2x2"``."""
    text = text.strip()
    if ":" in text:
        return parse_family(text).build()
    if text in ("", "<>", "[]"):
        return EMPTY
    text = text.strip("<>[]()")
    if not _INT_LIST.match(text):
        bad = next((t for t in text.split(",") if not t.strip().isdigit()), text)
        raise InvalidInput(f"cannot parse partition literal {text!r}: bad token {bad.strip()!r}")
    return Partition(int(t) for t in text.split(","))


def parse_family(text: str) -> FamilySpec:
    """Parse ``rect:3x4``, ``stair:6``, ``hook:6x4``, ``gs:3x2x2`` or ``lstair:[3,1]x3``."""
    kind, _, rest = text.strip().partition(":")
    kind = kind.strip().lower()
    if kind == "lstair":
        m = re.match(r"^\[([\d,\s]+)\]x(\d+)$", rest.strip())
        if not m:
            raise InvalidInput(f"cannot parse lstair literal {text!r}")
        base = parse_partition(m.group(1))
        return FamilySpec("lstair", (int(m.group(2)),), base)
    tokens = rest.split("x")
    bad = [t for t in tokens if not t.strip().isdigit()]
    if bad:
        raise InvalidInput(f"cannot parse family literal {text!r}: bad token {bad[0].strip()!r}")
    params = tuple(int(t) for t in tokens)
    spec = FamilySpec(kind, params)
    _positive(*params)
    return spec
