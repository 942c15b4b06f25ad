"""Closed-form values and predicates for King, Rook and Queen.

Each function here has a generic counterpart in :mod:`impchess.solver`; the
test suite checks them against each other. One-sided predicates
(:func:`queen_double_is_n`, :func:`queen_lambda_stair_is_n`) only ever
certify N; ``False`` means "no verdict".
"""

from __future__ import annotations

from typing import Optional

from .moveset import QUEEN, ROOK, Moveset
from .partition import InvalidInput, Partition, gen_staircase, rank, staircase
from .solver import Outcome, SgCache, outcome

__all__ = [
    "king_rect_sg",
    "king_stair_sg",
    "king_gs_square_sg",
    "king_even_outcomes",
    "king_even_parts_is_n",
    "king_gs_even_r_outcome",
    "rook_rect_sg",
    "rook_is_p",
    "is_ample",
    "is_ample_definitional",
    "rook_gs_pow2_sg",
    "stair_bounded_sg",
    "queen_double_is_n",
    "queen_lambda_stair_is_n",
    "wythoff_is_p",
    "wythoff_pairs",
]


def _require_positive(*values: int) -> None:
    for v in values:
        if not isinstance(v, int) or v < 1:
            raise InvalidInput(f"expected positive integers, got {values}")


# King


def king_rect_sg(r: int, c: int) -> int:
    _require_positive(r, c)
    if r % 2 and c % 2:
        return 0
    if r % 2 == 0 and c % 2 == 0:
        return 2
    return 1 if min(r, c) % 2 else 3


def king_stair_sg(k: int) -> int:
    _require_positive(k)
    return (k - 1) % 3


def king_gs_square_sg(r: int, k: int) -> int:
    _require_positive(r, k)
    if r % 2:
        raise InvalidInput(f"king_gs_square_sg needs even r, got {r}")
    return 2 if k == 1 else 1


def king_even_outcomes(lam: Partition, i: int, j: int) -> Outcome:
    """King outcome of ``lam[i, j]`` when every part of ``lam`` has even multiplicity."""
    if not lam or any(m % 2 for m in lam.multiplicities().values()):
        raise InvalidInput(f"every part must appear an even number of times in {lam}")
    if not lam.defined(i, j):
        raise InvalidInput(f"{lam}[{i},{j}] is not defined")
    return Outcome.P if i % 2 == 1 and (lam[i] - j) % 2 == 1 else Outcome.N


def king_even_parts_is_n(lam: Partition, i: int, j: int) -> bool:
    """Conjugate form: with every part even, ``lam[i, j]`` is N for even ``j``."""
    if not lam or any(p % 2 for p in lam):
        raise InvalidInput(f"every part of {lam} must be even")
    if not lam.defined(i, j):
        raise InvalidInput(f"{lam}[{i},{j}] is not defined")
    return j % 2 == 0


def king_gs_even_r_outcome(r: int, c: int, k: int, i: int, j: int) -> Outcome:
    _require_positive(r, c, k)
    if r % 2:
        raise InvalidInput(f"king_gs_even_r_outcome needs even r, got {r}")
    if not gen_staircase(r, c, k).defined(i, j):
        raise InvalidInput(f"gs({r},{c},{k})[{i},{j}] is not defined")
    return Outcome.P if (i * (c * (k - i // r) - j)) % 2 == 1 else Outcome.N


# Rook


def rook_rect_sg(r: int, c: int) -> int:
    _require_positive(r, c)
    return (r - 1) ^ (c - 1)


def rook_is_p(lam: Partition) -> bool:
    """Rook P-position test: rank 0 and ``lam[1,1]`` contains the staircase of size r-1."""
    if not lam:
        raise InvalidInput("rook_is_p needs a nonempty partition")
    if lam == (1,):
        return True
    if rank(lam) != 0:
        return False
    inner = lam.sub(1, 1)
    r = len(lam)
    if inner is None:
        return False
    return staircase(r - 1) <= inner


def is_ample(lam: Partition) -> bool:
    if not lam:
        raise InvalidInput("is_ample needs a nonempty partition")
    return rank(lam) == 0 and staircase(len(lam)) <= lam


def is_ample_definitional(lam: Partition, cache: Optional[SgCache] = None) -> bool:
    """Every row and every column of ``lam`` holds some Rook P-subposition."""
    if not lam:
        raise InvalidInput("is_ample needs a nonempty partition")
    p_cells = [
        (i, j)
        for i, width in enumerate(lam)
        for j in range(width)
        if outcome(ROOK, lam.sub(i, j), cache=cache) is Outcome.P
    ]
    rows = {i for i, _ in p_cells}
    cols = {j for _, j in p_cells}
    return rows == set(range(len(lam))) and cols == set(range(lam[0]))


def rook_gs_pow2_sg(ell: int, k: int, i: int, j: int) -> int:
    """Rook value of ``gs(2^ell, 2^ell, k)[i, j]``.

    Negative arguments of ``mod`` take the non-negative representative.
    """
    _require_positive(ell, k)
    if i < 0 or j < 0:
        raise InvalidInput("offsets must be non-negative")
    m = 1 << ell
    blocks = i // m + j // m
    if blocks > k - 1:
        raise InvalidInput(f"gs({m},{m},{k})[{i},{j}] is not defined")
    return m * (k - 1 - blocks) + (((-i - 1) % m) ^ ((-j - 1) % m))


# Rook and Queen


def stair_bounded_sg(m: Moveset, lam: Partition) -> int:
    """Rook/Queen value ``k - 1`` for ``lam`` inside the staircase of size ``k = max(lam_1, r)``."""
    if m not in (ROOK, QUEEN):
        raise InvalidInput("stair_bounded_sg applies to Rook and Queen only")
    if not lam:
        raise InvalidInput("stair_bounded_sg needs a nonempty partition")
    k = max(lam[0], len(lam))
    if not lam <= staircase(k):
        raise InvalidInput(f"{lam} is not contained in the staircase of size {k}")
    return k - 1


# Queen


def queen_double_is_n(lam: Partition) -> bool:
    if not lam:
        raise InvalidInput("queen_double_is_n needs a nonempty partition")
    a, b = lam[0] - 1, len(lam) - 1
    return a > 2 * b or b > 2 * a


def queen_lambda_stair_is_n(base: Partition, k: int) -> bool:
    """Queen verdict for ``lambda_stair(base, k)``: always N under the preconditions."""
    if not base or rank(base) != 0:
        raise InvalidInput(f"base must have rank 0, got {base}")
    if not isinstance(k, int) or k <= 1 or k % 2 == 0:
        raise InvalidInput(f"k must be an odd integer above 1, got {k}")
    return True


_wythoff_lower: list[int] = [0]
_wythoff_used: set[int] = {0}


def _extend_wythoff(n: int) -> None:
    # lower Wythoff sequence by the complementary-sequence recursion:
    # a_n = least positive integer not among a_0..a_{n-1}, b_0..b_{n-1}; b_n = a_n + n
    while len(_wythoff_lower) <= n:
        idx = len(_wythoff_lower)
        a = _wythoff_lower[-1] + 1
        while a in _wythoff_used:
            a += 1
        _wythoff_lower.append(a)
        _wythoff_used.add(a)
        _wythoff_used.add(a + idx)


def wythoff_pairs(limit: int) -> list[tuple[int, int]]:
    """Wythoff P-positions ``(a_n, b_n)`` with ``a_n <= limit``."""
    out = []
    n = 0
    while True:
        _extend_wythoff(n)
        a = _wythoff_lower[n]
        if a > limit:
            return out
        out.append((a, a + n))
        n += 1


def wythoff_is_p(a: int, b: int) -> bool:
    if a < 0 or b < 0:
        raise InvalidInput("Wythoff piles must be non-negative")
    a, b = min(a, b), max(a, b)
    n = b - a
    _extend_wythoff(n)
    return _wythoff_lower[n] == a
