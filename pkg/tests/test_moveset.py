import pytest

from impchess.moveset import (
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
    expanded_moves,
    inverse,
    legal_moves,
    parse_moveset,
    piece_moveset,
)
from impchess.partition import InvalidInput, Partition, conjugate, enumerate_partitions

import oracle


def test_piece_movesets_exact():
    assert piece_moveset("downright") == Moveset(steps={(0, 1), (1, 0)})
    assert piece_moveset("pawn") == Moveset(steps={(0, 1), (1, 1)})
    assert piece_moveset("knight").steps == {(1, 2), (2, 1)}
    assert piece_moveset("bishop") == Moveset(rays={(1, 1)})
    assert piece_moveset("king").steps == {(0, 1), (1, 0), (1, 1)}
    assert piece_moveset("rook").rays == {(1, 0), (0, 1)}
    assert piece_moveset("rook").steps == frozenset()
    assert piece_moveset("queen") == Moveset(rays={(1, 0), (0, 1), (1, 1)})


def test_piece_ids_are_bijective():
    assert len(set(ALL_PIECES)) == 7
    for pid in PieceId:
        assert piece_moveset(pid).name == pid.value
        assert piece_moveset(pid.value.upper()) == piece_moveset(pid)
    with pytest.raises(InvalidInput):
        piece_moveset("camel")


def test_inverse_examples():
    assert inverse(PAWN) == Moveset(steps={(1, 0), (1, 1)})
    assert inverse(QUEEN) == QUEEN
    assert inverse(KNIGHT) == KNIGHT
    for m in ALL_PIECES:
        assert inverse(inverse(m)) == m
    assert m.inverse() == inverse(m)


def test_zero_vector_rejected():
    with pytest.raises(InvalidInput):
        Moveset(steps={(0, 0)})
    with pytest.raises(InvalidInput):
        Moveset(rays={(0, 0)})
    with pytest.raises(InvalidInput):
        Moveset(steps={(-1, 2)})


def test_legal_moves_examples():
    assert legal_moves(ROOK, Partition((3,))) == [((0, 1), (2,)), ((0, 2), (1,))]
    assert legal_moves(KING, Partition((1,))) == []
    assert legal_moves(KNIGHT, Partition((3, 3, 2))) == [((1, 2), (1,)), ((2, 1), (1,))]


def test_legal_moves_order_is_lexicographic():
    for lam in enumerate_partitions(max_cells=9):
        for m in ALL_PIECES:
            moves = [mv for mv, _ in legal_moves(m, lam)]
            assert moves == sorted(moves)


def test_legal_moves_rejects_empty():
    with pytest.raises(InvalidInput):
        legal_moves(KING, Partition())


def test_expanded_moves_bounded_by_box():
    assert expanded_moves(ROOK, 2, 3) == [(0, 1), (0, 2), (1, 0)]
    assert expanded_moves(BISHOP, 4, 2) == [(1, 1)]
    assert expanded_moves(Moveset(rays={(1, 2)}), 5, 5) == [(1, 2), (2, 4)]


def test_move_counts_invariant_under_conjugation():
    for lam in enumerate_partitions(max_cells=16):
        lc = conjugate(lam)
        for m in ALL_PIECES:
            assert len(legal_moves(m, lam)) == len(legal_moves(inverse(m), lc))


def test_targets_are_strictly_smaller():
    for lam in enumerate_partitions(max_cells=12):
        for m in ALL_PIECES:
            for _, t in legal_moves(m, lam):
                assert t < lam and sum(t) < sum(lam)


def test_queen_moves_are_rook_plus_bishop():
    for lam in enumerate_partitions(max_cells=14):
        q = legal_moves(QUEEN, lam)
        r = legal_moves(ROOK, lam)
        b = legal_moves(BISHOP, lam)
        assert set(q) == set(r) | set(b)
        assert not set(r) & set(b)
        assert len(q) == len(r) + len(b)


def test_targets_match_cell_oracle():
    for parts in oracle.partitions_upto(9):
        lam = Partition(parts)
        for name in oracle.PIECES:
            got = sorted(tuple(t) for _, t in legal_moves(piece_moveset(name), lam))
            want = sorted(oracle.parts_of(cs) for cs in oracle.successors(name, oracle.cells(parts)))
            assert got == want, (name, parts)


def test_custom_moveset_literal_round_trip():
    m = parse_moveset("steps:(0,1),(1,0);rays:(1,1)")
    assert m.steps == {(0, 1), (1, 0)} and m.rays == {(1, 1)}
    assert m.name is None
    assert parse_moveset(m.literal()) == m
    assert parse_moveset("rays: (2, 1)") == Moveset(rays={(2, 1)})
    for piece in ALL_PIECES:
        assert parse_moveset(piece.literal()) == piece
    assert parse_moveset("steps:(0,1),(1,0)") == DOWNRIGHT


@pytest.mark.parametrize("text", ["jumps:(1,1)", "steps:(1,1),x", "steps:", "camel"])
def test_bad_moveset_literals(text):
    with pytest.raises(InvalidInput):
        parse_moveset(text)


def test_custom_ray_generators_expand_to_multiples():
    m = Moveset(rays={(2, 1)})
    lam = Partition((4,) * 7)
    assert [mv for mv, _ in legal_moves(m, lam)] == [(2, 1), (4, 2), (6, 3)]
