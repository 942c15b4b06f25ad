import json

import pytest

from impchess.cgh import (
    CSV_HEADER,
    FAMILIES,
    PROPERTIES,
    CghReport,
    Verdict,
    check_domestic,
    check_forced,
    check_miserable,
    check_pet,
    check_returnable,
    check_tame,
    classify,
    close_positions,
    evaluate,
    family_seeds,
    region_of,
    reports_to_csv,
    same_region,
    subposition_closure,
)
from impchess.moveset import (
    ALL_PIECES,
    BISHOP,
    DOWNRIGHT,
    KING,
    KNIGHT,
    PAWN,
    QUEEN,
    ROOK,
    inverse,
    legal_moves,
)
from impchess.partition import (
    InvalidInput,
    Partition,
    enumerate_partitions,
    gen_staircase,
    rectangle,
    staircase,
)
from impchess.solver import SWAP_01, SWAP_10, conway_pair

P = Partition
ONE = P((1,))


def closure(m, *seeds):
    """Move closure of the seeds together with all their subpositions."""
    return close_positions(m, subposition_closure(seeds))


# position sets


def test_close_positions_examples():
    assert set(close_positions(KING, [ONE])) == {ONE}
    assert set(close_positions(DOWNRIGHT, [P((2,))])) == {P((2,)), ONE}
    assert set(close_positions(ROOK, [rectangle(2, 2)])) == {P((2, 2)), P((2,)), P((1, 1)), ONE}


def test_close_positions_is_closed_and_ordered():
    for m in ALL_PIECES:
        s = close_positions(m, [P((5, 4, 2, 2)), staircase(4)])
        for lam in s:
            for _, t in legal_moves(m, lam):
                assert t in s
        assert list(s) == sorted(s, key=lambda p: (sum(p), [-x for x in p]))
    with pytest.raises(InvalidInput):
        close_positions(KING, [])


def test_subposition_closure_contains_every_subposition():
    lam = gen_staircase(2, 2, 2)
    out = subposition_closure([lam])
    assert out == {lam.sub(i, j) for i, j in lam.cells()}


# the six checks on the worked examples


def test_returnable_examples():
    v = check_returnable(closure(ROOK, P((6, 5, 5, 5, 5))))
    assert not v.holds and v.position == (6, 5, 5, 5, 5)
    v = check_returnable(closure(KING, gen_staircase(4, 3, 2)))
    assert not v.holds
    assert check_returnable(closure(DOWNRIGHT, staircase(4))).holds


def test_returnable_named_successors():
    # <6,5^4> is a swap position and its [1,0] successor cannot get back to the same pair
    lam = P((6, 5, 5, 5, 5))
    pair = conway_pair(ROOK, lam)
    assert pair.is_swap
    y = lam.sub(1, 0)
    assert all(conway_pair(ROOK, z) != pair for _, z in legal_moves(ROOK, y))


def test_forced_examples():
    # Pawn moves (0,1),(1,1): the forced-failure shows up on the transposed board
    assert check_forced(closure(PAWN, P((2, 2, 2, 1)))).holds
    assert not check_forced(closure(PAWN, P((4, 3)))).holds
    assert not check_forced(closure(inverse(PAWN), P((2, 2, 2, 1)))).holds
    for lam in enumerate_partitions(max_cells=12):
        assert check_forced(close_positions(BISHOP, [lam])).holds
    v = check_forced(closure(KING, staircase(4)))
    assert not v.holds and v.position == staircase(4)


@pytest.mark.parametrize(
    "m,lam",
    [(KNIGHT, rectangle(6, 5)), (KING, staircase(4)), (PAWN, staircase(4)), (DOWNRIGHT, gen_staircase(1, 2, 2))],
)
def test_not_forced_witnesses(m, lam):
    assert not check_forced(closure(m, lam)).holds


def test_domestic_examples():
    v = check_domestic(closure(ROOK, P((5, 4, 4, 4))))
    assert not v.holds and v.pair == (4, 0) and v.position == (5, 4, 4, 4)
    assert check_domestic(closure(KNIGHT, gen_staircase(6, 6, 2))).holds
    for m in ALL_PIECES:
        assert check_domestic(close_positions(m, [ONE])).holds


def test_tame_examples():
    gs = gen_staircase(6, 6, 2)
    v = check_tame(closure(KNIGHT, gs))
    assert not v.holds and v.pair == (2, 1)
    assert conway_pair(KNIGHT, gs.sub(1, 0)) == (2, 1)
    assert check_tame(closure(ROOK, P((4, 3, 3, 3, 3)))).holds
    for m in ALL_PIECES:
        assert check_tame(close_positions(m, [ONE])).holds


def test_miserable_examples():
    assert not check_miserable(closure(ROOK, P((4, 3, 3, 3, 3)))).holds
    assert check_miserable(closure(ROOK, rectangle(3, 3))).holds
    for m in ALL_PIECES:
        assert check_miserable(close_positions(m, [ONE])).holds


def test_pet_examples():
    v = check_pet(closure(ROOK, rectangle(3, 3)))
    assert not v.holds and v.pair == (0, 0)
    assert check_pet(closure(QUEEN, staircase(5))).holds
    assert check_pet(closure(BISHOP, rectangle(4, 4))).holds


# brute-force re-statement of the definitions


def _brute(s, m):
    pair = {x: conway_pair(m, x) for x in s}
    succ = {x: [t for _, t in legal_moves(m, x)] for x in s}
    returnable = all(
        any(pair[z] == pair[x] for z in succ[y])
        for x in s if pair[x].is_swap for y in succ[x] if succ[y]
    )
    forced = all(
        pair[y] == (SWAP_10 if pair[x] == SWAP_01 else SWAP_01)
        for x in s if pair[x].is_swap for y in succ[x]
    )
    domestic = not any(
        (a == 0 and b >= 2) or (b == 0 and a >= 2) for a, b in pair.values()
    )
    tame = all(p.is_swap or p.is_symmetric for p in pair.values())
    pet = all(p.is_swap or (p.is_symmetric and p.normal >= 2) for p in pair.values())
    miserable = all(
        (SWAP_01 in {pair[y] for y in succ[x]}) == (SWAP_10 in {pair[y] for y in succ[x]})
        for x in s if not pair[x].is_swap
    )
    return dict(returnable=returnable, forced=forced, domestic=domestic, tame=tame, miserable=miserable, pet=pet)


def test_checks_match_definitions():
    seeds = list(enumerate_partitions(max_cells=8)) + [P((5, 4, 4, 4)), gen_staircase(2, 2, 3), P((6, 5, 5))]
    for m in ALL_PIECES:
        for lam in seeds:
            s = closure(m, lam)
            got = {k: v.holds for k, v in evaluate(s).items()}
            assert got == _brute(s, m), (m.name, lam)


def test_failing_verdicts_carry_witnesses():
    for m in ALL_PIECES:
        s = closure(m, P((6, 5, 5, 5, 5)), gen_staircase(2, 2, 3))
        for name, v in evaluate(s).items():
            if not v.holds:
                assert v.position in s
                assert v.pair == conway_pair(m, v.position)
                if name in ("returnable", "forced"):
                    assert (v.move, v.target) in legal_moves(m, v.position)


# lattice and inheritance


def test_implication_lattice_on_many_sets():
    for m in ALL_PIECES:
        for lam in enumerate_partitions(max_cells=10):
            v = evaluate(close_positions(m, [lam]))
            assert not v["pet"] or (v["tame"] and v["miserable"])
            assert not v["tame"] or v["domestic"]
            assert not v["forced"] or v["returnable"]


def test_subset_inheritance():
    boards = list(enumerate_partitions(max_cells=9))
    for m in ALL_PIECES:
        for big in boards[::7]:
            s1 = closure(m, big)
            v1 = evaluate(s1)
            for small in {lam for lam in s1}:
                s2 = closure(m, small)
                assert set(s2) <= set(s1)
                v2 = evaluate(s2)
                for name in PROPERTIES:
                    if v1[name].holds:
                        assert v2[name].holds, (m.name, big, small, name)


def test_report_rejects_impossible_verdicts():
    no = Verdict(False, ONE, (0, 1))
    yes = Verdict(True)
    verdicts = dict(returnable=yes, forced=yes, domestic=no, tame=yes, miserable=yes, pet=yes)
    with pytest.raises(AssertionError):
        CghReport("king", "rect", {"max": 1}, verdicts, "P∩F")


# regions


@pytest.mark.parametrize(
    "flags,region",
    [
        ("111111", "P∩F"),
        ("101111", "P∩R"),
        ("001111", "P∩N'"),
        ("111110", "F∩M"),
        ("101110", "R∩M"),
        ("111100", "T∩F"),
        ("101000", "D∩R"),
        ("100000", "N∩R"),
        ("000000", "N∩N'"),
        ("110010", "F∩M"),
    ],
)
def test_region_labels(flags, region):
    verdicts = {name: Verdict(flag == "1") for name, flag in zip(PROPERTIES, flags)}
    assert region_of(verdicts) == region


def test_same_region_ignores_order():
    assert same_region("R∩D", "D∩R")
    assert not same_region("R∩D", "R∩M")


def test_family_seeds():
    assert family_seeds("stair", 3) == [staircase(1), staircase(2), staircase(3)]
    assert len(family_seeds("rect", 4)) == 16
    assert len(family_seeds("gs", 3)) == 27
    assert family_seeds("all", 3) == list(enumerate_partitions(max_cells=3))
    assert family_seeds("s1", 8) == [P((4,) + (3,) * 4), P((4,) + (3,) * 5)]
    assert family_seeds("s2", 8) == [P((5,) + (4,) * 7), P((5,) + (4,) * 8)]
    with pytest.raises(InvalidInput):
        family_seeds("blob", 3)
    assert set(FAMILIES) >= {"rect", "stair", "gs", "all"}


# reports


def test_classify_examples():
    assert same_region(classify(ROOK, "rect", 6).region, "F∩M")
    assert same_region(classify(PAWN, "stair", 8).region, "P∩R")
    extra = [gen_staircase(2, 2, 4), gen_staircase(4, 3, 2)]
    assert same_region(classify(KING, "gs", 3, extra).region, "N∩N'")


def test_report_json_round_trip():
    rep = classify(QUEEN, "gs", 2, [P((9, 8, 8, 8, 8))])
    data = json.loads(rep.to_json())
    assert data["scan"] == "bounded"
    assert data["bounds"] == {"max": 2}
    assert set(data["verdicts"]) == set(PROPERTIES)
    for w in data["witnesses"]:
        assert {"partition", "pair", "violated"} <= set(w)
        assert data["verdicts"][w["violated"]] == "fails"
    assert CghReport.from_json(rep.to_json()) == rep
    assert CghReport.from_json(rep.to_json()).to_json() == rep.to_json()


def test_report_csv():
    reps = [classify(m, "rect", 3) for m in (ROOK, KING)]
    lines = reports_to_csv(reps).splitlines()
    assert lines[0].split(",") == CSV_HEADER
    assert lines[1].startswith("rook,rect,F∩M,")
    assert len(lines) == 3


def test_classify_accepts_custom_movesets():
    rep = classify("steps:(0,1),(1,0),(1,1)", "rect", 4)
    assert rep.piece == "king"
    rep = classify("steps:(0,2);rays:(1,1)", "stair", 5)
    assert rep.piece == "steps:(0,2);rays:(1,1)"
    assert sum(not v.holds for v in rep.verdicts.values()) == len(rep.witnesses())
