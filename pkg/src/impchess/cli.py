"""Command-line front end.

Exit status is 0 on success, 1 when a verification command finds a
mismatch, and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from . import closed_forms as cf
from .cgh import (
    FAMILIES,
    TABLE1_COLUMNS,
    TABLE1_EXPECTED,
    TABLE1_PIECES,
    classify,
    reports_to_csv,
    same_region,
    table1,
)
from .game_graph import (
    build_dag,
    game_equivalent,
    minimal_equivalent,
    partition_equivalent,
    phi_knight,
    phi_pawn,
    to_dot,
)
from .moveset import KING, QUEEN, ROOK, Moveset, parse_moveset
from .partition import (
    FamilySpec,
    InvalidInput,
    Partition,
    gen_staircase,
    parse_partition,
)
from .solver import conway_pair, default_cache, outcome, truncate, value_grid

CACHE_ENV = "PARTITION_GAMES_CACHE"
EXIT_OK, EXIT_MISMATCH, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument helpers


def _moveset(args, prefix: str = "") -> Moveset:
    piece = getattr(args, prefix + "piece", None)
    literal = getattr(args, prefix + "moveset", None)
    if piece and literal:
        flag = "--" + prefix.replace("_", "-")
        raise UsageError(f"give {flag}piece or {flag}moveset, not both")
    if not piece and not literal:
        flag = "--" + prefix.replace("_", "-")
        raise UsageError(f"one of {flag}piece or {flag}moveset is required")
    return parse_moveset(piece or literal)


def _partition(text: Optional[str], flag: str = "--partition") -> Partition:
    if text is None:
        raise UsageError(f"{flag} is required")
    lam = parse_partition(text)
    if not lam:
        raise InvalidInput(f"{flag} {text!r} is the empty partition; games need at least one cell")
    return lam


def _at(lam: Partition, at: Optional[str]) -> Partition:
    if at is None:
        return lam
    try:
        i, j = (int(t) for t in at.split(","))
    except ValueError:
        raise InvalidInput(f"cannot parse --at {at!r}; expected i,j") from None
    sub = lam.sub(i, j)
    if sub is None:
        raise InvalidInput(f"{lam}[{i},{j}] is not defined")
    return sub


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _check_format(args, allowed) -> None:
    if args.format not in allowed:
        raise UsageError(f"--format {args.format} is not supported by {args.command}; use one of {', '.join(allowed)}")


# ---------------------------------------------------------------------------
# position queries


def cmd_value(args) -> int:
    _check_format(args, ("text", "json"))
    m = _moveset(args)
    base = _partition(args.partition)
    lam = _at(base, args.at)
    pair = conway_pair(m, lam)
    if args.command == "sg":
        value, key = pair.normal, "sg"
    elif args.command == "pair":
        value, key = pair, "pair"
    else:
        value, key = outcome(m, lam, args.convention), "outcome"
    if args.format == "json":
        enc = list(value) if key == "pair" else (value.value if key == "outcome" else value)
        data = {"piece": m.literal(), "partition": list(lam), key: enc}
        if key == "outcome":
            data["convention"] = args.convention
        _emit(json.dumps(data))
    else:
        _emit(str(value))
    return EXIT_OK


def cmd_grid(args) -> int:
    _check_format(args, ("text", "json", "dot"))
    m = _moveset(args)
    lam = _partition(args.partition)
    if args.format == "dot":
        _emit(to_dot(build_dag(m, lam)))
        return EXIT_OK
    grid = value_grid(m, lam, args.kind)
    _emit(grid.to_json() if args.format == "json" else grid.to_text())
    return EXIT_OK


def cmd_truncate(args) -> int:
    _check_format(args, ("text", "json"))
    m = _moveset(args)
    lam = _partition(args.partition)
    mu = truncate(m, lam)
    if args.format == "json":
        _emit(json.dumps({"piece": m.literal(), "partition": list(lam), "truncation": list(mu)}))
    else:
        _emit(mu.literal())
    return EXIT_OK


def cmd_reduce(args) -> int:
    _check_format(args, ("text", "json", "dot"))
    m = _moveset(args)
    lam = _partition(args.partition)
    if args.minimal:
        target_m, mu = m, minimal_equivalent(m, lam)
    elif m.name == "pawn":
        target_m, mu = parse_moveset("downright"), phi_pawn(lam)
    elif m.name == "knight":
        target_m, mu = parse_moveset("downright"), phi_knight(lam)
    else:
        raise UsageError("reduce to Downright applies to pawn and knight; use --minimal for other movesets")
    if args.format == "dot":
        _emit(to_dot(build_dag(target_m, mu)))
    elif args.format == "json":
        _emit(json.dumps({"piece": m.literal(), "partition": list(lam), "to": target_m.literal(), "result": list(mu)}))
    else:
        _emit(mu.literal())
    return EXIT_OK


def cmd_equiv(args) -> int:
    _check_format(args, ("text", "json"))
    m1 = _moveset(args)
    m2 = _moveset(args, "other_") if (args.other_piece or args.other_moveset) else m1
    lam = _partition(args.partition)
    mu = _partition(args.other, "--other")
    f = game_equivalent(m1, lam, m2, mu)
    same = m1 == m2 and partition_equivalent(m1, lam, mu)
    bijection = None if f is None else sorted((list(a), list(b)) for a, b in f.items())
    if args.format == "json":
        _emit(json.dumps({
            "left": {"piece": m1.literal(), "partition": list(lam)},
            "right": {"piece": m2.literal(), "partition": list(mu)},
            "partition_equivalent": same,
            "game_equivalent": f is not None,
            "bijection": bijection,
        }))
    else:
        _emit(f"partition-equivalent: {'yes' if same else 'no'}")
        if f is None:
            _emit("game-equivalent: no")
        else:
            text = ", ".join(f"({a[0]},{a[1]})->({b[0]},{b[1]})" for a, b in bijection)
            _emit(f"game-equivalent: yes {{{text}}}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# classification


def cmd_classify(args) -> int:
    _check_format(args, ("text", "json", "csv"))
    m = _moveset(args)
    if args.family not in FAMILIES:
        raise InvalidInput(f"unknown family {args.family!r}; expected one of {', '.join(FAMILIES)}")
    extra = [_partition(t, "--extra") for t in args.extra or ()]
    rep = classify(m, args.family, args.max, extra)
    if args.format == "json":
        _emit(rep.to_json())
    elif args.format == "csv":
        _emit(reports_to_csv([rep]))
    else:
        _emit(f"{rep.piece} on {rep.family} (max {args.max}, {rep.positions} positions): {rep.region}")
        for name, v in rep.verdicts.items():
            line = f"  {name:<10} {'holds (bounded scan)' if v.holds else 'fails'}"
            if not v.holds:
                line += f" at {v.position} pair {v.pair}"
                if v.move is not None:
                    line += f" move {v.move} -> {v.target}"
            _emit(line)
    return EXIT_OK


def cmd_table1(args) -> int:
    _check_format(args, ("text", "json", "csv"))
    reports = table1(max_cells=args.max_cells)
    mismatches = 0
    rows = []
    for piece in TABLE1_PIECES:
        for col, rep, want in zip(TABLE1_COLUMNS, reports[piece], TABLE1_EXPECTED[piece]):
            ok = same_region(rep.region, want)
            mismatches += not ok
            rows.append((piece, col, rep.region, want, ok, rep))
    if args.format == "json":
        _emit(json.dumps([
            {"column": col, "expected": want, "match": ok, **rep.to_dict()}
            for _, col, _, want, ok, rep in rows
        ], ensure_ascii=False))
    elif args.format == "csv":
        _emit(_csv(
            [(p, col, got, want, "ok" if ok else "MISMATCH") for p, col, got, want, ok, _ in rows],
            ["piece", "column", "region", "expected", "status"],
        ))
    else:
        _emit(f"{'':<10}" + "".join(f"{c:<8}" for c in TABLE1_COLUMNS))
        for piece in TABLE1_PIECES:
            cells = [r for r in rows if r[0] == piece]
            _emit(f"{piece:<10}" + "".join(f"{(got if ok else got + '!'):<8}" for _, _, got, _, ok, _ in cells))
        _emit(f"{28 - mismatches}/28 cells match")
    return EXIT_OK if mismatches == 0 else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# parallel sweeps


def _init_worker(cache_path: Optional[str]) -> None:
    if cache_path and os.path.exists(cache_path):
        default_cache().load(cache_path)


def _run_parallel(fn, items, workers: int, cache_path: Optional[str]):
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(cache_path,)) as pool:
        return list(pool.map(fn, items, chunksize=1))


def conjecture_prediction(cid: int, r: int, c: int, k: int) -> int:
    if cid == 1:
        t = k % (r + 2)
        if t == 0:
            return 2
        return 0 if t % 2 else 1
    return 2 if k % 2 else 3


def _scan_one(item):
    cid, r, c, k = item
    value = conway_pair(KING, gen_staircase(r, c, k)).normal
    return (cid, r, c, k, value, conjecture_prediction(cid, r, c, k))


def conjecture_instances(cid: int, rs, cs, max_r: int, max_k: int) -> list[tuple]:
    if cid == 1:
        if cs:
            raise InvalidInput("conjecture 1 is about square blocks; --c does not apply")
        rs = rs or list(range(1, max_r + 1, 2))
        for r in rs:
            if r < 1 or r % 2 == 0:
                raise InvalidInput(f"conjecture 1 needs odd r, got r={r}")
        shapes = [(r, r) for r in rs]
    else:
        rs = rs or list(range(2, max_r + 1, 2))
        cs = cs or list(range(2, max_r + 1, 2))
        for v in list(rs) + list(cs):
            if v < 2 or v % 2:
                raise InvalidInput(f"conjecture 2 needs even r and c, got {v}")
        shapes = [(r, c) for r in rs for c in cs if r != c]
        if not shapes:
            raise InvalidInput("conjecture 2 needs r != c")
    if max_k < 1:
        raise InvalidInput("--max-k must be positive")
    return sorted((cid, r, c, k) for r, c in shapes for k in range(1, max_k + 1))


def scan_conjecture(cid: int, rs=(), cs=(), max_r: int = 5, max_k: int = 6, workers: int = 1, cache_path=None):
    items = conjecture_instances(cid, list(rs), list(cs), max_r, max_k)
    return sorted(_run_parallel(_scan_one, items, workers, cache_path))


SCAN_HEADER = ["conjecture", "r", "c", "k", "sg", "predicted", "agree"]


def cmd_scan(args) -> int:
    _check_format(args, ("csv", "json", "text"))
    max_r = args.max_r if args.max_r is not None else (5 if args.id == 1 else 6)
    rows = scan_conjecture(args.id, args.r or (), args.c or (), max_r, args.max_k, args.workers, args.cache_path)
    if args.format == "json":
        _emit(json.dumps([dict(zip(SCAN_HEADER, (*row, row[4] == row[5]))) for row in rows]))
    elif args.format == "text":
        bad = [row for row in rows if row[4] != row[5]]
        _emit(f"conjecture {args.id}: {len(rows) - len(bad)}/{len(rows)} instances agree")
        for row in bad:
            _emit(f"  gs({row[1]},{row[2]},{row[3]}): sg {row[4]}, predicted {row[5]}")
    else:
        _emit(_csv([(*row, "yes" if row[4] == row[5] else "no") for row in rows], SCAN_HEADER))
    return EXIT_OK


SWEEP_FAMILIES = ("rect", "stair", "hook", "gs")


def sweep_specs(family: str, bound: int) -> list[FamilySpec]:
    rng = range(1, bound + 1)
    if family == "rect":
        specs = [FamilySpec("rect", (r, c)) for r in rng for c in rng]
    elif family == "stair":
        specs = [FamilySpec("stair", (k,)) for k in rng]
    elif family == "hook":
        specs = [FamilySpec("hook", (r, c)) for r in rng for c in rng]
    elif family == "gs":
        specs = [FamilySpec("gs", (r, c, k)) for r in rng for c in rng for k in rng]
    else:
        raise InvalidInput(f"unknown sweep family {family!r}; expected one of {', '.join(SWEEP_FAMILIES)}")
    return sorted(specs, key=lambda s: s.params)


def closed_form(m: Moveset, spec: FamilySpec) -> Optional[int]:
    """Closed-form SG value of a family member when one is known, else ``None``."""
    p = spec.params
    if m == KING:
        if spec.kind == "rect":
            return cf.king_rect_sg(*p)
        if spec.kind == "stair":
            return cf.king_stair_sg(*p)
        if spec.kind == "gs" and p[0] == p[1] and p[0] % 2 == 0:
            return cf.king_gs_square_sg(p[0], p[2])
    if m == ROOK:
        if spec.kind == "rect":
            return cf.rook_rect_sg(*p)
        if spec.kind == "gs" and p[0] == p[1] and p[0] >= 2 and p[0] & (p[0] - 1) == 0:
            return cf.rook_gs_pow2_sg(p[0].bit_length() - 1, p[2], 0, 0)
    if m in (ROOK, QUEEN) and spec.kind == "stair":
        return cf.stair_bounded_sg(m, spec.build())
    return None


def _sweep_one(item):
    literal, spec = item
    m = parse_moveset(literal)
    pair = conway_pair(m, spec.build())
    return (spec.literal(), pair.normal, pair.misere, closed_form(m, spec))


SWEEP_HEADER = ["instance", "sg", "misere", "closed_form", "status"]


def cmd_sweep(args) -> int:
    _check_format(args, ("csv", "json", "text"))
    m = _moveset(args)
    specs = sweep_specs(args.family, args.max)
    rows = _run_parallel(_sweep_one, [(m.literal(), s) for s in specs], args.workers, args.cache_path)
    # canonical order: by family parameters, independent of completion order
    order = {s.literal(): s.params for s in specs}
    rows.sort(key=lambda row: order[row[0]])
    mismatches = 0
    out = []
    for lit, a, b, want in rows:
        if want is None:
            status = "-"
        elif want == a:
            status = "ok"
        else:
            status = "MISMATCH"
            mismatches += 1
        out.append((lit, a, b, "" if want is None else want, status))
    if args.format == "json":
        _emit(json.dumps([dict(zip(SWEEP_HEADER, row)) for row in out]))
    elif args.format == "text":
        for row in out:
            _emit(" ".join(str(v) for v in row))
    else:
        _emit(_csv(out, SWEEP_HEADER))
    return EXIT_MISMATCH if args.check and mismatches else EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="impchess", description="Impartial chess games on integer partitions.")
    parser.add_argument("--cache-file", help=f"load/save the value cache here (default: ${CACHE_ENV})")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def piece_opts(p, prefix=""):
        p.add_argument(f"--{prefix}piece", help="downright, pawn, knight, bishop, king, rook or queen")
        p.add_argument(f"--{prefix}moveset", help='custom moveset, e.g. "steps:(0,1),(1,0);rays:(1,1)"')

    def common(name, help_text):
        p = sub.add_parser(name, help=help_text)
        piece_opts(p)
        p.add_argument("--format", choices=("text", "json", "csv", "dot"), default="text")
        return p

    for name, text in (("sg", "Sprague-Grundy value"), ("pair", "Conway pair (normal, misere)"), ("outcome", "P or N")):
        p = common(name, text)
        p.add_argument("--partition", help='"5,4,4,2,1,1" or a family literal such as gs:3x2x2')
        p.add_argument("--at", help="evaluate the subposition i,j instead")
        if name == "outcome":
            p.add_argument("--convention", choices=("normal", "misere"), default="normal")
        p.set_defaults(func=cmd_value)

    p = common("grid", "values of every subposition laid over the diagram")
    p.add_argument("--partition")
    p.add_argument("--kind", choices=("sg", "misere", "pair", "outcome"), default="sg")
    p.set_defaults(func=cmd_grid)

    p = common("truncate", "board whose normal play mirrors misere play")
    p.add_argument("--partition")
    p.set_defaults(func=cmd_truncate)

    p = common("reduce", "equivalent Downright board (pawn, knight) or minimal equivalent board")
    p.add_argument("--partition")
    p.add_argument("--minimal", action="store_true", help="Young-minimum board with the same game DAG")
    p.set_defaults(func=cmd_reduce)

    p = common("equiv", "partition- and game-equivalence of two boards")
    p.add_argument("--partition")
    p.add_argument("--other", help="second board")
    piece_opts(p, "other-")
    p.set_defaults(func=cmd_equiv)

    p = common("classify", "Conway-Gurvich-Ho properties over a family")
    p.add_argument("--family", required=True, help=", ".join(FAMILIES))
    p.add_argument("--max", type=int, default=6, help="bound on every family parameter (cells for 'all')")
    p.add_argument("--extra", action="append", help="additional seed board (repeatable)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table1", help="classify all seven pieces and compare with the expected table")
    p.add_argument("--max-cells", type=int, default=14, help="cell bound for the all-partitions column")
    p.add_argument("--format", choices=("text", "json", "csv", "dot"), default="text")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("scan-conjecture", help="compare King values on gs boards with a conjectured formula")
    p.add_argument("--id", type=int, choices=(1, 2), required=True)
    p.add_argument("--r", type=int, action="append", help="block height (repeatable)")
    p.add_argument("--c", type=int, action="append", help="block width, conjecture 2 only (repeatable)")
    p.add_argument("--max-r", type=int, help="bound on r and c when not listed (default 5 or 6)")
    p.add_argument("--max-k", type=int, default=6)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("text", "json", "csv", "dot"), default="csv")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("sweep", help="values over a family, optionally checked against closed forms")
    piece_opts(p)
    p.add_argument("--family", required=True, help=", ".join(SWEEP_FAMILIES))
    p.add_argument("--max", "--max-cells", dest="max", type=int, default=6)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--check", action="store_true", help="exit 1 if any closed form disagrees")
    p.add_argument("--format", choices=("text", "json", "csv", "dot"), default="csv")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.cache_path = args.cache_file or os.environ.get(CACHE_ENV) or None
    try:
        if getattr(args, "workers", 1) < 1:
            raise InvalidInput(f"--workers must be positive, got {args.workers}")
        if args.cache_path and os.path.exists(args.cache_path):
            default_cache().load(args.cache_path)
        status = args.func(args)
        if args.cache_path:
            default_cache().dump(args.cache_path)
        return status
    except (InvalidInput, UsageError) as exc:
        sys.stderr.write(f"impchess {args.command}: error: {exc}\n")
        return EXIT_INVALID
    except ValueError as exc:
        sys.stderr.write(f"impchess {args.command}: error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
