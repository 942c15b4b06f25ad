"""Labeled game DAGs, partition/game equivalence, and the Downright reductions.

Nodes of ``DAG(M, lam)`` are the offsets ``(i, j)`` reachable from ``(0, 0)``
such that ``lam.sub(i, j)`` is nonempty; an edge ``(i, j) -> (i+y, j+x)``
carries the label ``(y, x)`` of the move that produced it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .moveset import Moveset, expanded_moves
from .partition import Partition, conjugate, enumerate_partitions

__all__ = [
    "GameDag",
    "build_dag",
    "longest_path",
    "edge_labels",
    "partition_equivalent",
    "game_equivalent",
    "minimal_equivalent",
    "minimal_equivalent_search",
    "phi_pawn",
    "phi_knight",
    "phi_knight_cells",
    "downright_has_pawn_preimage",
    "pawn_preimage",
    "to_dot",
]

Node = tuple[int, int]
Edge = tuple[Node, Node, tuple[int, int]]


@dataclass(frozen=True)
class GameDag:
    nodes: frozenset
    edges: frozenset
    moveset: Moveset

    def successors(self, node: Node) -> list[tuple[Node, tuple[int, int]]]:
        return sorted((v, lab) for u, v, lab in self.edges if u == node)

    def __eq__(self, other):
        # equality of labeled coordinate sets, not isomorphism
        if not isinstance(other, GameDag):
            return NotImplemented
        return self.nodes == other.nodes and self.edges == other.edges

    def __hash__(self):
        return hash((self.nodes, self.edges))


def build_dag(m: Moveset, lam: Partition) -> GameDag:
    if not lam:
        raise ValueError("build_dag needs a nonempty partition")
    moves = expanded_moves(m, len(lam), lam[0])
    nodes = {(0, 0)}
    edges = set()
    queue = deque([(0, 0)])
    while queue:
        i, j = queue.popleft()
        for y, x in moves:
            v = (i + y, j + x)
            if lam.defined(*v):
                edges.add(((i, j), v, (y, x)))
                if v not in nodes:
                    nodes.add(v)
                    queue.append(v)
    return GameDag(frozenset(nodes), frozenset(edges), m)


def longest_path(d: GameDag) -> int:
    # every label is non-negative and nonzero, so i+j orders nodes topologically
    best = {}
    out: dict[Node, list[Node]] = {}
    for u, v, _ in d.edges:
        out.setdefault(u, []).append(v)
    for node in sorted(d.nodes, key=lambda n: -(n[0] + n[1])):
        best[node] = max((best[v] + 1 for v in out.get(node, ())), default=0)
    return best[(0, 0)]


def edge_labels(d: GameDag) -> set[tuple[int, int]]:
    return {lab for _, _, lab in d.edges}


def partition_equivalent(m: Moveset, lam: Partition, mu: Partition) -> bool:
    return build_dag(m, lam) == build_dag(m, mu)


def _add(a: Node, b: Node) -> Node:
    return (a[0] + b[0], a[1] + b[1])


def game_equivalent(
    m1: Moveset, lam: Partition, m2: Moveset, mu: Partition
) -> Optional[dict]:
    """Find a label bijection under which the marking procedure maps one DAG onto the other.

    Returns the bijection as a dict ``{label_in_m1: label_in_m2}`` or ``None``.
    The bijection is built lazily while marking nodes in breadth-first edge
    order, backtracking when a relabeled node falls outside the target DAG.
    """
    d1, d2 = build_dag(m1, lam), build_dag(m2, mu)
    labels1, labels2 = sorted(edge_labels(d1)), sorted(edge_labels(d2))
    if len(labels1) != len(labels2) or len(d1.nodes) != len(d2.nodes) or len(d1.edges) != len(d2.edges):
        return None

    out: dict[Node, list] = {}
    for u, v, lab in d1.edges:
        out.setdefault(u, []).append((lab, v))
    for u in out:
        out[u].sort()
    # breadth-first edge order from the root, deterministic
    order: list[Edge] = []
    seen = {(0, 0)}
    queue = deque([(0, 0)])
    while queue:
        u = queue.popleft()
        for lab, v in out.get(u, ()):
            order.append((u, v, lab))
            if v not in seen:
                seen.add(v)
                queue.append(v)

    nodes2, edges2 = d2.nodes, d2.edges

    def search(k: int, f: dict, used: set, place: dict) -> Optional[dict]:
        if k == len(order):
            mapped = {(place[u], place[v], f[lab]) for u, v, lab in d1.edges}
            if len(set(place.values())) == len(nodes2) and mapped == edges2:
                return dict(f)
            return None
        u, v, lab = order[k]
        choices = [f[lab]] if lab in f else [c for c in labels2 if c not in used]
        for c in choices:
            target = _add(place[u], c)
            if target not in nodes2:
                continue
            if v in place and place[v] != target:
                continue
            fresh_label = lab not in f
            fresh_node = v not in place
            if fresh_label:
                f[lab] = c
                used.add(c)
            if fresh_node:
                place[v] = target
            res = search(k + 1, f, used, place)
            if res is not None:
                return res
            if fresh_label:
                del f[lab]
                used.discard(c)
            if fresh_node:
                del place[v]
        return None

    return search(0, {}, set(), {(0, 0): (0, 0)})


def minimal_equivalent(m: Moveset, lam: Partition) -> Partition:
    """The Young-minimum partition with the same DAG as ``lam``.

    Any partition with this DAG must contain every node cell, and the smallest
    diagram containing the node cells already realises the DAG, so that
    diagram is the minimum.
    """
    d = build_dag(m, lam)
    widths = [0] * len(lam)
    for i, j in d.nodes:
        widths[i] = max(widths[i], j + 1)
    for i in range(len(widths) - 2, -1, -1):
        widths[i] = max(widths[i], widths[i + 1])
    return Partition._trusted(tuple(w for w in widths if w))


def minimal_equivalent_search(m: Moveset, lam: Partition) -> Partition:
    """Exhaustive counterpart of :func:`minimal_equivalent` over the Young ideal of ``lam``."""
    target = build_dag(m, lam)
    for mu in enumerate_partitions(inside=lam):
        if build_dag(m, mu) == target:
            return mu
    return lam


def phi_pawn(lam: Partition) -> Partition:
    """Downright board equivalent to Pawn on ``lam``: part ``i`` loses ``i`` cells."""
    return Partition._trusted(tuple(p - i for i, p in enumerate(lam) if p - i > 0))


def phi_knight(lam: Partition) -> Partition:
    """Downright board equivalent to Knight on ``lam``.

    Row ``j`` (1-based) has length ``max{t : 2t + j - 2 <= lam_(t+2j-2)}``.
    """
    r = len(lam)
    out = []
    j = 1
    while True:
        best = 0
        for t in range(1, r + 1):
            if 2 * t + j - 2 <= lam.part(t + 2 * j - 2):
                best = t
        if best == 0:
            break
        out.append(best)
        j += 1
    return Partition(out)


def phi_knight_cells(lam: Partition) -> Partition:
    """Cell-by-cell form of :func:`phi_knight`: ``(i, j)`` kept iff ``lam[2i+j, 2j+i]`` is defined."""
    rows = []
    i = 0
    while lam.defined(2 * i, i):
        j = 0
        while lam.defined(2 * i + j, 2 * j + i):
            j += 1
        rows.append(j)
        i += 1
    return Partition(rows)


def downright_has_pawn_preimage(lam: Partition) -> bool:
    """Whether some Pawn board is game-equivalent to Downright on ``lam``.

    Pawn moves (0,1) and (1,1) can play the roles of Downright's (0,1) and
    (1,0) in either order, so ``lam`` needs distinct parts, or its conjugate
    does.
    """
    def distinct(p):
        return all(a > b for a, b in zip(p, p[1:]))

    return distinct(lam) or distinct(conjugate(lam))


def pawn_preimage(lam: Partition) -> Optional[Partition]:
    """A Pawn board whose game is equivalent to Downright on ``lam``, if one exists."""
    def lift(p):
        return Partition(q + i for i, q in enumerate(p))

    if all(a > b for a, b in zip(lam, lam[1:])):
        return lift(lam)
    lc = conjugate(lam)
    if all(a > b for a, b in zip(lc, lc[1:])):
        return lift(lc)
    return None


def to_dot(d: GameDag, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    for i, j in sorted(d.nodes):
        lines.append(f'  "{i},{j}";')
    for (a, b), (c, e), (y, x) in sorted(d.edges):
        lines.append(f'  "{a},{b}" -> "{c},{e}" [label="{y},{x}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

