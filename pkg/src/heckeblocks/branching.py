"""Runner-pair signatures and branching of simple/Specht labels.

A runner move transfers beads between adjacent runners i-1 and i
(cyclically); restriction moves beads from runner i to runner i-1
(position p to p-1), induction the other way.  Signatures are the
plus/minus words whose reduced forms locate normal and conormal beads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    BeadCountTooSmall,
    NotERegular,
    WrongBlock,
)
from .partitions import (
    BlockId,
    Partition,
    beta_set,
    block_of,
    from_beta_set,
    is_e_regular,
)


class Direction(enum.Enum):
    RESTRICT = "restrict"
    INDUCE = "induce"


@dataclass(frozen=True)
class RunnerMove:
    """Move of kappa beads between runners i-1 and i of the source block."""

    source_block: BlockId
    target_block: BlockId
    i: int
    kappa: int
    direction: Direction


def runner_move(source: BlockId, i: int, kappa: int, direction: Direction):
    """Build the RunnerMove for the given runner index, or None if no
    block of the right size exists on the target side."""
    e = source.e
    counts = list(source.core_beads)
    if direction == Direction.RESTRICT:
        counts[(i - 1) % e] += kappa
        counts[i % e] -= kappa
        n_target = source.n - kappa
    else:
        counts[(i - 1) % e] -= kappa
        counts[i % e] += kappa
        n_target = source.n + kappa
    if min(counts) < 0:
        return None
    probe = BlockId(e, tuple(counts), 0)
    core_size = sum(probe.core_partition())
    if n_target < core_size or (n_target - core_size) % e != 0:
        return None
    return RunnerMove(source, BlockId(e, tuple(counts), (n_target - core_size) // e),
                      i % e, kappa, direction)


def neighbor_blocks(block: BlockId, direction: Direction, kappa: int = 1):
    """All runner moves of the given kappa out of the block."""
    moves = []
    for i in range(block.e):
        mv = runner_move(block, i, kappa, direction)
        if mv is not None:
            moves.append(mv)
    return moves


@dataclass(frozen=True)
class Signature:
    """Plus/minus word of a runner pair, read in increasing position order.

    Each raw entry is (p, sign) where sign is '-' for a bead at p with p-1
    vacant (removable) and '+' for a bead at p-1 with p vacant (addable).
    reduced results from cancelling adjacent '-' '+' pairs.
    """

    i: int
    raw: tuple
    reduced: tuple

    @property
    def normal_positions(self) -> tuple:
        return tuple(p for p, s in self.reduced if s == "-")

    @property
    def conormal_positions(self) -> tuple:
        return tuple(p for p, s in self.reduced if s == "+")


def signature(lam: Partition, e: int, r: int, i: int) -> Signature:
    """Signature of lam for the runner pair (i-1, i) at bead count r."""
    if r < len(lam):
        raise BeadCountTooSmall(f"r={r} < number of parts {len(lam)}")
    beads = set(beta_set(lam, r))
    top = max(beads) + 1 if beads else 0
    raw = []
    p = i % e if (i % e) != 0 else e
    while p <= top:
        at_p = p in beads
        at_prev = (p - 1) in beads
        if at_p and not at_prev:
            raw.append((p, "-"))
        elif at_prev and not at_p:
            raw.append((p, "+"))
        p += e
    stack = []
    for entry in raw:
        if entry[1] == "+" and stack and stack[-1][1] == "-":
            stack.pop()
        else:
            stack.append(entry)
    return Signature(i % e, tuple(raw), tuple(stack))


@dataclass(frozen=True)
class BranchResult:
    """Socle/head label of a branched simple, with the reducibility flag."""

    label: Partition
    reducible: bool


def _check_simple_args(lam: Partition, move: RunnerMove):
    e = move.source_block.e
    if not is_e_regular(lam, e):
        raise NotERegular(f"{lam} is {e}-singular")
    if block_of(lam, e, move.source_block.r) != move.source_block:
        raise WrongBlock(f"{lam} not in block {move.source_block}")


def simple_restrict(lam: Partition, move: RunnerMove):
    """Restrict the simple labeled lam along the move.

    Returns None if the restriction is zero; otherwise a BranchResult whose
    label moves the kappa highest normal beads left, flagged reducible when
    the normal count strictly exceeds kappa.
    """
    _check_simple_args(lam, move)
    sig = signature(lam, move.source_block.e, move.source_block.r, move.i)
    normals = sig.normal_positions
    if len(normals) < move.kappa:
        return None
    chosen = sorted(normals)[: move.kappa]
    beads = set(beta_set(lam, move.source_block.r))
    for p in chosen:
        beads.remove(p)
        beads.add(p - 1)
    return BranchResult(from_beta_set(beads), len(normals) > move.kappa)


def simple_induce(lam: Partition, move: RunnerMove):
    """Induce the simple labeled lam along the move (mirror of restrict)."""
    _check_simple_args(lam, move)
    sig = signature(lam, move.source_block.e, move.source_block.r, move.i)
    conormals = sig.conormal_positions
    if len(conormals) < move.kappa:
        return None
    chosen = sorted(conormals, reverse=True)[: move.kappa]
    beads = set(beta_set(lam, move.source_block.r))
    for p in chosen:
        beads.remove(p - 1)
        beads.add(p)
    return BranchResult(from_beta_set(beads), len(conormals) > move.kappa)


def _movable(lam: Partition, move: RunnerMove):
    """(bead set, removable/addable positions) for the move's runner pair."""
    r = move.source_block.r
    beads = set(beta_set(lam, r))
    e = move.source_block.e
    top = max(beads) + 1 if beads else 0
    ps = []
    p = move.i if move.i != 0 else e
    while p <= top:
        if move.direction == Direction.RESTRICT:
            if p in beads and (p - 1) not in beads:
                ps.append(p)
        else:
            if (p - 1) in beads and p not in beads:
                ps.append(p)
        p += e
    return beads, ps


def specht_restrict_list(lam: Partition, move: RunnerMove):
    """All partitions obtained by moving exactly kappa beads one step left
    on the move's runner (Specht filtration labels), descending lex."""
    if block_of(lam, move.source_block.e, move.source_block.r) != move.source_block:
        raise WrongBlock(f"{lam} not in block {move.source_block}")
    beads, ps = _movable(lam, move)
    out = []
    for subset in _choose(ps, move.kappa):
        nb = set(beads)
        for p in subset:
            nb.remove(p)
            nb.add(p - 1)
        out.append(from_beta_set(nb))
    out.sort(reverse=True)
    return out


def specht_induce_list(lam: Partition, move: RunnerMove):
    """All partitions obtained by moving exactly kappa beads one step right
    on the move's runner pair, descending lex."""
    if block_of(lam, move.source_block.e, move.source_block.r) != move.source_block:
        raise WrongBlock(f"{lam} not in block {move.source_block}")
    beads, ps = _movable(lam, move)
    out = []
    for subset in _choose(ps, move.kappa):
        nb = set(beads)
        for p in subset:
            nb.remove(p - 1)
            nb.add(p)
        out.append(from_beta_set(nb))
    out.sort(reverse=True)
    return out


def _choose(items, k):
    from itertools import combinations

    return combinations(items, k)


def removable_bead_count(lam: Partition, e: int, r: int) -> int:
    """Number of beads whose left-neighbor position is vacant."""
    beads = set(beta_set(lam, r))
    return sum(1 for p in beads if p >= 1 and (p - 1) not in beads)


def restriction_profile(lam: Partition, block: BlockId):
    """For each kappa=1 restriction move, the normal-bead count of lam.

    Returns a list of (move, normal_count) pairs; the simple restricts
    nonzero exactly to the targets with count >= 1, reducibly where >= 2.
    """
    out = []
    for mv in neighbor_blocks(block, Direction.RESTRICT, 1):
        sig = signature(lam, block.e, block.r, mv.i)
        out.append((mv, len(sig.normal_positions)))
    return out
