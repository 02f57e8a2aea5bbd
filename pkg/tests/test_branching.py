from math import comb

import pytest

from heckeblocks.branching import (
    Direction,
    neighbor_blocks,
    restriction_profile,
    runner_move,
    signature,
    simple_induce,
    simple_restrict,
    specht_induce_list,
    specht_restrict_list,
)
from heckeblocks.errors import NotERegular
from heckeblocks.partitions import (
    block_of,
    default_bead_count,
    enumerate_block,
    is_e_regular,
    principal_block_5e,
    size,
)


def test_runner_move_blocks():
    blk = principal_block_5e(2)
    mv = runner_move(blk, 1, 1, Direction.RESTRICT)
    assert mv is not None
    assert mv.target_block.n == blk.n - 1
    assert sum(mv.target_block.core_beads) == sum(blk.core_beads)
    assert len(neighbor_blocks(blk, Direction.RESTRICT)) >= 1


def test_signature_reduction_cancels():
    blk = principal_block_5e(2)
    for lam in enumerate_block(blk):
        for i in range(2):
            sig = signature(lam, 2, blk.r, i)
            word = [s for _, s in sig.reduced]
            # reduced word has all '+' before any '-' never adjacent '-+'
            assert "".join(word).find("-+") == -1
            assert len(sig.normal_positions) == word.count("-")
            assert len(sig.conormal_positions) == word.count("+")


def test_simple_restrict_induce_round_trip():
    for e in (2, 3):
        blk = principal_block_5e(e)
        for lam in enumerate_block(blk):
            if not is_e_regular(lam, e):
                continue
            for i in range(e):
                mv = runner_move(blk, i, 1, Direction.RESTRICT)
                if mv is None:
                    continue
                res = simple_restrict(lam, mv)
                if res is None:
                    continue
                back = runner_move(mv.target_block, i, 1, Direction.INDUCE)
                assert back is not None
                res2 = simple_induce(res.label, back)
                assert res2 is not None and res2.label == lam


def test_specht_lists_are_binomial_sized():
    blk = principal_block_5e(2)
    for lam in enumerate_block(blk):
        for i in range(2):
            for kappa in (1, 2):
                mv = runner_move(blk, i, kappa, Direction.RESTRICT)
                if mv is None:
                    continue
                got = specht_restrict_list(lam, mv)
                sig = signature(lam, 2, blk.r, i)
                movable = sum(1 for _, s in sig.raw if s == "-")
                assert len(got) == comb(movable, kappa)
                for nu in got:
                    assert size(nu) == size(lam) - kappa
                    assert block_of(nu, 2, blk.r) == mv.target_block


def test_specht_induce_sizes():
    blk = principal_block_5e(2)
    lam = enumerate_block(blk)[0]
    for i in range(2):
        mv = runner_move(blk, i, 1, Direction.INDUCE)
        if mv is None:
            continue
        for nu in specht_induce_list(lam, mv):
            assert size(nu) == size(lam) + 1


def test_simple_restrict_rejects_singular():
    blk = principal_block_5e(2)
    singular = next(
        lam for lam in enumerate_block(blk) if not is_e_regular(lam, 2)
    )
    mv = runner_move(blk, 1, 1, Direction.RESTRICT)
    with pytest.raises(NotERegular):
        simple_restrict(singular, mv)


def test_restriction_profile_counts():
    blk = principal_block_5e(2)
    for lam in enumerate_block(blk):
        if not is_e_regular(lam, 2):
            continue
        prof = restriction_profile(lam, blk)
        for mv, cnt in prof:
            sig = signature(lam, 2, blk.r, mv.i)
            assert cnt == len(sig.normal_positions)


def test_total_restriction_is_nonzero():
    # every simple label restricts nonzero somewhere one level down
    for e in (2, 3):
        blk = principal_block_5e(e)
        for lam in enumerate_block(blk):
            if not is_e_regular(lam, e):
                continue
            prof = restriction_profile(lam, blk)
            assert any(cnt >= 1 for _, cnt in prof)
