import itertools

import pytest

from heckeblocks.errors import SizeMismatch
from heckeblocks.partitions import (
    BlockId,
    Cmp,
    beta_set,
    block_of,
    conjugate,
    default_bead_count,
    dominance_cmp,
    dominates,
    e_core_and_weight,
    enumerate_block,
    format_partition,
    from_beta_set,
    is_e_regular,
    parse_partition,
    partitions_of,
    principal_block_5e,
    product_lt,
    remove_first_row,
    same_block,
    size,
    to_abacus,
    validate_partition,
)


def test_parse_format_round_trip():
    for text in ("-", "1", "5,3,1", "2^2,1", "3,3,3,2,1,1"):
        lam = parse_partition(text)
        assert parse_partition(format_partition(lam)) == lam
    assert parse_partition("-") == ()
    assert format_partition((2, 2, 1)) == "2^2,1"


def test_validate_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        validate_partition((2, 3))
    with pytest.raises(ValueError):
        validate_partition((1, 0))
    with pytest.raises(ValueError):
        validate_partition((-1,))


def test_conjugate_is_involution():
    for n in range(9):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam
            assert size(conjugate(lam)) == n
    assert conjugate((3, 1)) == (2, 1, 1)


def test_remove_first_row():
    assert remove_first_row((4, 2, 1)) == (2, 1)
    assert remove_first_row((3,)) == ()


def test_is_e_regular():
    assert is_e_regular((2, 2, 1), 3)
    assert not is_e_regular((2, 2, 1), 2)
    assert is_e_regular((), 2)
    # no part may repeat e or more times
    for lam in partitions_of(7):
        expected = all(
            len(list(g)) < 3 for _, g in itertools.groupby(lam)
        )
        assert is_e_regular(lam, 3) == expected


def test_dominance_needs_equal_size():
    with pytest.raises(SizeMismatch):
        dominance_cmp((3, 1, 1), (2, 2, 2))


def test_dominance_basic():
    assert dominance_cmp((3, 1, 1, 1), (2, 2, 2)) is Cmp.INCOMPARABLE
    assert dominates((4, 2), (3, 3))
    assert not dominates((3, 3), (4, 2))
    assert dominance_cmp((2, 2), (2, 2)) is Cmp.EQUAL
    # dominance refines, and is refined by, nothing it should not be
    for lam in partitions_of(6):
        for mu in partitions_of(6):
            expected = all(
                sum(lam[: k + 1]) >= sum(mu[: k + 1])
                for k in range(max(len(lam), len(mu)))
            )
            assert dominates(lam, mu) == expected


def test_beta_set_round_trip():
    for n in range(10):
        for lam in partitions_of(n):
            for r in (len(lam), len(lam) + 3, default_bead_count(n, 3)):
                if r < len(lam):
                    continue
                assert from_beta_set(beta_set(lam, r)) == lam


def test_abacus_runner_counts():
    disp = to_abacus((3, 2), 2, 4)
    assert sum(disp.runner_counts()) == 4
    assert disp.e == 2


def test_default_bead_count():
    assert default_bead_count(5, 2) == 6
    assert default_bead_count(10, 5) == 10
    assert default_bead_count(0, 3) == 3
    for n in range(0, 20):
        for e in range(2, 6):
            r = default_bead_count(n, e)
            assert r % e == 0 and r >= max(n, 1)


def test_core_and_weight():
    core, weight = e_core_and_weight((3, 2), 2)
    assert core == (1,) and weight == 2
    core, weight = e_core_and_weight((5, 3, 1), 3)
    assert core == (5, 3, 1) and weight == 0
    for n in range(9):
        for lam in partitions_of(n):
            for e in (2, 3, 4):
                core, w = e_core_and_weight(lam, e)
                assert size(core) + e * w == n
                assert e_core_and_weight(core, e) == (core, 0)


def test_block_identities():
    blk = principal_block_5e(2)
    assert blk.core_beads == (5, 5) and blk.weight == 5
    assert blk.n == 10 and blk.r == 10
    assert blk.notation() == "<5,5>"
    assert blk.core_partition() == ()


def test_enumerate_block_matches_brute_force():
    for e in (2, 3):
        for n in range(4, 9):
            blocks = {}
            for lam in partitions_of(n):
                blocks.setdefault(block_of(lam, e), []).append(lam)
            for blk, members in blocks.items():
                got = enumerate_block(blk)
                assert got == sorted(members, reverse=True)


def test_enumerate_block_weight2_e2():
    # every partition of 4 lies in the single weight-2 block at e = 2
    blk = block_of((4,), 2)
    assert enumerate_block(blk) == list(partitions_of(4))


def test_same_block_and_product_order():
    assert same_block((3, 2), (2, 2, 1), 2)
    assert not same_block((4, 1), (3, 2), 2)
    # the product order is a coarsening used only within a block;
    # lam <_P mu must never hold against dominance
    blk = principal_block_5e(2)
    members = enumerate_block(blk)
    for lam in members:
        for mu in members:
            if product_lt(lam, mu, 2):
                assert lam != mu
                assert not dominates(lam, mu) or lam == mu
