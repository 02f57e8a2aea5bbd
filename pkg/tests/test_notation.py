import pytest

from heckeblocks.errors import (
    BlockMismatch,
    BracketSyntaxError,
    DuplicateRunner,
    RunnerOutOfRange,
    WeightMismatch,
)
from heckeblocks.notation import (
    decode,
    decode_text,
    encode,
    encode_text,
    parse,
    print_expr,
)
from heckeblocks.partitions import (
    enumerate_block,
    is_e_regular,
    principal_block_5e,
)


def test_parse_print_round_trip():
    for text in ("<1_{3,2}>", "<0,2_4>", "<1_{2^2},3>", "<3_5>", "<0,1,2>"):
        expr = parse(text)
        assert print_expr(expr) == text
        assert parse(print_expr(expr)) == expr


def test_bare_runner_means_single_box():
    expr = parse("<2>")
    assert expr.entries == ((2, (1,)),)


def test_syntax_errors_carry_offsets():
    with pytest.raises(BracketSyntaxError) as info:
        parse("<1_>")
    assert info.value.offset >= 0
    with pytest.raises(BracketSyntaxError):
        parse("1_2")
    with pytest.raises(DuplicateRunner):
        parse("<1,1_2>")


def test_decode_errors():
    blk = principal_block_5e(2)
    with pytest.raises(RunnerOutOfRange):
        decode(parse("<2_5>"), blk)
    with pytest.raises(WeightMismatch):
        decode(parse("<1_2>"), blk)
    with pytest.raises(BlockMismatch):
        # explicit bead counts disagreeing with the block
        decode_text("<1_5|4,6>", principal_block_5e(2))


def test_decode_encode_round_trip_on_blocks():
    for e in (2, 3, 4):
        blk = principal_block_5e(e)
        for lam in enumerate_block(blk):
            text = encode_text(lam, blk)
            assert decode_text(text, blk) == lam
            assert print_expr(encode(lam, blk)) == text


def test_known_labels():
    blk = principal_block_5e(4)
    assert encode_text(decode_text("<3_5>", blk), blk) == "<3_5>"
    lam = decode_text("<1_{2^2},3>", blk)
    assert is_e_regular(lam, 4)
