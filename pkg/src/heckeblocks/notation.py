"""Angle-bracket block notation: parsing, printing, encoding, decoding.

Text grammar (ASCII, whitespace insignificant):

    expr     := '<' [entry (',' entry)*] ['|' int (',' int)*] '>'
    entry    := int ['_' subscript]
    subscript:= int | '{' partlist '}'
    partlist := part (',' part)*
    part     := int ['^' int]

An entry "i" with no subscript means the runner carries the partition (1);
a runner with no entry carries the empty partition.  Braces are required
whenever the subscript has more than one part or uses an exponent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BlockMismatch,
    BracketSyntaxError,
    DuplicateRunner,
    NonPartitionSubscript,
    RunnerOutOfRange,
    WeightMismatch,
)
from .partitions import (
    BlockId,
    Partition,
    block_of,
    from_beta_set,
)


@dataclass(frozen=True)
class BracketExpr:
    """Entries are (runner, runner partition) pairs with distinct runners."""

    entries: tuple
    bead_counts: tuple | None = None

    def runner_partition(self, i: int) -> Partition:
        for runner, lam in self.entries:
            if runner == i:
                return lam
        return ()


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.peek() != ch:
            raise BracketSyntaxError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def accept(self, ch: str) -> bool:
        self.skip_ws()
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise BracketSyntaxError("expected an integer", start)
        return int(self.text[start : self.pos])

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def _parse_partlist(sc: _Scanner) -> Partition:
    parts = []
    start = sc.pos
    while True:
        base = sc.integer()
        mult = sc.integer() if sc.accept("^") else 1
        parts.extend([base] * mult)
        if not sc.accept(","):
            break
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise NonPartitionSubscript(
                f"subscript {tuple(parts)} is not weakly decreasing (at offset {start})"
            )
    if any(p < 1 for p in parts):
        raise NonPartitionSubscript(f"subscript {tuple(parts)} has non-positive parts")
    return tuple(parts)


def parse(text: str) -> BracketExpr:
    """Parse the ASCII bracket form into a BracketExpr."""
    sc = _Scanner(text)
    sc.expect("<")
    entries = []
    bead_counts = None
    if sc.peek() not in (">", "|"):
        while True:
            runner = sc.integer()
            if sc.accept("_"):
                if sc.accept("{"):
                    lam = _parse_partlist(sc)
                    sc.expect("}")
                else:
                    lam = (sc.integer(),)
            else:
                lam = (1,)
            entries.append((runner, lam))
            if not sc.accept(","):
                break
    if sc.accept("|"):
        counts = [sc.integer()]
        while sc.accept(","):
            counts.append(sc.integer())
        bead_counts = tuple(counts)
    sc.expect(">")
    if not sc.at_end():
        raise BracketSyntaxError("trailing input", sc.pos)
    runners = [r for r, _ in entries]
    if len(set(runners)) != len(runners):
        dup = next(r for r in runners if runners.count(r) > 1)
        raise DuplicateRunner(f"runner {dup} occurs twice")
    if bead_counts is not None:
        for r in runners:
            if r >= len(bead_counts):
                raise RunnerOutOfRange(
                    f"runner {r} >= number of runners {len(bead_counts)}"
                )
    return BracketExpr(tuple(entries), bead_counts)


def print_expr(expr: BracketExpr) -> str:
    """Canonical text of a BracketExpr (inverse of parse on canonical text)."""
    chunks = []
    for runner, lam in expr.entries:
        chunks.append(f"{runner}{_format_subscript(lam)}")
    body = ",".join(chunks)
    if expr.bead_counts is not None:
        body += "|" + ",".join(str(b) for b in expr.bead_counts)
    return f"<{body}>"


def _format_subscript(lam: Partition) -> str:
    if lam == (1,):
        return ""
    if len(lam) == 1:
        return f"_{lam[0]}"
    groups = []
    i = 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        mult = j - i
        groups.append(f"{lam[i]}^{mult}" if mult > 1 else str(lam[i]))
        i = j
    return "_{" + ",".join(groups) + "}"


def decode(expr: BracketExpr, block: BlockId) -> Partition:
    """Partition whose display has runner i holding the single-runner abacus
    of the expression's runner partition, with block.core_beads[i] beads."""
    e = block.e
    for runner, _ in expr.entries:
        if runner >= e:
            raise RunnerOutOfRange(f"runner {runner} >= e={e}")
    if expr.bead_counts is not None and expr.bead_counts != block.core_beads:
        raise BlockMismatch(
            f"bead counts {expr.bead_counts} != block's {block.core_beads}"
        )
    beads = []
    for i in range(e):
        b = block.core_beads[i]
        lam_i = expr.runner_partition(i)
        if len(lam_i) > b:
            raise BlockMismatch(f"runner {i} partition {lam_i} needs > {b} beads")
        for j in range(1, b + 1):
            part = lam_i[j - 1] if j <= len(lam_i) else 0
            beads.append((part + b - j) * e + i)
    lam = from_beta_set(beads)
    if block_of(lam, e, block.r) != block:
        raise WeightMismatch(f"decoded {lam} does not lie in block {block}")
    return lam


def encode(lam: Partition, block: BlockId) -> BracketExpr:
    """Minimal bracket form of lam in the given block."""
    if block_of(lam, block.e, block.r) != block:
        raise BlockMismatch(f"{lam} does not lie in block {block}")
    from .partitions import to_abacus

    disp = to_abacus(lam, block.e, block.r)
    entries = []
    for i in range(block.e):
        rows = sorted(disp.runner_rows(i), reverse=True)
        b = len(rows)
        parts = []
        for j, row in enumerate(rows, start=1):
            part = row - (b - j)
            if part > 0:
                parts.append(part)
        if parts:
            entries.append((i, tuple(parts)))
    return BracketExpr(tuple(entries), None)


def decode_text(text: str, block: BlockId) -> Partition:
    return decode(parse(text), block)


def encode_text(lam: Partition, block: BlockId) -> str:
    return print_expr(encode(lam, block))
