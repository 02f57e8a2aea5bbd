"""Partitions, abacus displays, cores, blocks, and the orders used on them.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the empty partition.  All functions are pure and all types
immutable, so everything here is safe to share between threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import (
    BeadCountTooSmall,
    DifferentBlock,
    EmptyPartition,
    SizeMismatch,
)

Partition = tuple  # tuple[int, ...], weakly decreasing, positive entries


def validate_partition(parts) -> Partition:
    """Return ``parts`` as a tuple after checking it is a partition."""
    t = tuple(parts)
    for i, p in enumerate(t):
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"part {p!r} is not a positive integer")
        if i + 1 < len(t) and t[i + 1] > p:
            raise ValueError(f"parts {t} are not weakly decreasing")
    return t


def size(lam: Partition) -> int:
    return sum(lam)


def num_parts(lam: Partition) -> int:
    return len(lam)


def parse_partition(text: str) -> Partition:
    """Parse the comma/exponent text form: "5,3,1", "2^2,1"; "-" is empty."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    parts = []
    for tok in text.split(","):
        tok = tok.strip()
        if "^" in tok:
            base, _, exp = tok.partition("^")
            parts.extend([int(base)] * int(exp))
        else:
            parts.append(int(tok))
    return validate_partition(parts)


def format_partition(lam: Partition) -> str:
    """Inverse of parse_partition, grouping repeats with '^'."""
    if not lam:
        return "-"
    out = []
    i = 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        mult = j - i
        out.append(f"{lam[i]}^{mult}" if mult > 1 else str(lam[i]))
        i = j
    return ",".join(out)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    cols = [0] * lam[0]
    for p in lam:
        for c in range(p):
            cols[c] += 1
    return tuple(cols)


def remove_first_row(lam: Partition) -> Partition:
    if not lam:
        raise EmptyPartition("cannot remove the first row of the empty partition")
    return lam[1:]


def is_e_regular(lam: Partition, e: int) -> bool:
    """True iff no part value occurs e or more times."""
    run = 0
    prev = None
    for p in lam:
        run = run + 1 if p == prev else 1
        if run >= e:
            return False
        prev = p
    return True


class Cmp(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


def dominance_cmp(lam: Partition, mu: Partition) -> Cmp:
    """Compare two partitions of equal size in the dominance order."""
    if size(lam) != size(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    if lam == mu:
        return Cmp.EQUAL
    leq = geq = True
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a < b:
            geq = False
        elif a > b:
            leq = False
    if geq and not leq:
        return Cmp.GREATER
    if leq and not geq:
        return Cmp.LESS
    return Cmp.INCOMPARABLE


def dominates(mu: Partition, lam: Partition) -> bool:
    """mu dominance-greater-or-equal lam (same size assumed)."""
    return dominance_cmp(lam, mu) in (Cmp.LESS, Cmp.EQUAL)


# ---------------------------------------------------------------------------
# Abacus displays


@dataclass(frozen=True)
class AbacusDisplay:
    """Bead positions on e runners; position p sits on runner p % e, row p // e."""

    e: int
    r: int
    beads: frozenset

    def runner_rows(self, i: int) -> list:
        """Rows of the beads on runner i, sorted increasing."""
        return sorted(p // self.e for p in self.beads if p % self.e == i)

    def runner_counts(self) -> tuple:
        counts = [0] * self.e
        for p in self.beads:
            counts[p % self.e] += 1
        return tuple(counts)


def to_abacus(lam: Partition, e: int, r: int) -> AbacusDisplay:
    """Display lam with r beads: beads at lam_i + r - i for i = 1..r."""
    if r < len(lam):
        raise BeadCountTooSmall(f"r={r} < number of parts {len(lam)}")
    beads = beta_set(lam, r)
    return AbacusDisplay(e, r, frozenset(beads))


def beta_set(lam: Partition, r: int) -> list:
    """Beta numbers lam_i + r - i (with lam_i = 0 beyond the last part)."""
    if r < len(lam):
        raise BeadCountTooSmall(f"r={r} < number of parts {len(lam)}")
    return [(lam[i - 1] if i <= len(lam) else 0) + r - i for i in range(1, r + 1)]


def from_beta_set(beads) -> Partition:
    """Partition read off a set of distinct bead positions."""
    ps = sorted(beads, reverse=True)
    r = len(ps)
    parts = []
    for i, p in enumerate(ps, start=1):
        part = p - (r - i)
        if part < 0:
            raise ValueError(f"bead positions {ps} are not a valid beta-set")
        if part > 0:
            parts.append(part)
    return validate_partition(parts)


def from_abacus(display: AbacusDisplay) -> Partition:
    return from_beta_set(display.beads)


def default_bead_count(n: int, e: int) -> int:
    """Smallest positive multiple of e that is >= max(n, 1)."""
    return e * max(1, -(-n // e))


def _runner_weight(rows) -> int:
    """Rows moved when pushing the runner's beads (rows sorted increasing)."""
    return sum(row - j for j, row in enumerate(rows))


def e_core_and_weight(lam: Partition, e: int, r: int | None = None):
    """e-core and e-weight of lam, via pushing beads up their runners."""
    if e < 2:
        raise ValueError("e must be at least 2")
    if r is None:
        r = default_bead_count(size(lam), e)
    disp = to_abacus(lam, e, r)
    weight = 0
    core_beads = []
    for i in range(e):
        rows = disp.runner_rows(i)
        weight += _runner_weight(rows)
        core_beads.extend(j * e + i for j in range(len(rows)))
    return from_beta_set(core_beads), weight


# ---------------------------------------------------------------------------
# Blocks


@dataclass(frozen=True, order=True)
class BlockId:
    """Nakayama block label: runner count, per-runner core bead counts, weight."""

    e: int
    core_beads: tuple
    weight: int

    @property
    def r(self) -> int:
        return sum(self.core_beads)

    def core_partition(self) -> Partition:
        beads = []
        for i, b in enumerate(self.core_beads):
            beads.extend(j * self.e + i for j in range(b))
        return from_beta_set(beads)

    @property
    def n(self) -> int:
        return size(self.core_partition()) + self.weight * self.e

    def notation(self) -> str:
        return "<" + ",".join(str(b) for b in self.core_beads) + ">"


def block_of(lam: Partition, e: int, r: int | None = None) -> BlockId:
    """Block of lam, with core bead counts read at bead count r."""
    if r is None:
        r = default_bead_count(size(lam), e)
    disp = to_abacus(lam, e, r)
    _, weight = e_core_and_weight(lam, e, r)
    return BlockId(e, disp.runner_counts(), weight)


def principal_block_5e(e: int) -> BlockId:
    """The weight-5 principal block of H_{5e}, at 5 beads per runner."""
    return BlockId(e, (5,) * e, 5)


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple:
    """All partitions of n with parts bounded by max_part, descending lex."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def _weight_splits(w: int, e: int):
    """All e-tuples of non-negative integers summing to w."""
    if e == 1:
        yield (w,)
        return
    for first in range(w + 1):
        for rest in _weight_splits(w - first, e - 1):
            yield (first,) + rest


def enumerate_block(block: BlockId) -> list:
    """All partitions with the block's core and weight, descending lex.

    Built from e-quotients: runner i carries a sub-partition with at most
    core_beads[i] parts, and the sub-partition sizes sum to the weight.
    """
    e = block.e
    out = []
    for split in _weight_splits(block.weight, e):
        choices = []
        for i in range(e):
            qs = [q for q in partitions_of(split[i]) if len(q) <= block.core_beads[i]]
            choices.append(qs)
        for quot in product(*choices):
            beads = []
            for i in range(e):
                b = block.core_beads[i]
                q = quot[i]
                for j in range(1, b + 1):
                    part = q[j - 1] if j <= len(q) else 0
                    beads.append((part + b - j) * e + i)
            out.append(from_beta_set(beads))
    out.sort(reverse=True)
    return out


# ---------------------------------------------------------------------------
# Induced e-sequences and the product order


def induced_e_sequence(lam: Partition, e: int, n_beads: int) -> tuple:
    """Positions swept by each positive-weight bead, merged weakly decreasing."""
    if n_beads < len(lam):
        raise BeadCountTooSmall(f"N={n_beads} < number of parts {len(lam)}")
    disp = to_abacus(lam, e, n_beads)
    seq = []
    for i in range(e):
        rows = disp.runner_rows(i)
        for j, row in enumerate(rows):
            w = row - j
            pos = row * e + i
            seq.extend(pos - k * e for k in range(w))
    return tuple(sorted(seq, reverse=True))


class ProductCmp(enum.Enum):
    LEQ = "Leq"
    GEQ = "Geq"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"
    DIFFERENT_BLOCK = "DifferentBlock"


def product_order_cmp(lam: Partition, mu: Partition, e: int) -> ProductCmp:
    """Compare induced e-sequences componentwise at a common bead count."""
    if size(lam) != size(mu):
        return ProductCmp.DIFFERENT_BLOCK
    n = default_bead_count(size(lam), e)
    if block_of(lam, e, n) != block_of(mu, e, n):
        return ProductCmp.DIFFERENT_BLOCK
    s_lam = induced_e_sequence(lam, e, n)
    s_mu = induced_e_sequence(mu, e, n)
    if s_lam == s_mu:
        return ProductCmp.EQUAL
    leq = all(a <= b for a, b in zip(s_lam, s_mu))
    geq = all(a >= b for a, b in zip(s_lam, s_mu))
    if leq:
        return ProductCmp.LEQ
    if geq:
        return ProductCmp.GEQ
    return ProductCmp.INCOMPARABLE


def product_lt(lam: Partition, mu: Partition, e: int) -> bool:
    """lam strictly below mu in the product order."""
    return lam != mu and product_order_cmp(lam, mu, e) == ProductCmp.LEQ


def same_block(lam: Partition, mu: Partition, e: int) -> bool:
    if size(lam) != size(mu):
        return False
    n = default_bead_count(size(lam), e)
    return block_of(lam, e, n) == block_of(mu, e, n)


def require_same_block(lam: Partition, mu: Partition, e: int):
    if not same_block(lam, mu, e):
        raise DifferentBlock(f"{lam} and {mu} lie in different blocks at e={e}")
