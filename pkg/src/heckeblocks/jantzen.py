"""Direct sum-formula bounds from paired hook moves, and the order they
generate on a block.

A hook move lifts a bead a by i rows (partition sigma), then drops another
bead from b - i*e to b with b > a (partition tau, same size and block).
The signed, valuation-weighted sum over such moves bounds decomposition
numbers; its p = 0 form must equal the derivative of the v-decomposition
number — the suite's central cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BeadCountTooSmall, DifferentBlock, NotERegular
from .partitions import (
    Partition,
    beta_set,
    block_of,
    default_bead_count,
    from_beta_set,
    is_e_regular,
    same_block,
    size,
)


@dataclass(frozen=True)
class HookMove:
    source: Partition
    mid: Partition
    target: Partition
    a: int
    b: int
    i: int
    l_lambda_sigma: int
    l_tau_sigma: int


def hook_moves(lam: Partition, e: int, r: int):
    """All paired hook moves out of lam at bead count r."""
    if r < len(lam):
        raise BeadCountTooSmall(f"r={r} < number of parts {len(lam)}")
    beads = sorted(beta_set(lam, r))
    bead_set = set(beads)
    out = []
    for a in beads:
        i = 1
        while a - i * e >= 0:
            lo = a - i * e
            if lo not in bead_set:
                sigma_set = set(bead_set)
                sigma_set.remove(a)
                sigma_set.add(lo)
                l_ls = sum(1 for x in beads if lo < x < a)
                sigma = from_beta_set(sigma_set)
                for q in sigma_set:
                    b = q + i * e
                    if b > a and b not in sigma_set:
                        tau_set = set(sigma_set)
                        tau_set.remove(q)
                        tau_set.add(b)
                        l_ts = sum(1 for x in sigma_set if q < x < b)
                        out.append(
                            HookMove(
                                lam,
                                sigma,
                                from_beta_set(tau_set),
                                a,
                                b,
                                i,
                                l_ls,
                                l_ts,
                            )
                        )
            i += 1
    return out


def _valuation(x: int, p: int) -> int:
    if p == 0:
        return 0
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def js_bound(lam: Partition, mu: Partition, e: int, p: int, decomp, r: int | None = None) -> int:
    """Signed hook-move sum; decomp(tau) supplies the multiplicity weights."""
    if not is_e_regular(mu, e):
        raise NotERegular(f"{mu} is {e}-singular")
    if r is None:
        r = default_bead_count(size(lam), e)
    total = 0
    for mv in hook_moves(lam, e, r):
        w = decomp(mv.target)
        if w == 0:
            continue
        sign = -1 if (mv.l_lambda_sigma + mv.l_tau_sigma + 1) % 2 else 1
        total += sign * (1 + _valuation(mv.i, p)) * w
    return total


class JantzenGraph:
    """Reachability in the hook-move relation within one block."""

    def __init__(self, e: int, n: int):
        self.e = e
        self.r = default_bead_count(n, e)
        self._succ: dict = {}
        self._reach: dict = {}

    def successors(self, lam: Partition):
        hit = self._succ.get(lam)
        if hit is None:
            hit = frozenset(mv.target for mv in hook_moves(lam, self.e, self.r))
            self._succ[lam] = hit
        return hit

    def reaches(self, lam: Partition, mu: Partition) -> bool:
        """lam <=_J mu: mu reachable from ... the order runs upward: a hook
        move sends lam to a target above it, so lam <=_J mu iff mu is
        reachable from lam."""
        if lam == mu:
            return True
        key = (lam, mu)
        hit = self._reach.get(key)
        if hit is not None:
            return hit
        self._reach[key] = False  # cycle guard; relation is acyclic
        ans = any(self.reaches(t, mu) for t in self.successors(lam))
        self._reach[key] = ans
        return ans

    def strictly_between(self, lam: Partition, mu: Partition):
        """All nu with lam <_J nu <_J mu, from the block's partitions."""
        from .partitions import block_of, enumerate_block

        block = block_of(lam, self.e, self.r)
        out = []
        for nu in enumerate_block(block):
            if nu in (lam, mu):
                continue
            if self.reaches(lam, nu) and self.reaches(nu, mu):
                out.append(nu)
        return out


@lru_cache(maxsize=64)
def _graph_for(e: int, n: int) -> JantzenGraph:
    return JantzenGraph(e, n)


def jantzen_leq(lam: Partition, mu: Partition, e: int) -> bool:
    """lam below-or-equal mu in the hook-move order."""
    if not same_block(lam, mu, e):
        raise DifferentBlock(f"{lam}, {mu} not in one block at e={e}")
    return _graph_for(e, size(lam)).reaches(lam, mu)
