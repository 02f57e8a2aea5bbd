"""Fock-space combinatorics: f_i action, divided powers, the canonical
basis via ladder approximation plus bar-symmetric correction, and the
v-decomposition numbers read off its coefficients.
"""

from __future__ import annotations

import sys
import threading
from functools import lru_cache

from .errors import (
    CorrectionDiverged,
    NotERegular,
)
from .laurent import LaurentPoly, quantum_factorial
from .partitions import (
    Partition,
    beta_set,
    default_bead_count,
    dominates,
    from_beta_set,
    is_e_regular,
    parse_partition,
    format_partition,
    size,
)


class FockVector:
    """Finitely supported map Partition -> LaurentPoly (one degree)."""

    __slots__ = ("support",)

    def __init__(self, support=None):
        if support is None:
            support = {}
        self.support = {lam: c for lam, c in support.items() if not c.is_zero()}

    @staticmethod
    def vacuum() -> "FockVector":
        return FockVector({(): LaurentPoly.one()})

    @staticmethod
    def basis(lam: Partition) -> "FockVector":
        return FockVector({lam: LaurentPoly.one()})

    def coeff(self, lam: Partition) -> LaurentPoly:
        return self.support.get(lam, LaurentPoly.zero())

    def is_zero(self) -> bool:
        return not self.support

    def __eq__(self, other) -> bool:
        return isinstance(other, FockVector) and self.support == other.support

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.support)
        for lam, c in other.support.items():
            s = out.get(lam)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(lam, None)
            else:
                out[lam] = s
        res = FockVector.__new__(FockVector)
        res.support = out
        return res

    def __sub__(self, other: "FockVector") -> "FockVector":
        out = dict(self.support)
        for lam, c in other.support.items():
            s = out.get(lam)
            s = -c if s is None else s - c
            if s.is_zero():
                out.pop(lam, None)
            else:
                out[lam] = s
        res = FockVector.__new__(FockVector)
        res.support = out
        return res

    def scaled(self, poly: LaurentPoly) -> "FockVector":
        if poly.is_zero():
            return FockVector()
        res = FockVector.__new__(FockVector)
        res.support = {lam: c * poly for lam, c in self.support.items()}
        return res

    def items(self):
        return self.support.items()

    def __repr__(self):
        parts = [f"({c.format()})*s{lam}" for lam, c in sorted(self.support.items())]
        return "FockVector(" + " + ".join(parts) + ")" if parts else "FockVector(0)"


@lru_cache(maxsize=1 << 20)
def _f_moves(lam: Partition, k: int, e: int, r: int):
    """Single f moves on the basis vector of lam: bead q on runner k-1
    (cyclically) with q+1 vacant moves to q+1 on runner k.  Returns a tuple
    of (target partition, exponent N)."""
    beads = sorted(beta_set(lam, r))
    bead_set = set(beads)
    out = []
    for q in beads:
        if (q + 1) % e == k % e and (q + 1) not in bead_set:
            n_src = sum(1 for b in beads if b > q and b % e == q % e)
            n_dst = sum(1 for b in beads if b > q + 1 and b % e == k % e)
            nb = set(bead_set)
            nb.remove(q)
            nb.add(q + 1)
            out.append((from_beta_set(nb), n_src - n_dst))
    return tuple(out)


def f_apply(x: FockVector, i: int, e: int, r: int) -> FockVector:
    """Apply f_i (residue i, runner k = i + r mod e) linearly."""
    k = (i + r) % e
    out: dict = {}
    for lam, c in x.support.items():
        for mu, n in _f_moves(lam, k, e, r):
            add = c.shift(n)
            s = out.get(mu)
            s = add if s is None else s + add
            if s.is_zero():
                out.pop(mu, None)
            else:
                out[mu] = s
    res = FockVector.__new__(FockVector)
    res.support = out
    return res


def f_divided(x: FockVector, i: int, a: int, e: int, r: int) -> FockVector:
    """Divided power: a-fold application followed by exact division by [a]!."""
    y = x
    for _ in range(a):
        y = f_apply(y, i, e, r)
    if a <= 1 or y.is_zero():
        return y
    fact = quantum_factorial(a)
    res = FockVector.__new__(FockVector)
    res.support = {lam: c.exact_div(fact) for lam, c in y.support.items()}
    return res


def ladder_sequence(mu: Partition, e: int):
    """(residue, node count) per ladder of mu, in increasing ladder index.

    The ladder through node (a, b) (1-indexed) has index a + (b-1)(e-1);
    its residue (b - a) mod e is constant along the ladder.
    """
    if not is_e_regular(mu, e):
        raise NotERegular(f"{mu} is {e}-singular")
    counts: dict = {}
    for a, row_len in enumerate(mu, start=1):
        for b in range(1, row_len + 1):
            ell = a + (b - 1) * (e - 1)
            res = (b - a) % e
            prev = counts.get(ell)
            if prev is None:
                counts[ell] = [res, 1]
            else:
                assert prev[0] == res
                prev[1] += 1
    return [(res, cnt) for ell, (res, cnt) in sorted(counts.items())]


def ladder_approximation(mu: Partition, e: int, r: int) -> FockVector:
    """A(mu): divided-power ladder operators applied to the vacuum."""
    x = FockVector.vacuum()
    for res, cnt in ladder_sequence(mu, e):
        x = f_divided(x, res, cnt, e, r)
    return x


class CanonicalCache:
    """Memo for canonical-basis vectors, keyed by (e, mu).

    Concurrent readers are safe; writes are serialized by a lock and each
    key is computed at most once per process.
    """

    def __init__(self):
        self._data: dict = {}
        self._lock = threading.Lock()

    def get(self, e: int, mu: Partition):
        return self._data.get((e, mu))

    def put(self, e: int, mu: Partition, vec: FockVector):
        with self._lock:
            self._data.setdefault((e, mu), vec)

    def __len__(self):
        return len(self._data)

    def keys(self):
        return list(self._data.keys())

    # -- persistence --------------------------------------------------------

    HEADER = "LLTCACHE 1"

    def save(self, path):
        with open(path, "w") as fh:
            fh.write(self.HEADER + "\n")
            for (e, mu) in sorted(self._data):
                vec = self._data[(e, mu)]
                fh.write(f"G {e} {size(mu)} {format_partition(mu)}\n")
                for lam in sorted(vec.support, reverse=True):
                    c = vec.support[lam]
                    body = ",".join(
                        f"{k}:{v}" for k, v in sorted(c.coeffs.items())
                    )
                    fh.write(f"{format_partition(lam)} {body}\n")
                fh.write(".\n")

    def load(self, path):
        with open(path) as fh:
            header = fh.readline().rstrip("\n")
            if header != self.HEADER:
                raise ValueError(f"bad cache header {header!r}")
            cur_key = None
            cur: dict = {}
            for line in fh:
                line = line.rstrip("\n")
                if not line:
                    continue
                if line.startswith("G "):
                    _, e_s, _n_s, mu_s = line.split()
                    cur_key = (int(e_s), parse_partition(mu_s))
                    cur = {}
                elif line == ".":
                    e, mu = cur_key
                    vec = FockVector(cur)
                    _validate_canonical(vec, mu)
                    self._data.setdefault(cur_key, vec)
                    cur_key = None
                else:
                    lam_s, body = line.split(" ", 1)
                    lam = parse_partition(lam_s)
                    coeffs = {}
                    for chunk in body.split(","):
                        k_s, v_s = chunk.split(":")
                        coeffs[int(k_s)] = int(v_s)
                    cur[lam] = LaurentPoly(coeffs)


def _validate_canonical(vec: FockVector, mu: Partition):
    assert vec.coeff(mu) == LaurentPoly.one(), f"diagonal of G({mu}) is not 1"
    for lam, c in vec.items():
        if lam != mu:
            assert c.in_v_lattice(), f"G({mu}) coefficient at {lam} not in vZ[v]"


def canonical_basis(mu: Partition, e: int, cache: CanonicalCache, r: int | None = None) -> FockVector:
    """G(mu): ladder approximation corrected to the bar-invariant element
    congruent to s(mu) modulo the v-lattice."""
    if not is_e_regular(mu, e):
        raise NotERegular(f"{mu} is {e}-singular")
    hit = cache.get(e, mu)
    if hit is not None:
        return hit
    if r is None:
        r = default_bead_count(size(mu), e)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 100000))
    vec = _canonical_rec(mu, e, cache, r)
    return vec


def _canonical_rec(mu: Partition, e: int, cache: CanonicalCache, r: int) -> FockVector:
    hit = cache.get(e, mu)
    if hit is not None:
        return hit
    vec = ladder_approximation(mu, e, r)
    guard = 4 * len(vec.support) + 16
    while True:
        offenders = [
            nu
            for nu, c in vec.support.items()
            if nu != mu and c.has_nonpositive_term()
        ]
        if not offenders:
            break
        guard -= 1
        if guard < 0:
            raise CorrectionDiverged(f"correction loop for G({mu}) did not settle")
        nu = max(offenders)
        beta = vec.support[nu].symmetric_completion()
        vec = vec - _canonical_rec(nu, e, cache, r).scaled(beta)
    _validate_canonical(vec, mu)
    cache.put(e, mu, vec)
    return cache.get(e, mu)


def v_decomp(lam: Partition, mu: Partition, e: int, cache: CanonicalCache, r: int | None = None) -> LaurentPoly:
    """Coefficient of s(lam) in G(mu)."""
    return canonical_basis(mu, e, cache, r).coeff(lam)


def jc_bound(lam: Partition, mu: Partition, e: int, cache: CanonicalCache, r: int | None = None) -> int:
    """Derivative at v=1 of the v-decomposition number."""
    return v_decomp(lam, mu, e, cache, r).derivative_at_one()


def decomposition_matrix(block, cache: CanonicalCache):
    """(rows, cols, matrix of d(1) values) for the block: rows all member
    partitions, cols the e-regular ones, both descending lex."""
    from .partitions import enumerate_block

    rows = enumerate_block(block)
    cols = [lam for lam in rows if is_e_regular(lam, block.e)]
    mat = []
    gs = {mu: canonical_basis(mu, block.e, cache, block.r) for mu in cols}
    for lam in rows:
        mat.append([gs[mu].coeff(lam).eval_at_one() for mu in cols])
    return rows, cols, mat


def expand_in_canonical_basis(x: FockVector, e: int, cache: CanonicalCache, r: int):
    """Write x = sum a_nu G(nu) by eliminating the descending-lex maximal
    support element at each step.  Returns dict nu -> a_nu; raises through
    the caller if a maximal element is e-singular (cannot happen for vectors
    in the span of the canonical basis)."""
    coeffs: dict = {}
    rem = x
    while not rem.is_zero():
        nu = max(rem.support)
        a = rem.support[nu]
        coeffs[nu] = a
        rem = rem - canonical_basis(nu, e, cache, r).scaled(a)
    return coeffs
