"""The Mullineux involution on e-regular partitions, by two algorithms.

Algorithm A builds the rim-stripping symbol and transforms its row counts;
algorithm B peels good nodes and rebuilds with negated residues.  The two
must always agree; the test suite enforces this.
"""

from __future__ import annotations

from .errors import NotERegular
from .partitions import (
    Partition,
    beta_set,
    default_bead_count,
    from_beta_set,
    is_e_regular,
    size,
    validate_partition,
)
from .branching import signature


# ---------------------------------------------------------------------------
# Algorithm A: rim-stripping symbol


def e_rim_strip(lam: Partition, e: int):
    """Remove one e-rim; returns (nodes removed, remaining partition).

    The rim is walked from (1, lam_1) toward the bottom left in runs of e
    nodes; after each complete run the walk restarts at the rim node of the
    next lower row.
    """
    rows = len(lam)
    nodes = []  # full rim in traversal order
    row_start = {}  # row -> index of its first rim node
    for i in range(1, rows + 1):
        lo = max(lam[i] if i < rows else 0, 1)
        row_start[i] = len(nodes)
        for c in range(lam[i - 1], lo - 1, -1):
            nodes.append((i, c))
    removed_per_row = [0] * rows
    idx = 0
    count = 0
    while idx < len(nodes):
        run = nodes[idx : idx + e]
        for row, _ in run:
            removed_per_row[row - 1] += 1
        count += len(run)
        if len(run) < e:
            break
        last_row = run[-1][0]
        if last_row + 1 > rows:
            break
        idx = row_start[last_row + 1]
    rest = tuple(p - k for p, k in zip(lam, removed_per_row) if p - k > 0)
    return count, validate_partition(rest)


def mullineux_symbol(lam: Partition, e: int):
    """Columns (a_j, r_j): nodes stripped and row count at each strip."""
    cols = []
    cur = lam
    while cur:
        a, rest = e_rim_strip(cur, e)
        cols.append((a, len(cur)))
        cur = rest
    return tuple(cols)


def _reconstruct_step(rho: Partition, a: int, rows: int, e: int) -> Partition:
    """The unique partition with the given row count whose e-rim strip
    removes a nodes and leaves rho."""
    if rows < len(rho) or a < rows:
        raise ValueError(f"no partition: rho={rho}, a={a}, rows={rows}")
    base = [rho[i] if i < len(rho) else 0 for i in range(rows)]
    found = []

    def rec(i, remaining, prev, parts):
        if i == rows:
            if remaining == 0:
                cand = tuple(parts)
                cnt, rest = e_rim_strip(cand, e)
                if cnt == a and rest == rho:
                    found.append(cand)
            return
        lo = max(base[i] + 1, 1)
        # rim structure forces base[i] >= cand[i+1] - 1 for the next row
        hi = min(prev, base[i - 1] + 1 if i >= 1 else remaining + base[i])
        hi = min(hi, base[i] + remaining - (rows - 1 - i))
        for val in range(lo, hi + 1):
            rec(i + 1, remaining - (val - base[i]), val, parts + [val])

    rec(0, a, a + base[0], [])
    if len(found) != 1:
        raise ValueError(
            f"reconstruction not unique: rho={rho}, a={a}, rows={rows}, found={found}"
        )
    return found[0]


def mullineux(lam: Partition, e: int) -> Partition:
    """The involution image of an e-regular partition (symbol algorithm)."""
    if not is_e_regular(lam, e):
        raise NotERegular(f"{lam} is {e}-singular")
    cols = mullineux_symbol(lam, e)
    dual_cols = []
    for a, r in cols:
        eps = 1 if a % e != 0 else 0
        dual_cols.append((a, a - r + eps))
    out: Partition = ()
    for a, s in reversed(dual_cols):
        out = _reconstruct_step(out, a, s, e)
    return out


# ---------------------------------------------------------------------------
# Algorithm B: good-node peeling with negated residues


def _normal_positions(lam: Partition, e: int, r: int, k: int):
    return signature(lam, e, r, k).normal_positions


def _conormal_positions(lam: Partition, e: int, r: int, k: int):
    return signature(lam, e, r, k).conormal_positions


def good_node_residues(lam: Partition, e: int, r: int):
    """Residue word peeling lam to the empty partition by good nodes.

    At each step the smallest residue with a normal bead is peeled; the
    good bead is the normal bead of smallest position.
    """
    residues = []
    beads = set(beta_set(lam, r))
    cur = lam
    while cur:
        for i in range(e):
            k = (i + r) % e
            normals = _normal_positions(cur, e, r, k)
            if normals:
                p = min(normals)
                beads.remove(p)
                beads.add(p - 1)
                cur = from_beta_set(beads)
                residues.append(i)
                break
        else:
            raise AssertionError(f"no good node on {cur}")
    return residues


def mullineux_kleshchev(lam: Partition, e: int) -> Partition:
    """Independent oracle: peel good nodes, rebuild with negated residues."""
    if not is_e_regular(lam, e):
        raise NotERegular(f"{lam} is {e}-singular")
    if not lam:
        return ()
    r = default_bead_count(size(lam), e)
    residues = good_node_residues(lam, e, r)
    cur: Partition = ()
    beads = set(beta_set((), r))
    for i in reversed(residues):
        k = ((-i) % e + r) % e
        conormals = _conormal_positions(cur, e, r, k)
        if not conormals:
            raise AssertionError(f"no cogood addition of residue {-i % e} on {cur}")
        p = max(conormals)
        beads.remove(p - 1)
        beads.add(p)
        cur = from_beta_set(beads)
    return cur
