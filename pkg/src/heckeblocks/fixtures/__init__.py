"""Bundled reference tables and their template mini-language.

Each CSV row describes a family of bracket labels in the principal block of
H_{5e}.  A label template is a ';'-separated list of entries
``runner_expr:part,part^mult,...`` where ``runner_expr`` and the parts are
integer expressions in the symbols ``i``, ``j`` and ``e``.  The ``cond``
column is a boolean expression in the same symbols selecting the instances
the row covers.  Lines starting with '#' are comments.
"""

from __future__ import annotations

import csv
import os
import re

from ..notation import BracketExpr, decode
from ..partitions import BlockId, principal_block_5e, validate_partition

_DIR = os.path.dirname(__file__)

TABLE_A = os.path.join(_DIR, "tableA.csv")
TABLE_B = os.path.join(_DIR, "tableB.csv")
CANDIDATES_A = os.path.join(_DIR, "candidatesA.csv")
CANDIDATES_B = os.path.join(_DIR, "candidatesB.csv")


def _eval(expr: str, env: dict) -> int:
    return eval(expr, {"__builtins__": {}}, env)  # noqa: S307 - fixed fixture data


def parse_template(text: str):
    """Split a label template into (runner_expr, part_exprs) entries."""
    entries = []
    for chunk in text.strip().split(";"):
        runner_expr, _, parts_s = chunk.partition(":")
        parts = []
        for p in parts_s.split(",") if parts_s else ["1"]:
            expr, _, mult = p.partition("^")
            parts.append((expr.strip(), int(mult) if mult else 1))
        entries.append((runner_expr.strip(), parts))
    return entries


def instantiate(template: str, env: dict, block: BlockId):
    """Decode one instance of a label template inside the given block."""
    entries = []
    for runner_expr, parts in parse_template(template):
        runner = _eval(runner_expr, env)
        flat = []
        for expr, mult in parts:
            flat.extend([_eval(expr, env)] * mult)
        entries.append((runner, validate_partition(tuple(flat))))
    expr = BracketExpr(tuple(sorted(entries)))
    return decode(expr, block)


def read_rows(path: str):
    with open(path, newline="") as fh:
        rows = [
            row
            for row in csv.DictReader(r for r in fh if not r.startswith("#"))
        ]
    return rows


def iter_instances(row: dict, max_e: int):
    """All (env, e) bindings satisfying the row's condition, e <= max_e."""
    cond = row["cond"]
    fields = [cond] + [row.get(k, "") for k in ("mu", "dual", "lam", "mu_dual", "lam_dual")]
    uses_i = any(re.search(r"\bi\b", f) for f in fields)
    uses_j = any(re.search(r"\bj\b", f) for f in fields)
    for e in range(2, max_e + 1):
        for i in range(e) if uses_i else (0,):
            js = range(e) if uses_j else (0,)
            for j in js:
                env = {"i": i, "j": j, "e": e}
                if _eval(cond, env):
                    yield env, e


def check_mullineux_table(path: str, max_e: int = 8):
    """Re-check every instance of an involution fixture; returns failures."""
    from ..mullineux import mullineux

    failures = []
    seen: dict = {}
    for row in read_rows(path):
        for env, e in iter_instances(row, max_e):
            block = principal_block_5e(e)
            try:
                mu = instantiate(row["mu"], env, block)
                expected = instantiate(row["dual"], env, block)
            except Exception as exc:  # malformed instance is a failure
                failures.append(f"{row['mu']} @ {env}: {exc}")
                continue
            prev = seen.get((e, mu))
            if prev is not None:
                if prev != expected:
                    failures.append(f"conflicting duals for {mu} at e={e}")
                continue
            seen[(e, mu)] = expected
            got = mullineux(mu, e)
            if got != expected:
                failures.append(
                    f"{row['mu']} @ {env}: involution gave {got}, table says {expected}"
                )
    return failures


def candidate_rows(path: str, e: int):
    """Instances of a candidate-pair fixture at this e: dicts with decoded
    partitions lam, mu, lam_dual, mu_dual and the printed value strings."""
    block = principal_block_5e(e)
    out = []
    for row in read_rows(path):
        for env, e_got in iter_instances(row, e):
            if e_got != e:
                continue
            out.append(
                {
                    "lam": instantiate(row["lam"], env, block),
                    "mu": instantiate(row["mu"], env, block),
                    "lam_dual": instantiate(row["lam_dual"], env, block),
                    "mu_dual": instantiate(row["mu_dual"], env, block),
                    "d": row["d"],
                    "d_dual": row["d_dual"],
                    "note": row.get("note", ""),
                }
            )
    return out
