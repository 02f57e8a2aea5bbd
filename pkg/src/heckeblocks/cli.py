"""Command-line front end."""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .branching import Direction, runner_move, signature
from .errors import HeckeblocksError
from .fock import (
    CanonicalCache,
    canonical_basis,
    decomposition_matrix,
    v_decomp,
)
from .jantzen import jantzen_leq, js_bound
from .laurent import LaurentPoly
from .mullineux import mullineux, mullineux_kleshchev
from .notation import decode_text, encode_text
from .partitions import (
    BlockId,
    block_of,
    default_bead_count,
    e_core_and_weight,
    enumerate_block,
    format_partition,
    is_e_regular,
    parse_partition,
    partitions_of,
    principal_block_5e,
    same_block,
    size,
)
from .verifier import report, verdict_matches

CACHE_ENV = "HECKEBLOCKS_CACHE_DIR"


def _block_from_args(args) -> BlockId | None:
    if getattr(args, "principal_5e", False):
        return principal_block_5e(args.e)
    if getattr(args, "block", None):
        counts = tuple(int(x) for x in args.block.split(","))
        if getattr(args, "n", None) is not None:
            core = BlockId(args.e, counts, 0).core_partition()
            return BlockId(args.e, counts, (args.n - size(core)) // args.e)
        raise SystemExit2("--block requires --n to fix the weight")
    return None


class SystemExit2(SystemExit):
    def __init__(self, message):
        print(f"error: {message}", file=sys.stderr)
        super().__init__(2)


def _parse_partition_arg(text: str, args):
    text = text.strip()
    if text.startswith("<"):
        block = _block_from_args(args)
        if block is None:
            raise SystemExit2("bracket input needs --principal-5e or --block/--n")
        return decode_text(text, block)
    return parse_partition(text)


def _load_cache(args) -> CanonicalCache:
    cache = CanonicalCache()
    path = getattr(args, "cache", None)
    if path and os.path.exists(path):
        cache.load(path)
    return cache


def _save_cache(cache: CanonicalCache, args):
    path = getattr(args, "cache", None)
    if path:
        cache.save(path)


def cmd_core(args):
    lam = _parse_partition_arg(args.partition, args)
    core, weight = e_core_and_weight(lam, args.e)
    print(f"core: {format_partition(core)}  weight: {weight}")
    return 0


def cmd_block(args):
    lam = _parse_partition_arg(args.partition, args)
    blk = block_of(lam, args.e)
    print(
        f"block: {blk.notation()}  weight: {blk.weight}  n: {blk.n}"
        f"  label: {encode_text(lam, blk)}"
    )
    return 0


def cmd_regular(args):
    lam = _parse_partition_arg(args.partition, args)
    print("true" if is_e_regular(lam, args.e) else "false")
    return 0


def cmd_mullineux(args):
    if args.table:
        return _mullineux_table_check(args)
    lam = _parse_partition_arg(args.partition, args)
    img = mullineux(lam, args.e)
    assert mullineux_kleshchev(lam, args.e) == img
    if args.partition.strip().startswith("<"):
        print(encode_text(img, _block_from_args(args)))
    else:
        print(format_partition(img))
    return 0


def _mullineux_table_check(args):
    from .fixtures import check_mullineux_table

    failures = check_mullineux_table(args.table, max_e=8)
    for line in failures:
        print(line)
    print("table check:", "FAIL" if failures else "ok")
    return 3 if failures else 0


def cmd_branch(args):
    lam = _parse_partition_arg(args.partition, args)
    e, r = args.e, args.r or default_bead_count(size(lam), args.e)
    blk = block_of(lam, e, r)
    pairs = [int(x) for x in args.pair.split(",")] if args.pair else list(range(e))
    for i in pairs:
        sig = signature(lam, e, r, i)
        raw = "".join(s for _, s in sig.raw)
        red = "".join(s for _, s in sig.reduced)
        print(
            f"pair ({(i - 1) % e},{i % e}): raw {raw or '-'} reduced {red or '-'}"
            f" normal {list(sig.normal_positions)} conormal {list(sig.conormal_positions)}"
        )
        if is_e_regular(lam, e):
            mv = runner_move(blk, i, args.kappa, Direction.RESTRICT)
            if mv is not None:
                from .branching import simple_restrict

                res = simple_restrict(lam, mv)
                if res is None:
                    print("  restricted simple: zero")
                else:
                    flag = " (reducible)" if res.reducible else ""
                    print(f"  restricted simple: {format_partition(res.label)}{flag}")
    return 0


def cmd_llt(args):
    mu = _parse_partition_arg(args.mu, args)
    cache = _load_cache(args)
    g = canonical_basis(mu, args.e, cache)
    for lam in sorted(g.support, reverse=True):
        print(f"{format_partition(lam)}: {g.support[lam].format()}")
    _save_cache(cache, args)
    return 0


def cmd_dmatrix(args):
    e = args.e
    core = parse_partition(args.core)
    n_target = size(core) + e * args.weight
    blk_probe = block_of(core, e, default_bead_count(n_target, e))
    blk = BlockId(e, blk_probe.core_beads, args.weight)
    cache = _load_cache(args)
    rows, cols, mat = decomposition_matrix(blk, cache)
    _save_cache(cache, args)
    header = [""] + [format_partition(c) for c in cols]
    body = [[format_partition(lam)] + [str(x) for x in row] for lam, row in zip(rows, mat)]
    if args.format == "json":
        print(json.dumps({"rows": header[1:], "matrix": mat}))
    elif args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(header)
        w.writerows(body)
    else:
        print(" | ".join(header))
        for row in body:
            print(" | ".join(row))
    return 0


def cmd_js(args):
    if args.check_ryom_hansen:
        return _check_ryom_hansen(args)
    lam = _parse_partition_arg(getattr(args, "lam"), args)
    mu = _parse_partition_arg(args.mu, args)
    cache = _load_cache(args)

    def oracle(tau):
        if not same_block(tau, mu, args.e):
            return 0
        return v_decomp(tau, mu, args.e, cache).eval_at_one()

    val = js_bound(lam, mu, args.e, args.p, oracle)
    print(f"js_bound: {val}")
    _save_cache(cache, args)
    return 0


def _check_ryom_hansen(args):
    cache = CanonicalCache()
    mismatches = 0
    for e in (2, 3, 4):
        for n in range(1, args.max_n + 1):
            for lam in partitions_of(n):
                for mu in partitions_of(n):
                    if lam == mu or not is_e_regular(mu, e):
                        continue
                    if not same_block(lam, mu, e):
                        continue
                    d = v_decomp(lam, mu, e, cache)

                    def oracle(tau, _mu=mu, _e=e):
                        if not same_block(tau, _mu, _e):
                            return 0
                        return v_decomp(tau, _mu, _e, cache).eval_at_one()

                    j = js_bound(lam, mu, e, 0, oracle)
                    if j != d.derivative_at_one():
                        mismatches += 1
                        print(f"mismatch e={e} {lam} {mu}: {j} != derivative")
    print(f"ryom-hansen check: {mismatches} mismatches (n <= {args.max_n})")
    return 3 if mismatches else 0


def _verify_payload(rep, blk):
    entries = []
    for st in rep.entries:
        entries.append(
            {
                "lambda": encode_text(st.lam, blk),
                "mu": encode_text(st.mu, blk),
                "status": st.status,
                "justification": st.justification,
                "d_poly": st.d_poly.format() if st.d_poly is not None else None,
            }
        )
    return {
        "e": rep.e,
        "block": blk.notation(),
        "entries": entries,
        "summary": {
            "hypothesis": rep.hypothesis,
            "verdict": rep.verdict,
            "regular_labels": rep.regular_count,
            "lowerable_zeros": rep.lowerable_zero_count,
            "unknown_entries": [
                [encode_text(l, blk), encode_text(m, blk)] for l, m in rep.unknowns
            ],
        },
    }


def cmd_verify(args):
    cache = _load_cache(args)
    rep = report(args.e, cache)
    _save_cache(cache, args)
    blk = rep.block
    payload = _verify_payload(rep, blk)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["lambda", "mu", "status", "justification", "d_poly"])
        for en in payload["entries"]:
            w.writerow([en["lambda"], en["mu"], en["status"], en["justification"], en["d_poly"] or ""])
    else:
        print(f"# Adjustment-matrix report, e={rep.e}, block {blk.notation()}")
        print(f"_{rep.hypothesis}_")
        print()
        print(f"- e-regular labels: {rep.regular_count}")
        print(f"- off-diagonal zeros by restriction elsewhere: {rep.lowerable_zero_count}")
        print()
        print("| lambda | mu | status | justification | d |")
        print("|---|---|---|---|---|")
        for en in payload["entries"]:
            print(
                f"| {en['lambda']} | {en['mu']} | {en['status']} |"
                f" {en['justification']} | {en['d_poly'] or ''} |"
            )
        print()
        print(f"verdict: {rep.verdict}")
    return 0 if verdict_matches(rep) else 3


def cmd_cache(args):
    cache = CanonicalCache()
    if not os.path.exists(args.file):
        print("cache file does not exist")
        return 0 if args.info else 2
    cache.load(args.file)
    keys = cache.keys()
    print(f"records: {len(keys)}")
    for e, mu in sorted(keys)[:20]:
        print(f"  e={e} n={size(mu)} mu={format_partition(mu)}")
    if len(keys) > 20:
        print(f"  ... and {len(keys) - 20} more")
    return 0


def _add_common(p, needs_e=True):
    if needs_e:
        p.add_argument("--e", type=int, required=True)
    p.add_argument("--principal-5e", action="store_true", dest="principal_5e",
                   help="interpret bracket input in the principal block of H_{5e}")
    p.add_argument("--block", help="core bead counts b0,b1,... for bracket input")
    p.add_argument("--n", type=int, help="partition size fixing the block weight")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="heckeblocks",
        description="Exact abacus and Fock-space combinatorics for Hecke-algebra blocks",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("core", help="e-core and e-weight of a partition")
    _add_common(p)
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("block", help="block label of a partition")
    _add_common(p)
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_block)

    p = sub.add_parser("regular", help="test e-regularity")
    _add_common(p)
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_regular)

    p = sub.add_parser("mullineux", help="the Mullineux involution")
    _add_common(p)
    p.add_argument("--partition")
    p.add_argument("--table", help="fixture CSV to re-check")
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_mullineux)

    p = sub.add_parser("branch", help="signatures and branching labels")
    _add_common(p)
    p.add_argument("--partition", required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--pair", help="runner index i (or comma list) for pair (i-1,i)")
    p.add_argument("--kappa", type=int, default=1)
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("llt", help="canonical-basis vector G(mu)")
    _add_common(p)
    p.add_argument("--mu", required=True)
    p.add_argument("--cache")
    p.set_defaults(func=cmd_llt)

    p = sub.add_parser("dmatrix", help="decomposition matrix of a block at v=1")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--core", required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--at-v1", action="store_true", dest="at_v1")
    p.add_argument("--format", choices=["csv", "md", "json"], default="md")
    p.add_argument("--cache")
    p.set_defaults(func=cmd_dmatrix)

    p = sub.add_parser("js", help="sum-formula bound")
    _add_common(p)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--mu")
    p.add_argument("--check-ryom-hansen", action="store_true", dest="check_ryom_hansen")
    p.add_argument("--max-n", type=int, default=10, dest="max_n")
    p.add_argument("--cache")
    p.set_defaults(func=cmd_js)

    p = sub.add_parser("verify", help="adjustment-matrix report for H_{5e}")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--cache")
    p.add_argument("--format", choices=["md", "json", "csv"], default="md")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cache", help="inspect a canonical-basis cache file")
    p.add_argument("--file", required=True)
    p.add_argument("--info", action="store_true")
    p.set_defaults(func=cmd_cache)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        rc = args.func(args)
    except SystemExit2 as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except (HeckeblocksError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    return rc


if __name__ == "__main__":
    sys.exit(main())
