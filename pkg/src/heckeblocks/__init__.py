"""Exact abacus, Fock-space and adjustment-matrix combinatorics for blocks
of Iwahori-Hecke algebras of type A at an e-th root of unity."""

from .partitions import (
    BlockId,
    block_of,
    default_bead_count,
    e_core_and_weight,
    enumerate_block,
    format_partition,
    is_e_regular,
    parse_partition,
    principal_block_5e,
)
from .laurent import LaurentPoly
from .notation import decode_text, encode_text
from .branching import signature, simple_restrict, simple_induce, runner_move
from .mullineux import mullineux, mullineux_kleshchev
from .fock import CanonicalCache, canonical_basis, v_decomp, decomposition_matrix
from .jantzen import js_bound, jantzen_leq
from .verifier import report, verdict_matches, CHAR_HYPOTHESIS

__version__ = "0.1.0"

__all__ = [
    "BlockId",
    "CanonicalCache",
    "CHAR_HYPOTHESIS",
    "LaurentPoly",
    "block_of",
    "canonical_basis",
    "decode_text",
    "decomposition_matrix",
    "default_bead_count",
    "e_core_and_weight",
    "encode_text",
    "enumerate_block",
    "format_partition",
    "is_e_regular",
    "jantzen_leq",
    "js_bound",
    "mullineux",
    "mullineux_kleshchev",
    "parse_partition",
    "principal_block_5e",
    "report",
    "runner_move",
    "signature",
    "simple_induce",
    "simple_restrict",
    "v_decomp",
    "verdict_matches",
    "__version__",
]
