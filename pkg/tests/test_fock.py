import pytest

from heckeblocks.errors import NonExactDivision, NotERegular
from heckeblocks.fock import (
    CanonicalCache,
    FockVector,
    canonical_basis,
    decomposition_matrix,
    expand_in_canonical_basis,
    f_apply,
    f_divided,
    jc_bound,
    ladder_sequence,
    v_decomp,
)
from heckeblocks.laurent import LaurentPoly
from heckeblocks.partitions import (
    block_of,
    default_bead_count,
    dominates,
    enumerate_block,
    is_e_regular,
    partitions_of,
    principal_block_5e,
    size,
)


def test_f_apply_on_vacuum():
    # e = 2, r = 2: one residue-0 addable corner on the empty partition
    x = f_apply(FockVector.vacuum(), 0, 2, 2)
    assert set(x.support) == {(1,)}
    assert x.coeff((1,)) == LaurentPoly.one()


def test_divided_power_square():
    # applying f_1 twice to s((1)) at e = 2 and dividing by [2]! is exact
    from heckeblocks.laurent import quantum_factorial

    x = FockVector.basis((1,))
    y = f_divided(x, 1, 2, 2, 2)
    assert not y.is_zero()
    # scaling back by [2]! recovers the plain square
    sq = f_apply(f_apply(x, 1, 2, 2), 1, 2, 2)
    assert y.scaled(quantum_factorial(2)) == sq


def test_f_squared_annihilates_when_no_two_addables():
    # at e = 2 the vacuum has a single 0-addable node, so f_0^2 kills it
    x = f_apply(f_apply(FockVector.vacuum(), 0, 2, 2), 0, 2, 2)
    assert x.is_zero()


def test_ladder_sequence_counts():
    seq = ladder_sequence((2, 1), 2)
    assert sum(cnt for _, cnt in seq) == 3
    with pytest.raises(NotERegular):
        ladder_sequence((1, 1), 2)


def test_canonical_basis_small(cache):
    g = canonical_basis((3, 1), 2, cache)
    assert g.coeff((3, 1)) == LaurentPoly.one()
    assert g.coeff((2, 2)) == LaurentPoly.monomial(1)
    assert g.coeff((2, 1, 1)) == LaurentPoly.monomial(2)


def test_canonical_basis_structural(cache):
    for e in (2, 3):
        for n in range(1, 9):
            for mu in partitions_of(n):
                if not is_e_regular(mu, e):
                    continue
                g = canonical_basis(mu, e, cache)
                assert g.coeff(mu) == LaurentPoly.one()
                for lam, c in g.items():
                    assert dominates(mu, lam)
                    assert c.in_nonneg_poly()
                    if lam != mu:
                        assert c.in_v_lattice()


def test_r_shift_invariance(cache):
    for e in (2, 3):
        for n in range(1, 8):
            r = default_bead_count(n, e)
            fresh = CanonicalCache()
            for mu in partitions_of(n):
                if not is_e_regular(mu, e):
                    continue
                a = canonical_basis(mu, e, cache, r)
                b = canonical_basis(mu, e, fresh, r + e)
                assert a.support == b.support


def test_decomposition_matrix_unitriangular(cache):
    blk = block_of((4,), 2)
    rows, cols, mat = decomposition_matrix(blk, cache)
    assert set(cols) <= set(rows)
    for j, mu in enumerate(cols):
        i = rows.index(mu)
        assert mat[i][j] == 1
        for k in range(i):
            if not dominates(mu, rows[k]):
                assert mat[k][j] == 0


def test_expand_in_canonical_basis_round_trip(cache):
    e, n = 2, 6
    r = default_bead_count(n, e)
    mus = [m for m in partitions_of(n) if is_e_regular(m, e)]
    x = FockVector()
    coeffs_in = {}
    for k, mu in enumerate(mus[:3]):
        c = LaurentPoly.monomial(k - 1, k + 1)
        coeffs_in[mu] = c
        x = x + canonical_basis(mu, e, cache, r).scaled(c)
    got = expand_in_canonical_basis(x, e, cache, r)
    assert got == coeffs_in


def test_jc_bound_matches_derivative(cache):
    d = v_decomp((2, 1, 1), (3, 1), 2, cache)
    assert jc_bound((2, 1, 1), (3, 1), 2, cache) == d.derivative_at_one()


def test_cache_save_load_round_trip(tmp_path, cache):
    src = CanonicalCache()
    canonical_basis((3, 1), 2, src)
    canonical_basis((2, 2, 1), 3, src)
    path = tmp_path / "cache.txt"
    src.save(path)
    dst = CanonicalCache()
    dst.load(path)
    assert sorted(dst.keys()) == sorted(src.keys())
    for key in src.keys():
        assert dst.get(*key) == src.get(*key)


def test_cache_load_rejects_bad_header(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("NOTACACHE\n")
    with pytest.raises(ValueError):
        CanonicalCache().load(path)
