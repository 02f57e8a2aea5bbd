import pytest

from heckeblocks.errors import NonExactDivision
from heckeblocks.laurent import LaurentPoly, quantum_factorial, quantum_int

V = LaurentPoly.monomial(1)
ONE = LaurentPoly.one()


def test_arithmetic():
    p = V + ONE
    assert p * p == LaurentPoly({0: 1, 1: 2, 2: 1})
    assert p - p == LaurentPoly.zero()
    assert (p * 3).coeff(1) == 3
    assert (-p).coeff(0) == -1
    assert not LaurentPoly.zero()
    assert p


def test_degrees_and_bar():
    p = LaurentPoly({-2: 1, 3: 4})
    assert p.min_degree() == -2 and p.max_degree() == 3
    assert p.bar() == LaurentPoly({2: 1, -3: 4})
    assert p.bar().bar() == p


def test_exact_division():
    num = quantum_int(3) * quantum_int(2)
    assert num.exact_div(quantum_int(2)) == quantum_int(3)
    with pytest.raises(NonExactDivision):
        (V + ONE).exact_div(quantum_int(3))


def test_quantum_integers():
    assert quantum_int(2) == LaurentPoly({-1: 1, 1: 1})
    assert quantum_int(3) == LaurentPoly({-2: 1, 0: 1, 2: 1})
    assert quantum_factorial(3) == quantum_int(2) * quantum_int(3)
    assert quantum_int(4).eval_at_one() == 4


def test_eval_and_derivative():
    p = LaurentPoly({0: 2, 1: 3, 2: 1})  # 2 + 3v + v^2
    assert p.eval_at_one() == 6
    assert p.derivative_at_one() == 3 + 2


def test_lattice_and_positivity_predicates():
    assert V.in_v_lattice()
    assert not ONE.in_v_lattice()
    assert (V + V * V).in_nonneg_poly()
    assert not (V - ONE).in_nonneg_poly()
    sym = LaurentPoly({-1: 1, 1: 1}) * 2 + ONE
    assert sym.in_nonneg_symmetric()
    assert not (V + ONE).in_nonneg_symmetric()


def test_symmetric_completion():
    p = LaurentPoly({-2: 1, -1: 3, 0: 2})
    q = p.symmetric_completion()
    assert q.bar() == q
    # agrees with p on non-positive degrees
    for k in (-2, -1, 0):
        assert q.coeff(k) == p.coeff(k)


def test_format_parse_round_trip():
    for p in (
        LaurentPoly.zero(),
        ONE,
        V,
        LaurentPoly({-2: 1, 0: -3, 5: 7}),
        LaurentPoly({2: 3}),
    ):
        assert LaurentPoly.parse(p.format()) == p
    assert LaurentPoly.parse("0") == LaurentPoly.zero()
    assert LaurentPoly.parse("v^2") == LaurentPoly.monomial(2)
    assert LaurentPoly.parse("3v^2") == LaurentPoly.monomial(2, 3)
