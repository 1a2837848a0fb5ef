from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redcenter.cyclo import (
    ConductorMismatch,
    ConductorTooSmall,
    Cyclo,
    DivisionByZero,
    cyclotomic_poly,
    euler_phi,
    min_sqrt_conductor,
    scalar_from_json,
    scalar_to_json,
    sqrt_int,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def elements(M):
    return st.lists(small, min_size=euler_phi(M), max_size=euler_phi(M)).map(lambda c: Cyclo(M, c))


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert euler_phi(24) == 8


def test_zeta_relations():
    z = Cyclo.zeta(12)
    assert z ** 12 == 1
    assert z ** 6 == -1
    assert z ** 3 == Cyclo.zeta(12, 3)
    assert Cyclo.zeta(4) * Cyclo.zeta(4) == -1
    # 1 + z + ... + z^(p-1) = 0 for p prime
    assert sum((Cyclo.zeta(5, k) for k in range(5)), Cyclo.rational(5, 0)) == 0


def test_golden_ratio():
    phi = 1 + Cyclo.zeta(5, 1) + Cyclo.zeta(5, 4)
    assert phi * phi == phi + 1


def test_equality_lifts_between_conductors():
    assert Cyclo.zeta(4) == Cyclo.zeta(8, 2)
    assert Cyclo.zeta(4).lift(24) == Cyclo.zeta(24, 6)
    with pytest.raises(ConductorMismatch):
        Cyclo.zeta(4) + Cyclo.zeta(3)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        Cyclo.rational(8, 0).inv()
    with pytest.raises(ZeroDivisionError):
        Cyclo.zeta(8) / 0


def test_conjugate_and_galois():
    z = Cyclo.zeta(8)
    assert z.conjugate() == Cyclo.zeta(8, 7)
    assert z.galois(3) == Cyclo.zeta(8, 3)
    r2 = z + z.conjugate()
    assert r2.conjugate() == r2


def test_json_round_trip():
    x = Cyclo(12, [Fraction(1, 2), 3, 0, -1])
    assert Cyclo.from_json(x.to_json()) == x
    assert scalar_from_json(scalar_to_json(Fraction(3, 4))) == Fraction(3, 4)
    assert scalar_from_json(scalar_to_json(Cyclo.zeta(4)), 24) == Cyclo.zeta(24, 6)


def test_interval_embedding():
    re, im = Cyclo.zeta(8).interval(64)
    assert re.a < 0.70711 < re.b + 1e-5
    assert im.a > 0.7


@settings(max_examples=200, deadline=None)
@given(elements(12), elements(12), elements(12))
def test_field_axioms_q12(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    if a:
        assert a * a.inv() == 1


@settings(max_examples=100, deadline=None)
@given(elements(5), elements(5))
def test_conjugation_is_a_field_automorphism(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()


@pytest.mark.parametrize("n", [2, 3, 5, 6, 7, 10, 12, 15, 21, 4, 9, 50])
def test_sqrt_int_squares_back(n):
    M = min_sqrt_conductor(n) * 2
    r = sqrt_int(n, M)
    assert r * r == n
    assert r.interval(64)[0].a > 0


def test_min_sqrt_conductor():
    assert min_sqrt_conductor(5) == 5
    assert min_sqrt_conductor(3) == 12
    assert min_sqrt_conductor(2) == 8
    assert min_sqrt_conductor(6) == 24
    assert min_sqrt_conductor(9) == 1


def test_sqrt_needs_conductor():
    with pytest.raises(ConductorTooSmall):
        sqrt_int(3, 8)
    with pytest.raises(ValueError):
        sqrt_int(0, 8)


def test_sqrt_multiplicative_on_coprime_parts():
    assert sqrt_int(2, 24) * sqrt_int(3, 24) == sqrt_int(6, 24)
    assert sqrt_int(5, 60) * sqrt_int(3, 60) == sqrt_int(15, 60)
