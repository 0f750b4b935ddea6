from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperspec.cyclotomic import (
    CycInt,
    cyclotomic_polynomial,
    embed,
    orbit_canonical,
    reduce,
    rotate,
    totient,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert [totient(q) for q in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_reduce_examples():
    assert reduce([3, 1], 2) == 2
    assert reduce([0, 0, 1], 3).coeffs == (-1, -1)
    assert reduce([1, 1, 1, 1], 4).is_zero()


@pytest.mark.parametrize("q", range(2, 25))
def test_sum_of_all_roots_is_zero(q):
    assert reduce([1] * q, q).is_zero()


def test_arithmetic_examples():
    w = reduce([1, 1, 0], 3)
    assert w**3 == -1
    assert CycInt.from_int(2, 2) ** 2 == 4
    i = reduce([0, 1, 0, 0], 4)
    assert i * i == -1


def test_rotate_examples():
    assert rotate(CycInt.one(3), 1) == CycInt.zeta(3)
    assert rotate(CycInt.from_int(2, 5), 1) == -5
    assert rotate(CycInt(4, (1, 1)), 2) == CycInt(4, (-1, -1))


def test_orbit_examples():
    rep, size = orbit_canonical(CycInt.from_int(2, -3))
    assert (rep, size) == (CycInt.from_int(2, -3), 2)
    assert orbit_canonical(CycInt.zero(3)) == (CycInt.zero(3), 1)
    i = CycInt.zeta(4)
    rep, size = orbit_canonical(i)
    assert size == 4
    assert rep == min((i.rotate(j) for j in range(4)), key=lambda z: z.coeffs)


def test_embed_examples():
    assert embed(CycInt.from_int(2, 4)) == 4 + 0j
    assert abs(embed(CycInt.zeta(4)) - 1j) < 1e-15
    z = embed(reduce([1, 1, 0], 3))
    assert abs(z - complex(0.5, 0.8660254037844386)) < 1e-15


def test_galois_and_conj():
    z = CycInt.zeta(5)
    assert z.galois(2) == CycInt.zeta(5, 2)
    assert z.conj() == CycInt.zeta(5, 4)
    assert (z * z.conj()) == 1


def test_division_by_scalar_and_rationals():
    half = CycInt.from_int(3, 1) / 2
    assert half.rational_value() == Fraction(1, 2)
    assert hash(CycInt.from_int(3, 7)) == hash(7)
    with pytest.raises(ValueError):
        CycInt(3, (1, 2, 3))


def test_json_roundtrip():
    for z in (CycInt(5, (1, -2, 0, 7)), CycInt(3, (Fraction(1, 3), 2))):
        assert CycInt.from_json(z.to_json()) == z


def test_immutable():
    z = CycInt.one(3)
    with pytest.raises(AttributeError):
        z.q = 4


qs = st.sampled_from([2, 3, 4, 5, 6, 7, 8, 12])


@st.composite
def cyc_triples(draw):
    q = draw(qs)
    elems = [
        CycInt(q, draw(st.lists(st.integers(-20, 20), min_size=totient(q), max_size=totient(q))))
        for _ in range(3)
    ]
    return elems


@settings(max_examples=60, deadline=None)
@given(cyc_triples())
def test_ring_axioms(t):
    a, b, c = t
    q = a.q
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + CycInt.zero(q) == a
    assert a * CycInt.one(q) == a
    assert (a - a).is_zero()
    assert abs((a * b).embed() - a.embed() * b.embed()) < 1e-6 * (1 + abs(a.embed() * b.embed()))


@settings(max_examples=40, deadline=None)
@given(cyc_triples(), st.integers(0, 30))
def test_rotation_is_multiplication_by_zeta(t, j):
    a = t[0]
    assert a.rotate(j) == a * CycInt.zeta(a.q, j)
    rep, size = a.orbit_canonical()
    assert a.q % size == 0
    assert rep.orbit_canonical() == (rep, size)
