import json
from fractions import Fraction

import numpy as np
import pytest

from hyperspec.errors import DegenerateSystem, GuardError, RepeatedRoots
from hyperspec.polynomial import RAT, ExactPoly, HomogPoly, SparsePoly
from hyperspec.resultants import (
    Hypergraph,
    Hypermatrix,
    char_poly_oracle,
    eigen_system,
    evaluate_system,
    load_input,
    macaulay_resultant,
    poisson_check_binary,
    random_binary_pair,
    sunflower,
    sylvester_resultant,
)


def coeffs(res):
    return res.int_coeffs()


def test_sunflower_construction():
    h = sunflower(1, 1, 3)
    assert (h.vertices, len(h.edges)) == (3, 1)
    h = sunflower(2, 1, 3)
    assert h.vertices == 5
    assert [set(e) for e in h.edges] == [{0, 1, 2}, {0, 3, 4}]
    h = sunflower(3, 2, 4)
    assert (h.vertices, len(h.edges)) == (8, 3)


def test_hypergraph_validation():
    with pytest.raises(ValueError):
        Hypergraph(3, 3, ((0, 1, 5),))
    with pytest.raises(ValueError):
        Hypergraph(3, 3, ((0, 1),))


def test_eigen_system_all_ones():
    x1, x2 = SparsePoly.variable(2, 0), SparsePoly.variable(2, 1)
    lam = SparsePoly.lam(2)
    sys_ = eigen_system(Hypermatrix.all_ones(2, 3))
    assert sys_[0] == lam * x1**2 - (x1 + x2) ** 2
    assert sys_[1] == lam * x2**2 - (x1 + x2) ** 2


def test_eigen_system_sunflower():
    x = [SparsePoly.variable(3, i) for i in range(3)]
    lam = SparsePoly.lam(3)
    sys_ = eigen_system(sunflower(1, 1, 3))
    assert sys_ == [
        lam * x[0] ** 2 - x[1] * x[2],
        lam * x[1] ** 2 - x[0] * x[2],
        lam * x[2] ** 2 - x[0] * x[1],
    ]


def test_eigen_system_zero():
    x1, x2 = SparsePoly.variable(2, 0), SparsePoly.variable(2, 1)
    lam = SparsePoly.lam(2)
    assert eigen_system(Hypermatrix.zero(2, 3)) == [lam * x1**2, lam * x2**2]


def test_evaluate_system():
    sys_ = eigen_system(Hypermatrix.all_ones(2, 3))
    assert evaluate_system(sys_, 4, [1, 1]) == [0, 0]
    assert evaluate_system(sys_, 5, [1, 1]) == [1, 1]


def test_sylvester_examples():
    assert coeffs(char_poly_oracle(Hypermatrix.all_ones(2, 3))) == [0, 0, 0, -4, 1]
    assert coeffs(char_poly_oracle(Hypermatrix.all_ones(2, 2))) == [0, -2, 1]
    x2 = HomogPoly(2, 2, {(2, 0): 1})
    y2 = HomogPoly(2, 2, {(0, 2): 1})
    res = sylvester_resultant(x2, y2)
    assert coeffs(res) == [1]
    assert res.raw_leading == 1


def test_single_variable():
    assert coeffs(char_poly_oracle(Hypermatrix.all_ones(1, 3))) == [-1, 1]


def test_macaulay_examples():
    assert coeffs(char_poly_oracle(sunflower(1, 1, 3))) == [0, 0, 0, -1, 0, 0, 3, 0, 0, -3, 0, 0, 1]
    assert coeffs(char_poly_oracle(Hypermatrix.zero(3, 3))) == [0] * 12 + [1]
    res = char_poly_oracle(Hypermatrix.all_ones(3, 3))
    assert coeffs(res) == [0] * 8 + [9, -28, 30, -12, 1]
    # D' vanishes at the first samples, which are skipped
    assert res.skipped


def test_oracle_is_independent_of_sample_start():
    a = char_poly_oracle(Hypermatrix.all_ones(3, 2), start=0)
    b = char_poly_oracle(Hypermatrix.all_ones(3, 2), start=17)
    assert a.poly == b.poly


def test_degenerate_system():
    # x0 is a common zero of both forms for every lambda
    p = HomogPoly(2, 2, {(1, 1): ExactPoly([0, 1], RAT)})
    q = HomogPoly(2, 2, {(0, 2): 1})
    with pytest.raises(DegenerateSystem):
        sylvester_resultant(p, q)


def test_macaulay_guard():
    with pytest.raises(GuardError):
        macaulay_resultant(eigen_system(Hypermatrix.all_ones(5, 4)))


def test_json_roundtrip(tmp_path):
    A = Hypermatrix.adjacency(sunflower(1, 1, 3))
    assert Hypermatrix.from_json(json.loads(json.dumps(A.to_json()))) == A
    assert A.apply([1, 1, 1]) == [1, 1, 1]
    path = tmp_path / "A.json"
    path.write_text(json.dumps(A.to_json()))
    assert load_input(str(path)) == A
    H = sunflower(2, 1, 3)
    path.write_text(json.dumps(H.to_json()))
    assert load_input(str(path)) == H


def test_adjacency_entries():
    A = Hypermatrix.adjacency(sunflower(1, 1, 3))
    assert A.entries[(0, 1, 2)] == Fraction(1, 2)
    assert len(A.entries) == 6


def test_poisson_linear_example():
    assert poisson_check_binary([1, -1], [1, -2]) <= 1e-12


def test_poisson_precondition():
    with pytest.raises(ValueError):
        poisson_check_binary([1, -1], [1, 0])


def test_poisson_repeated_roots():
    with pytest.raises(RepeatedRoots):
        poisson_check_binary([1, 0, 1], [1, -2, 1])


def test_poisson_random_seeded():
    rng = np.random.default_rng(7)
    errs = []
    while len(errs) < 100:
        a, b = random_binary_pair(rng)
        try:
            errs.append(poisson_check_binary(a, b))
        except RepeatedRoots:
            continue
    assert max(errs) <= 1e-6
