import itertools
import json

import pytest

from hyperspec.cyclotomic import CycInt
from hyperspec.errors import GuardError, InvariantError
from hyperspec.polynomial import ExactPoly
from hyperspec.resultants import Hypermatrix, char_poly_oracle, eigen_system
from hyperspec.spectra import (
    Factor,
    FactoredCharPoly,
    all_ones_charpoly,
    all_ones_eigenvector,
    all_ones_spectrum_set,
    exact_residuals,
    expand,
    petal_feasibility,
    residual,
    sunflower_charpoly,
    sunflower_f0,
    sunflower_petal_residual,
    sunflower_variety_point,
    zero_charpoly,
)

L = ExactPoly.monomial(1)


def factor_map(f):
    return {(fac.d, fac.c): fac.mult for fac in f.factors}


def test_all_ones_examples():
    f = all_ones_charpoly(2, 3)
    assert f.lambda_exponent == 2
    assert factor_map(f) == {(1, CycInt.zero(2)): 1, (1, CycInt.from_int(2, 4)): 1}
    assert expand(f) == L**3 * (L - 4)
    assert expand(all_ones_charpoly(3, 2)) == L**2 * (L - 3)
    f = all_ones_charpoly(2, 4)
    assert f.total_degree == 6
    assert expand(f) == L**3 * (L - 8) * (L + 1) ** 2
    for m in (2, 3, 4, 5, 6):
        assert expand(all_ones_charpoly(1, m)) == L - 1


def test_spectrum_sets():
    as_ints = lambda s: {z.rational_value() for z in s}
    assert as_ints(all_ones_spectrum_set(2, 3)) == {0, 4}
    assert as_ints(all_ones_spectrum_set(2, 2)) == {0, 2}
    assert as_ints(all_ones_spectrum_set(2, 4)) == {0, 8, -1}


def test_zero_charpoly():
    assert zero_charpoly(4, 3).lambda_exponent == 4 * 2**3
    assert expand(zero_charpoly(1, 2)) == L
    assert expand(zero_charpoly(3, 3)) == L**12


def test_sunflower_charpoly():
    f = sunflower_charpoly(1)
    assert f.lambda_exponent == 0 and f.total_degree == 12
    assert expand(f) == L**3 * (L**3 - 1) ** 3
    f = sunflower_charpoly(2)
    assert f.total_degree == 80 and f.lambda_exponent == 32
    assert factor_map(f) == {
        (3, CycInt.from_int(2, 0)): 1,
        (3, CycInt.from_int(2, 1)): 6,
        (3, CycInt.from_int(2, 2)): 9,
    }


def test_guards():
    with pytest.raises(GuardError):
        all_ones_charpoly(12, 5)
    with pytest.raises(GuardError):
        sunflower_charpoly(12)
    with pytest.raises(ValueError):
        all_ones_charpoly(0, 3)


def test_factored_invariants():
    with pytest.raises(InvariantError):
        FactoredCharPoly(3, 1, (Factor(1, CycInt.one(2), 1),))
    with pytest.raises(InvariantError):
        FactoredCharPoly(2, 0, (Factor(1, CycInt.one(2), 1), Factor(1, CycInt.one(2), 1)))


def test_json_roundtrip():
    for f in (all_ones_charpoly(3, 5), sunflower_charpoly(2), zero_charpoly(2, 3)):
        assert FactoredCharPoly.from_json(json.loads(json.dumps(f.to_json()))) == f


@pytest.mark.parametrize("n,m", [(2, 5), (3, 4), (4, 5), (3, 7), (2, 9)])
def test_galois_expansion_matches_direct(n, m):
    f = all_ones_charpoly(n, m)
    assert expand(f) == expand(f, direct=True)


def test_unbalanced_conjugates_rejected():
    q = 3
    f = FactoredCharPoly(
        3, 0, (Factor(1, CycInt.zeta(q), 1), Factor(1, CycInt.zeta(q, 2), 2))
    )
    with pytest.raises(InvariantError):
        expand(f)


@pytest.mark.parametrize("n,m", [(2, 2), (3, 2), (2, 3), (2, 4), (2, 5)])
def test_closed_form_matches_oracle(n, m):
    assert expand(all_ones_charpoly(n, m)).coeffs == tuple(char_poly_oracle(Hypermatrix.all_ones(n, m)).int_coeffs())


def test_eigenvector_examples():
    xi, x = all_ones_eigenvector(2, 3, (0, 0))
    assert xi == 4 and x == (1, 1)
    xi, x = all_ones_eigenvector(2, 3, (0, 1))
    assert xi == 0 and x == (1, -1)
    xi, _ = all_ones_eigenvector(3, 4, (0, 1, 2))
    assert xi == 0


@pytest.mark.parametrize("n,m", [(2, 3), (3, 4), (3, 5), (4, 4)])
def test_eigenvectors_exact(n, m):
    A = Hypermatrix.all_ones(n, m)
    system = eigen_system(A)
    for pattern in itertools.product(range(m - 1), repeat=n):
        xi, x = all_ones_eigenvector(n, m, pattern)
        assert all(r == 0 for r in exact_residuals(A, xi, x, system))
        assert residual(A, xi, x, system) <= 1e-9


def test_residual_examples():
    A = Hypermatrix.all_ones(2, 3)
    assert residual(A, 4, (1, 1)) == 0
    assert residual(A, 5, (1, 1)) == 1


def test_variety_points():
    p = sunflower_variety_point(1, 1, (1,))
    assert p == [1, 1]
    assert sunflower_f0(1, p) == 0
    p = sunflower_variety_point(2, 5, (0, 0))
    assert sunflower_f0(5, p) == 5
    p = sunflower_variety_point(1, 1, (2,))
    assert abs(p[0] * p[1] - 1) < 1e-12
    for lam in (1, 2, 1 + 1j):
        for choices in itertools.product(range(4), repeat=3):
            p = sunflower_variety_point(3, lam, choices)
            r = sum(1 for c in choices if c)
            assert sunflower_petal_residual(lam, p) <= 1e-12
            assert abs(sunflower_f0(lam, p) - (lam**3 - r) / lam**2) <= 1e-12
    with pytest.raises(ValueError):
        sunflower_variety_point(1, 0, (1,))


def test_petal_feasibility():
    assert petal_feasibility(3) == (4, 4, True)
    assert petal_feasibility(4) == (17, 27, False)
    assert petal_feasibility(2) == (2, 1, False)
