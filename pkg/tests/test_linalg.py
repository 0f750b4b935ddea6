import random
from fractions import Fraction

import sympy

from hyperspec.linalg import bareiss_det, rational_det


def test_small():
    assert bareiss_det([]) == 1
    assert bareiss_det([[5]]) == 5
    assert bareiss_det([[1, 2], [3, 4]]) == -2
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[1, 2], [2, 4]]) == 0


def test_against_sympy():
    rng = random.Random(11)
    for size in range(1, 8):
        for _ in range(5):
            mat = [[rng.randint(-6, 6) if rng.random() < 0.7 else 0 for _ in range(size)] for _ in range(size)]
            assert bareiss_det(mat) == sympy.Matrix(mat).det()


def test_rational():
    mat = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), 1]]
    assert rational_det(mat) == Fraction(1, 2) - Fraction(1, 12)
