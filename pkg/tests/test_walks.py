import itertools
import math
from collections import Counter

import pytest

from hyperspec.cyclotomic import CycInt
from hyperspec.errors import GuardError
from hyperspec.walks import multinomial, walk_counts


def brute_force(n, q):
    out = Counter()
    for steps in itertools.product(range(q), repeat=n):
        s = CycInt.zero(q)
        for j in steps:
            s = s + CycInt.zeta(q, j)
        out[s] += 1
    return out


def test_examples():
    t = walk_counts(2, 2)
    assert dict(t.counts) == {CycInt.from_int(2, 2): 1, CycInt.zero(2): 2, CycInt.from_int(2, -2): 1}
    t = walk_counts(2, 3)
    assert t.total() == 9
    for j in range(3):
        assert t.counts[CycInt.zeta(3, j) * 2] == 1
        assert t.counts[-CycInt.zeta(3, j)] == 2
    for q in (1, 2, 5):
        assert dict(walk_counts(0, q).counts) == {CycInt.zero(q): 1}


@pytest.mark.parametrize("n,q", [(3, 3), (4, 4), (3, 5), (4, 6), (2, 7)])
def test_matches_brute_force(n, q):
    assert dict(walk_counts(n, q).counts) == brute_force(n, q)


def test_totals_and_orbits():
    t = walk_counts(5, 4)
    assert t.total() == 4**5
    orbits = t.orbit_totals()
    assert sum(orbits.values()) == 4**5
    for rep in orbits:
        assert rep.orbit_canonical()[0] == rep


def test_guard():
    with pytest.raises(GuardError):
        walk_counts(6, 5, max_endpoints=10)
    with pytest.raises(ValueError):
        walk_counts(-1, 3)


def test_csv():
    lines = walk_counts(1, 2).to_csv().splitlines()
    assert lines[0] == "re,im,count"
    assert len(lines) == 3


def test_multinomial():
    assert multinomial(4, (2, 2)) == 6
    assert multinomial(2, (1, 1, 0)) == 2
    assert multinomial(3, (1, 1, 2)) == 0
    assert multinomial(3, (-1, 4)) == 0
    assert multinomial(40, (10, 10, 20)) == math.factorial(40) // (
        math.factorial(10) ** 2 * math.factorial(20)
    )
