"""Closed-form characteristic polynomials and eigenvectors.

Multiplicities for the all-ones hypermatrix J_n^m come from walk counts:
a nonzero eigenvalue xi has multiplicity equal to the number of n-step
(m-1)-th-root-of-unity walks ending at an (m-1)-th root of xi, divided by
m-1. Walks ending at 0 contribute, in the same way, to the eigenvalue 0 on
top of the lambda^((n-1)(m-1)^(n-1)) prefactor.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .cyclotomic import CycInt
from .errors import GuardError, InvariantError
from .polynomial import INT, ExactPoly, cyc
from .resultants import Hypermatrix, eigen_system, evaluate_system
from .walks import walk_counts

__all__ = [
    "Factor",
    "FactoredCharPoly",
    "all_ones_charpoly",
    "all_ones_spectrum_set",
    "zero_charpoly",
    "sunflower_charpoly",
    "expand",
    "all_ones_eigenvector",
    "sunflower_variety_point",
    "sunflower_f0",
    "residual",
    "exact_residuals",
    "petal_feasibility",
    "MAX_TOTAL_DEGREE",
]

MAX_TOTAL_DEGREE = 10**6


@dataclass(frozen=True)
class Factor:
    """(lambda^d - c)^mult."""

    d: int
    c: CycInt
    mult: int

    def sort_key(self):
        return (self.d, self.c.coeffs)

    def to_json(self) -> dict:
        return {"d": self.d, "c": self.c.to_json(), "mult": self.mult}


@dataclass(frozen=True)
class FactoredCharPoly:
    total_degree: int
    lambda_exponent: int
    factors: tuple[Factor, ...]

    def __post_init__(self):
        keys = [(f.d, f.c) for f in self.factors]
        if len(set(keys)) != len(keys):
            raise InvariantError("duplicate (d, c) factor keys")
        if any(f.mult <= 0 or f.d <= 0 for f in self.factors):
            raise InvariantError("factor degrees and multiplicities must be positive")
        degree = self.lambda_exponent + sum(f.d * f.mult for f in self.factors)
        if degree != self.total_degree:
            raise InvariantError(f"factors give degree {degree}, expected {self.total_degree}")

    @property
    def q(self) -> int:
        return self.factors[0].c.q if self.factors else 1

    def multiplicity_total(self) -> int:
        return sum(f.mult for f in self.factors)

    def to_json(self) -> dict:
        return {
            "total_degree": self.total_degree,
            "lambda_exp": self.lambda_exponent,
            "factors": [f.to_json() for f in self.factors],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> FactoredCharPoly:
        factors = tuple(
            Factor(int(f["d"]), CycInt.from_json(f["c"]), int(f["mult"])) for f in data["factors"]
        )
        return cls(int(data["total_degree"]), int(data["lambda_exp"]), factors)

    def __str__(self):
        parts = [f"L^{self.lambda_exponent}"] if self.lambda_exponent else []
        for f in self.factors:
            base = "L" if f.d == 1 else f"L^{f.d}"
            c = f.c
            inner = base if c.is_zero() else f"{base} - ({c})"
            parts.append(f"({inner})" + (f"^{f.mult}" if f.mult > 1 else ""))
        return "*".join(parts) or "1"


def _sorted_factors(factors) -> tuple[Factor, ...]:
    return tuple(sorted(factors, key=Factor.sort_key))


def _guard(total: int, max_degree: int) -> None:
    if total > max_degree:
        raise GuardError(f"total degree {total} exceeds the guard of {max_degree}")


def all_ones_charpoly(n: int, m: int, max_degree: int = MAX_TOTAL_DEGREE) -> FactoredCharPoly:
    """Factored characteristic polynomial of the all-ones hypermatrix J_n^m."""
    if n < 1 or m < 2:
        raise ValueError("need n >= 1 and m >= 2")
    q = m - 1
    total = n * q ** (n - 1)
    _guard(total, max_degree)
    table = walk_counts(n, q)
    mults: dict[CycInt, int] = {}
    for rep, count in table.orbit_totals().items():
        if count % q:
            raise InvariantError(f"orbit count {count} at {rep} is not divisible by {q}")
        xi = rep**q
        mults[xi] = mults.get(xi, 0) + count // q
    factors = [Factor(1, xi, k) for xi, k in mults.items()]
    return FactoredCharPoly(total, (n - 1) * q ** (n - 1), _sorted_factors(factors))


def all_ones_spectrum_set(n: int, m: int) -> set[CycInt]:
    f = all_ones_charpoly(n, m)
    return {fac.c for fac in f.factors} | {CycInt.zero(m - 1)}


def zero_charpoly(N: int, m: int, max_degree: int = MAX_TOTAL_DEGREE) -> FactoredCharPoly:
    total = N * (m - 1) ** (N - 1)
    _guard(total, max_degree)
    return FactoredCharPoly(total, total, ())


def sunflower_charpoly(n: int, max_degree: int = MAX_TOTAL_DEGREE) -> FactoredCharPoly:
    """lambda^((2n-2) 4^n) * prod_{r=0}^{n} (lambda^3 - r)^(C(n,r) 3^r) for S(n,1,3).

    The r = 0 factor is kept as (lambda^3 - 0) rather than merged into the
    lambda power.
    """
    if n < 1:
        raise ValueError("need at least one petal")
    total = (2 * n + 1) * 4**n
    _guard(total, max_degree)
    factors = [Factor(3, CycInt.from_int(2, r), math.comb(n, r) * 3**r) for r in range(n + 1)]
    return FactoredCharPoly(total, (2 * n - 2) * 4**n, _sorted_factors(factors))


def _galois_units(q: int) -> list[int]:
    return [k for k in range(1, max(q, 2)) if math.gcd(k, q) == 1] or [1]


def expand(f: FactoredCharPoly, direct: bool = False) -> ExactPoly:
    """Multiply out a factored characteristic polynomial over the integers.

    Factors are grouped into Galois orbits of their constants; each orbit
    product is formed over Z[zeta_q] and must come out with rational-integer
    coefficients. Orbit products are then raised to their multiplicity and
    multiplied with integer (Kronecker) arithmetic. ``direct=True`` instead
    multiplies every factor in Z[zeta_q] one at a time, which is only viable
    for small degrees.
    """
    q = f.q
    if direct:
        acc = ExactPoly.monomial(f.lambda_exponent, 1, cyc(q))
        for fac in f.factors:
            lin = ExactPoly.monomial(fac.d, 1, cyc(q)) - ExactPoly.constant(fac.c, cyc(q))
            acc = acc * lin**fac.mult
        return _to_int(acc)

    by_key = {(fac.d, fac.c): fac.mult for fac in f.factors}
    seen = set()
    pieces = [ExactPoly.monomial(f.lambda_exponent, 1, INT)]
    for fac in f.factors:
        key = (fac.d, fac.c)
        if key in seen:
            continue
        orbit = []
        for k in _galois_units(q):
            c = fac.c.galois(k) if q > 1 else fac.c
            if c not in orbit:
                orbit.append(c)
        block = ExactPoly.constant(1, cyc(q))
        for c in orbit:
            seen.add((fac.d, c))
            if by_key.get((fac.d, c)) != fac.mult:
                raise InvariantError(
                    f"conjugate eigenvalues {fac.c} and {c} have different multiplicities;"
                    " expansion would not have integer coefficients"
                )
            block = block * (ExactPoly.monomial(fac.d, 1, cyc(q)) - ExactPoly.constant(c, cyc(q)))
        pieces.append(_to_int(block) ** fac.mult)
    # balanced product tree keeps operand sizes even
    while len(pieces) > 1:
        pieces.sort(key=lambda p: p.degree)
        nxt = [pieces[i] * pieces[i + 1] for i in range(0, len(pieces) - 1, 2)]
        if len(pieces) % 2:
            nxt.append(pieces[-1])
        pieces = nxt
    result = pieces[0]
    if result.degree != f.total_degree or result.leading_coefficient != 1:
        raise InvariantError("expanded polynomial is not monic of the expected degree")
    return result


def _to_int(p: ExactPoly) -> ExactPoly:
    out = []
    for k, c in enumerate(p.coeffs):
        if not c.is_rational():
            raise InvariantError(f"coefficient of L^{k} is not a rational integer: {c}")
        out.append(c.rational_value())
    return ExactPoly(out, INT)


# ---------------------------------------------------------------------------
# eigenvectors and variety points
# ---------------------------------------------------------------------------

def all_ones_eigenvector(n: int, m: int, pattern: Sequence[int]) -> tuple[CycInt, tuple[CycInt, ...]]:
    """Eigenpair x_i = zeta^pattern[i], xi = (sum_i x_i)^(m-1)."""
    if len(pattern) != n:
        raise ValueError(f"pattern must have length {n}")
    q = m - 1
    x = tuple(CycInt.zeta(q, j) for j in pattern)
    s = CycInt.zero(q)
    for xi in x:
        s = s + xi
    return s**q, x


_ZETA3 = cmath.exp(2j * math.pi / 3)


def sunflower_variety_point(n: int, lam: complex, choices: Sequence[int]) -> list[complex]:
    """Point of the affine petal variety for S(n,1,3) at lambda = lam.

    Choice 0 gives x_{i,1} = 0; choice t >= 1 gives x_{i,1} = zeta_3^(t-1)/lam.
    In every case x_{i,2} = lam * x_{i,1}^2. Output order is
    (x_{1,1}, x_{1,2}, ..., x_{n,1}, x_{n,2}).
    """
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    if len(choices) != n or any(c not in (0, 1, 2, 3) for c in choices):
        raise ValueError(f"need {n} petal choices from {{0, 1, 2, 3}}")
    point = []
    for c in choices:
        x1 = 0j if c == 0 else _ZETA3 ** (c - 1) / lam
        point.extend([x1, lam * x1 * x1])
    return point


def sunflower_f0(lam: complex, point: Sequence[complex]) -> complex:
    """f_0 = lambda - sum_i x_{i,1} x_{i,2} at a petal point (seed set to 1)."""
    return lam - sum(point[2 * i] * point[2 * i + 1] for i in range(len(point) // 2))


def sunflower_petal_residual(lam: complex, point: Sequence[complex]) -> float:
    """max |lam x_{i,1}^2 - x_{i,2}|, |lam x_{i,2}^2 - x_{i,1}| over petals."""
    worst = 0.0
    for i in range(len(point) // 2):
        a, b = point[2 * i], point[2 * i + 1]
        worst = max(worst, abs(lam * a * a - b), abs(lam * b * b - a))
    return worst


def exact_residuals(A: Hypermatrix, lam, x: Sequence, system=None) -> list:
    """Values F_i(lam, x) of the eigen-system; exact when the inputs are CycInt.

    Pass a precomputed ``system`` to avoid rebuilding it for many vectors.
    """
    if len(x) != A.n:
        raise ValueError("vector length does not match the hypermatrix dimension")
    if system is None:
        system = eigen_system(A)
    return evaluate_system(system, lam, x)


def residual(A: Hypermatrix, lam, x: Sequence, system=None) -> float:
    """max_i |lam x_i^(m-1) - (A x^(m-1))_i| in floating point."""
    xs = [v.embed() if isinstance(v, CycInt) else complex(v) for v in x]
    lam = lam.embed() if isinstance(lam, CycInt) else complex(lam)
    return max(abs(v) for v in exact_residuals(A, lam, xs, system))


def petal_feasibility(k: int) -> tuple[int, int, bool]:
    """Per-petal solution count k^(k-2)+1 versus the (k-1)^(k-1) the product formula needs."""
    have = k ** (k - 2) + 1
    need = (k - 1) ** (k - 1)
    return have, need, have == need
