"""Brute-force resultant oracle for hypermatrix characteristic polynomials.

Eigen-systems F_i = lambda*x_i^(m-1) - (A x^(m-1))_i are built from sparse
hypermatrices or hypergraphs, and their resultant in lambda is recovered by
evaluation-interpolation: at integer samples lambda = t the coefficient
matrices are exact rational, so determinants are computed fraction-free and
the polynomial is interpolated back. Two variables use the Sylvester matrix;
three or more use the Macaulay quotient D/D'.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

import numpy as np

from .errors import DegenerateSystem, GuardError, InsufficientSamples, RepeatedRoots
from .linalg import rational_det
from .polynomial import RAT, ExactPoly, HomogPoly, interpolate

__all__ = [
    "Hypermatrix",
    "Hypergraph",
    "ResultantResult",
    "sunflower",
    "eigen_system",
    "sylvester_resultant",
    "macaulay_resultant",
    "macaulay_quotient_at",
    "char_poly_oracle",
    "evaluate_system",
    "poisson_check_binary",
    "random_binary_pair",
    "MACAULAY_MAX_MONOMIALS",
]

MACAULAY_MAX_MONOMIALS = 500


# ---------------------------------------------------------------------------
# data types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Hypermatrix:
    """Sparse order-m, dimension-n array with rational entries."""

    m: int
    n: int
    entries: Mapping[tuple, Fraction] = field(repr=False)

    def __post_init__(self):
        if self.m < 2 or self.n < 1:
            raise ValueError("need order m >= 2 and dimension n >= 1")
        clean = {}
        for idx, val in self.entries.items():
            idx = tuple(int(i) for i in idx)
            if len(idx) != self.m or not all(0 <= i < self.n for i in idx):
                raise ValueError(f"index {idx} out of range for order {self.m}, dim {self.n}")
            val = Fraction(val)
            if val:
                clean[idx] = clean.get(idx, 0) + val
        object.__setattr__(self, "entries", clean)

    @classmethod
    def all_ones(cls, n: int, m: int) -> Hypermatrix:
        return cls(m, n, {idx: Fraction(1) for idx in itertools.product(range(n), repeat=m)})

    @classmethod
    def zero(cls, n: int, m: int) -> Hypermatrix:
        return cls(m, n, {})

    @classmethod
    def adjacency(cls, graph: Hypergraph) -> Hypermatrix:
        """Adjacency hypermatrix with entries 1/(k-1)! on every edge ordering."""
        k = graph.k
        val = Fraction(1, math.factorial(k - 1))
        entries = {}
        for edge in graph.edges:
            for perm in itertools.permutations(edge):
                entries[perm] = val
        return cls(k, graph.vertices, entries)

    def is_all_ones(self) -> bool:
        return len(self.entries) == self.n**self.m and all(v == 1 for v in self.entries.values())

    def apply(self, x: Sequence):
        """The vector (A x^(m-1))_i, in whatever ring the entries of x live."""
        out = [0] * self.n
        for idx, val in self.entries.items():
            term = val
            for j in idx[1:]:
                term = term * x[j]
            out[idx[0]] = out[idx[0]] + term
        return out

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "entries": [
                {"idx": list(idx), "val": {"num": v.numerator, "den": v.denominator}}
                for idx, v in sorted(self.entries.items())
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Hypermatrix:
        entries = {}
        for e in data["entries"]:
            v = e["val"]
            if isinstance(v, Mapping):
                v = Fraction(int(v["num"]), int(v["den"]))
            entries[tuple(e["idx"])] = Fraction(v)
        return cls(int(data["m"]), int(data["n"]), entries)


@dataclass(frozen=True)
class Hypergraph:
    """k-uniform hypergraph on vertices 0..vertices-1."""

    vertices: int
    k: int
    edges: tuple

    def __post_init__(self):
        edges = []
        for e in self.edges:
            e = tuple(sorted(int(v) for v in e))
            if len(set(e)) != self.k or len(e) != self.k:
                raise ValueError(f"edge {e} is not a set of {self.k} distinct vertices")
            if not all(0 <= v < self.vertices for v in e):
                raise ValueError(f"edge {e} has a vertex outside 0..{self.vertices - 1}")
            edges.append(e)
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edges")
        object.__setattr__(self, "edges", tuple(edges))

    def to_json(self) -> dict:
        return {"vertices": self.vertices, "k": self.k, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: Mapping) -> Hypergraph:
        return cls(int(data["vertices"]), int(data["k"]), tuple(tuple(e) for e in data["edges"]))


def sunflower(n: int, q: int, k: int) -> Hypergraph:
    """Sunflower with n petals: seeds 0..q-1, petal i uses the next k-q vertices."""
    if n < 1 or not 0 < q < k:
        raise ValueError("sunflower needs n >= 1 and 0 < q < k")
    seeds = tuple(range(q))
    width = k - q
    edges = tuple(
        seeds + tuple(range(q + i * width, q + (i + 1) * width)) for i in range(n)
    )
    return Hypergraph(q + n * width, k, edges)


def load_input(path: str) -> Hypermatrix | Hypergraph:
    """Read a hypergraph or hypermatrix JSON file (distinguished by its keys)."""
    with open(path) as fh:
        data = json.load(fh)
    if "entries" in data:
        return Hypermatrix.from_json(data)
    return Hypergraph.from_json(data)


# ---------------------------------------------------------------------------
# eigen-systems
# ---------------------------------------------------------------------------

def eigen_system(A: Hypermatrix | Hypergraph) -> list[HomogPoly]:
    """F_i = lambda*x_i^(m-1) - sum_j A[i, j_2..j_m] x_{j_2}...x_{j_m}."""
    if isinstance(A, Hypergraph):
        A = Hypermatrix.adjacency(A)
    n, deg = A.n, A.m - 1
    rows: list[dict[tuple, Fraction]] = [{} for _ in range(n)]
    for idx, val in A.entries.items():
        exps = [0] * n
        for j in idx[1:]:
            exps[j] += 1
        key = tuple(exps)
        row = rows[idx[0]]
        row[key] = row.get(key, 0) - val
    system = []
    lam = ExactPoly([0, 1], RAT)
    for i, row in enumerate(rows):
        terms: dict[tuple, ExactPoly] = {e: ExactPoly([c], RAT) for e, c in row.items() if c}
        diag = tuple(deg if j == i else 0 for j in range(n))
        terms[diag] = terms.get(diag, ExactPoly([], RAT)) + lam
        system.append(HomogPoly(n, deg, terms))
    return system


def evaluate_system(system: Sequence[HomogPoly], lam, x: Sequence) -> list:
    """Evaluate each form at (lam, x); works over any ring supporting + and *."""
    deg = max(F.degree for F in system)
    powers = []
    for v in x:
        row = [1, v]
        for _ in range(deg - 1):
            row.append(row[-1] * v)
        powers.append(row)
    if isinstance(lam, (int, Fraction)):
        lam = Fraction(lam)
    # coefficient polynomials repeat heavily (e.g. all-ones systems), so
    # evaluate each distinct one once
    coeff_values: dict = {}
    out = []
    for F in system:
        acc = 0
        for exps, c in F.terms.items():
            term = coeff_values.get(c.coeffs)
            if term is None:
                term = c.eval_at(lam)
                if isinstance(term, Fraction) and term.denominator == 1:
                    term = term.numerator
                coeff_values[c.coeffs] = term
            for j, k in enumerate(exps):
                if k:
                    term = term * powers[j][k]
            acc = acc + term
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# resultants by evaluation-interpolation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ResultantResult:
    """Monic resultant in lambda plus normalization metadata."""

    poly: ExactPoly
    raw_leading: Fraction
    samples: tuple
    skipped: tuple = ()

    @property
    def leading_sign(self) -> int:
        return 1 if self.raw_leading > 0 else -1

    def int_coeffs(self) -> list[int]:
        out = []
        for c in self.poly.coeffs:
            c = Fraction(c)
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            out.append(c.numerator)
        return out


def _binary_coeffs(F: HomogPoly, t) -> list[Fraction]:
    """Coefficients of F(x0, x1) at lambda=t, highest x0 power first."""
    vals = F.at_lambda(t)
    return [vals.get((F.degree - k, k), Fraction(0)) for k in range(F.degree + 1)]


def sylvester_matrix(a: Sequence, b: Sequence) -> list[list]:
    """Sylvester matrix of two coefficient lists (highest x0 power first)."""
    da, db = len(a) - 1, len(b) - 1
    size = da + db
    rows = []
    for i in range(db):
        rows.append([0] * i + list(a) + [0] * (size - da - 1 - i))
    for i in range(da):
        rows.append([0] * i + list(b) + [0] * (size - db - 1 - i))
    return rows


def _finish(points, skipped) -> ResultantResult:
    raw = interpolate(points)
    if raw.is_zero():
        raise DegenerateSystem("resultant vanishes identically: the system has a common zero")
    monic, lc = raw.monic()
    return ResultantResult(monic, lc, tuple(t for t, _ in points), tuple(skipped))


def sylvester_resultant(p: HomogPoly, q: HomogPoly, start: int = 0) -> ResultantResult:
    """Resultant of two binary forms as a monic polynomial in lambda."""
    if p.num_vars != 2 or q.num_vars != 2:
        raise ValueError("Sylvester resultant needs binary forms")
    bound = p.lambda_degree() * q.degree + q.lambda_degree() * p.degree
    points = []
    for t in range(start, start + bound + 1):
        mat = sylvester_matrix(_binary_coeffs(p, t), _binary_coeffs(q, t))
        points.append((t, rational_det(mat)))
    return _finish(points, ())


def _monomials(num_vars: int, degree: int) -> Iterator[tuple]:
    # graded reverse-lexicographic enumeration, deterministic
    for bars in itertools.combinations(range(degree + num_vars - 1), num_vars - 1):
        prev, exps = -1, []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(degree + num_vars - 2 - prev)
        yield tuple(exps)


@dataclass(frozen=True)
class _MacaulayLayout:
    monomials: tuple
    row_source: tuple  # (poly index, multiplier exponents) per monomial
    nonreduced: tuple  # positions of monomials divisible by two or more x_i^d_i


def _macaulay_layout(degrees: Sequence[int]) -> _MacaulayLayout:
    N = len(degrees)
    d = sum(di - 1 for di in degrees) + 1
    count = math.comb(d + N - 1, N - 1)
    if count > MACAULAY_MAX_MONOMIALS:
        raise GuardError(f"Macaulay matrix would have {count} > {MACAULAY_MAX_MONOMIALS} rows")
    monos = tuple(_monomials(N, d))
    sources, nonreduced = [], []
    for pos, alpha in enumerate(monos):
        divisible = [i for i in range(N) if alpha[i] >= degrees[i]]
        i = divisible[0]
        mult = tuple(a - (degrees[i] if j == i else 0) for j, a in enumerate(alpha))
        sources.append((i, mult))
        if len(divisible) >= 2:
            nonreduced.append(pos)
    return _MacaulayLayout(monos, tuple(sources), tuple(nonreduced))


def macaulay_quotient_at(system: Sequence[HomogPoly], t) -> tuple[Fraction, Fraction]:
    """(D(t), D'(t)) for the Macaulay matrix of ``system`` at lambda = t."""
    layout = _macaulay_layout([F.degree for F in system])
    return _macaulay_dets(system, layout, t)


def _macaulay_dets(system, layout: _MacaulayLayout, t) -> tuple[Fraction, Fraction]:
    col = {mono: j for j, mono in enumerate(layout.monomials)}
    specialized = [F.at_lambda(t) for F in system]
    size = len(layout.monomials)
    matrix = []
    for i, mult in layout.row_source:
        row = [Fraction(0)] * size
        for exps, c in specialized[i].items():
            row[col[tuple(a + b for a, b in zip(exps, mult))]] = c
        matrix.append(row)
    D = rational_det(matrix)
    keep = layout.nonreduced
    D_minor = rational_det([[matrix[r][c] for c in keep] for r in keep])
    return D, D_minor


def macaulay_resultant(
    system: Sequence[HomogPoly], start: int = 0, max_extra: int | None = None
) -> ResultantResult:
    """Resultant of N >= 3 homogeneous forms via the Macaulay quotient D/D'.

    Samples with D'(t) = 0 are skipped and replaced by the next integer.
    """
    N = len(system)
    if N < 3:
        raise ValueError("Macaulay construction is used for three or more variables")
    if any(F.num_vars != N for F in system):
        raise ValueError("system must have as many forms as variables")
    degrees = [F.degree for F in system]
    layout = _macaulay_layout(degrees)
    bound = sum(
        F.lambda_degree() * math.prod(d for j, d in enumerate(degrees) if j != i)
        for i, F in enumerate(system)
    )
    if max_extra is None:
        max_extra = bound + 10
    points, skipped = [], []
    t = start
    while len(points) < bound + 1:
        if len(skipped) > max_extra:
            raise InsufficientSamples(
                f"only {len(points)} of {bound + 1} samples had a nonzero minor"
            )
        D, Dp = _macaulay_dets(system, layout, t)
        if Dp == 0:
            skipped.append(t)
        else:
            points.append((t, D / Dp))
        t += 1
    return _finish(points, skipped)


def char_poly_oracle(A: Hypermatrix | Hypergraph, start: int = 0) -> ResultantResult:
    """Characteristic polynomial from first principles (Sylvester or Macaulay)."""
    system = eigen_system(A)
    if len(system) == 1:
        # one variable: Res(c * x^d) = c
        (F,) = system
        return _finish([(t, F.at_lambda(t).get((F.degree,), Fraction(0))) for t in (start, start + 1)], ())
    if len(system) == 2:
        return sylvester_resultant(*system, start=start)
    return macaulay_resultant(system, start=start)


# ---------------------------------------------------------------------------
# numeric product-formula check for binary forms
# ---------------------------------------------------------------------------

def _as_float_coeffs(F) -> np.ndarray:
    if isinstance(F, HomogPoly):
        if F.lambda_degree() > 0:
            raise ValueError("numeric check needs lambda-free forms")
        return np.array([float(c) for c in _binary_coeffs(F, 0)])
    return np.asarray(F, dtype=float)


def poisson_check_binary(F0, F1, root_sep: float = 1e-6) -> float:
    """Relative error between Res(F0, F1) and the product-formula side.

    Forms are given as coefficient sequences, highest power of x0 first
    (or as lambda-free binary ``HomogPoly``). The right-hand side is
    Res(F1(0, x1))^d0 * prod f0(p) over roots p of f1(x1) = F1(1, x1).
    """
    a = _as_float_coeffs(F0)
    b = _as_float_coeffs(F1)
    d0 = len(a) - 1
    lead = b[-1]  # coefficient of x1^d1, i.e. F1 with x0 = 0
    if lead == 0:
        raise ValueError("Res(F1-bar) = 0: the x1^d1 coefficient of F1 vanishes")
    lhs = float(np.linalg.det(np.array(sylvester_matrix(a, b), dtype=float)))
    roots = np.roots(b[::-1])
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if abs(roots[i] - roots[j]) < root_sep:
                raise RepeatedRoots("f1 has (nearly) repeated roots")
    f0 = np.polynomial.polynomial.polyval(roots, a)
    rhs = lead**d0 * np.prod(f0)
    return float(abs(lhs - rhs) / max(abs(lhs), 1.0))


def random_binary_pair(rng: np.random.Generator, d0: int = 2, d1: int = 3, bound: int = 5):
    """Random integer binary forms satisfying the product-formula precondition."""
    while True:
        a = rng.integers(-bound, bound + 1, size=d0 + 1)
        b = rng.integers(-bound, bound + 1, size=d1 + 1)
        if b[-1] == 0 or not a.any():
            continue
        return a.astype(float), b.astype(float)
