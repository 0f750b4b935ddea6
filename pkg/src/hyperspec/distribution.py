"""Spectral measures of the all-ones hypermatrix J_n^m.

nu_n puts mass (multiplicity / total degree) on every eigenvalue. The exact
route reads multiplicities off :func:`~hyperspec.spectra.all_ones_charpoly`;
the closed-form route (m = 2..5) evaluates explicit binomial/multinomial
walk-count formulas over lattice parameters (a, b) and never touches the
walk tables, so the two are independent checks of each other.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .cyclotomic import CycInt
from .errors import InvariantError
from .spectra import all_ones_charpoly
from .walks import multinomial, walk_counts

__all__ = [
    "SpectralMeasure",
    "exact_measure",
    "closed_form_measure",
    "closed_form_mass_xy",
    "moment_check",
    "clt_probe",
    "emit_scatter",
    "normal_cdf",
]


@dataclass(frozen=True)
class SpectralMeasure:
    n: int
    m: int
    atoms: Mapping[CycInt, Fraction]

    def __post_init__(self):
        if any(v <= 0 for v in self.atoms.values()):
            raise InvariantError("spectral measure masses must be positive")
        if self.atoms and sum(self.atoms.values()) != 1:
            raise InvariantError(f"masses sum to {sum(self.atoms.values())}, not 1")

    def mass(self, value) -> Fraction:
        if not isinstance(value, CycInt):
            value = CycInt.from_int(self.m - 1, value)
        return self.atoms.get(value, Fraction(0))

    def sorted_atoms(self) -> list[tuple[CycInt, Fraction]]:
        return sorted(self.atoms.items(), key=lambda kv: kv[0].coeffs)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "atoms": [
                {"value": v.to_json(), "mass": {"num": p.numerator, "den": p.denominator}}
                for v, p in self.sorted_atoms()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> SpectralMeasure:
        atoms = {
            CycInt.from_json(a["value"]): Fraction(int(a["mass"]["num"]), int(a["mass"]["den"]))
            for a in data["atoms"]
        }
        return cls(int(data["n"]), int(data["m"]), atoms)


def exact_measure(n: int, m: int) -> SpectralMeasure:
    """nu_n from the factored characteristic polynomial.

    The factored form is built from walk tables without expansion, so the
    dense-expansion degree guard does not apply here.
    """
    f = all_ones_charpoly(n, m, max_degree=math.inf)
    total = f.total_degree
    atoms: dict[CycInt, Fraction] = {}
    zero = CycInt.zero(m - 1)
    if f.lambda_exponent:
        atoms[zero] = Fraction(f.lambda_exponent, total)
    for fac in f.factors:
        atoms[fac.c] = atoms.get(fac.c, Fraction(0)) + Fraction(fac.mult, total)
    return SpectralMeasure(n, m, atoms)


def _binom(n: int, k) -> int:
    """C(n, k), zero for non-integral or out-of-range k."""
    k = Fraction(k)
    if k.denominator != 1 or not 0 <= k <= n:
        return 0
    return math.comb(n, int(k))


def _closed_form_atoms(n: int, m: int):
    """Yield (eigenvalue, mass) for every nonzero walk endpoint parameter."""
    if m == 2:
        yield CycInt.from_int(1, n), Fraction(1, n)
    elif m == 3:
        # endpoint a on Z, eigenvalue a^2
        for a in range(-n, n + 1):
            if a:
                mass = Fraction(2 * _binom(n, Fraction(n + a, 2)), 2**n * n)
                yield CycInt.from_int(2, a * a), mass
    elif m == 4:
        # endpoint (a + b sqrt(-3))/2 = (a+b)/2 + b zeta_3, a = b mod 2
        for a in range(-2 * n, 2 * n + 1):
            for b in range(-2 * n, 2 * n + 1):
                if (a - b) % 2 or (a, b) == (0, 0):
                    continue
                count = multinomial(
                    n,
                    (Fraction(n + a, 3), Fraction(2 * n - a + 3 * b, 6), Fraction(2 * n - a - 3 * b, 6)),
                )
                w = CycInt(3, ((a + b) // 2, b))
                yield w**3, Fraction(3 * count, 3**n * n)
    elif m == 5:
        # endpoint a + b i
        for a in range(-n, n + 1):
            for b in range(-n, n + 1):
                if (a, b) == (0, 0):
                    continue
                count = _binom(n, Fraction(n + a + b, 2)) * _binom(n, Fraction(n - a + b, 2))
                yield CycInt(4, (a, b)) ** 4, Fraction(4 * count, 4**n * n)
    else:
        raise ValueError("closed forms exist for m in {2, 3, 4, 5}")


def _closed_form_zero_walks(n: int, m: int) -> Fraction:
    """Probability that the n-step walk returns to 0."""
    if m == 2:
        return Fraction(0)
    if m == 3:
        return Fraction(_binom(n, Fraction(n, 2)), 2**n)
    if m == 4:
        third = Fraction(n, 3)
        return Fraction(multinomial(n, (third, third, third)), 3**n)
    return Fraction(_binom(n, Fraction(n, 2)) ** 2, 4**n)


def closed_form_measure(n: int, m: int) -> SpectralMeasure:
    """nu_n for m in {2,3,4,5} from explicit walk-count formulas.

    Every endpoint in a rotation orbit maps to the same eigenvalue and must
    carry the same formula mass; a mismatch raises InvariantError.
    """
    if m not in (2, 3, 4, 5):
        raise ValueError("closed forms exist for m in {2, 3, 4, 5}")
    atoms: dict[CycInt, Fraction] = {}
    for xi, mass in _closed_form_atoms(n, m):
        if not mass:
            continue
        if xi in atoms and atoms[xi] != mass:
            raise InvariantError(f"closed form assigns {atoms[xi]} and {mass} to {xi}")
        atoms[xi] = mass
    zero_mass = Fraction(n - 1, n) + _closed_form_zero_walks(n, m) / n
    if zero_mass:
        atoms[CycInt.zero(m - 1)] = zero_mass
    return SpectralMeasure(n, m, atoms)


def closed_form_mass_xy(n: int, m: int, x: int, y: int = 0) -> Fraction:
    """Closed-form mass queried by the (x, y) coordinates used for each m.

    m = 2, 3: the integer x. m = 4: the point (x + y sqrt(-3))/2 with
    x = y (mod 2). m = 5: the Gaussian integer x + y i.
    """
    if m in (2, 3):
        if y:
            return Fraction(0)
        value = CycInt.from_int(m - 1, x)
    elif m == 4:
        if (x - y) % 2:
            return Fraction(0)
        value = CycInt(3, ((x + y) // 2, y))
    elif m == 5:
        value = CycInt(4, (x, y))
    else:
        raise ValueError("closed forms exist for m in {2, 3, 4, 5}")
    return closed_form_measure(n, m).mass(value)


def _rational(z: CycInt, what: str) -> Fraction:
    if not z.is_rational():
        raise InvariantError(f"{what} is not rational: {z}")
    return Fraction(z.rational_value())


def moment_check(n: int, m: int) -> tuple[Fraction, Fraction, Fraction]:
    """Exact (E[Re X^2], E[Im X^2], E[Re X Im X]) for the n-step walk endpoint X.

    Uses E[|X|^2] and E[X^2] computed in Q(zeta_q): Re and Im of E[X^2] are
    obtained through conjugation, so no floating point enters.
    """
    q = m - 1
    if q < 3:
        raise ValueError("second-moment identity needs m - 1 >= 3")
    table = walk_counts(n, q)
    total = q**n
    sq = CycInt.zero(q)
    absq = CycInt.zero(q)
    for w, c in table.counts.items():
        sq = sq + (w * w) * c
        absq = absq + (w * w.conj()) * c
    e_sq = sq / total
    e_abs = _rational(absq / total, "E|X|^2")
    re_part = _rational((e_sq + e_sq.conj()) / 2, "Re E[X^2]")
    # i * Im E[X^2]
    im_times_i = (e_sq - e_sq.conj()) / 2
    if im_times_i.is_zero():
        im_part = Fraction(0)
    else:
        im_sq = -_rational(im_times_i * im_times_i, "Im(E[X^2])^2")
        root_num, root_den = math.isqrt(im_sq.numerator), math.isqrt(im_sq.denominator)
        if root_num**2 != im_sq.numerator or root_den**2 != im_sq.denominator:
            raise InvariantError("Im E[X^2] is irrational")
        im_part = Fraction(root_num, root_den)
        if im_times_i.embed().imag < 0:
            im_part = -im_part
    return (e_abs + re_part) / 2, (e_abs - re_part) / 2, im_part / 2


def normal_cdf(x: float, variance: float = 0.5) -> float:
    """Normal distribution function with mean 0 (erfc-based, ~1e-15 accuracy)."""
    return 0.5 * math.erfc(-x / math.sqrt(2.0 * variance))


def real_part_distribution(n: int, m: int) -> list[tuple[float, Fraction]]:
    """Sorted (value, probability) atoms of Re(X_n) / sqrt(n)."""
    q = m - 1
    table = walk_counts(n, q)
    total = q**n
    grouped: dict[CycInt, int] = {}
    for w, c in table.counts.items():
        re = (w + w.conj()) / 2  # canonical element of the real subfield
        grouped[re] = grouped.get(re, 0) + c
    scale = math.sqrt(n) if n else 1.0
    atoms = [(re.embed().real / scale, Fraction(c, total)) for re, c in grouped.items()]
    atoms.sort()
    return atoms


def clt_probe(n: int, m: int) -> float:
    """Sup distance between the law of Re(X_n)/sqrt(n) and N(0, 1/2)."""
    if m - 1 < 3:
        raise ValueError("probe needs m - 1 >= 3")
    worst = 0.0
    cdf = 0.0
    for x, p in real_part_distribution(n, m):
        phi = normal_cdf(x)
        worst = max(worst, abs(cdf - phi))
        cdf += float(p)
        worst = max(worst, abs(cdf - phi))
    return worst


def emit_scatter(measure: SpectralMeasure, scaled: bool = False) -> str:
    """CSV with columns re, im, mass; ``scaled`` divides atoms by sqrt(n)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["re", "im", "mass"])
    scale = math.sqrt(measure.n) if scaled else 1.0
    rows = []
    for value, mass in measure.atoms.items():
        z = value.embed() / scale
        rows.append((z.real + 0.0, z.imag + 0.0, float(mass)))
    for re, im, mass in sorted(rows):
        writer.writerow([repr(re), repr(im), repr(mass)])
    return buf.getvalue()
