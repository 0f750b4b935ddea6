"""Exact arithmetic in the cyclotomic integers Z[zeta_q].

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(q)-1) after
reduction modulo the q-th cyclotomic polynomial, so that ring equality is
tuple equality. Coefficients are Python ints; Fractions are accepted as well,
which gives exact arithmetic in the fraction field Q(zeta_q) when needed.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DomainMismatch

__all__ = [
    "CycInt",
    "cyclotomic_polynomial",
    "totient",
    "reduce",
    "rotate",
    "orbit_canonical",
    "embed",
]


def totient(q: int) -> int:
    result = q
    p, n = 2, q
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _polydiv_exact(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic; coefficient lists are low-degree first
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            out[k - dn] = c
            for i, d in enumerate(den):
                num[k - dn + i] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(q: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the q-th cyclotomic polynomial.

    Computed by dividing x^q - 1 by Phi_d for every proper divisor d of q.
    """
    if q < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (q - 1) + [1]
    for d in range(1, q):
        if q % d == 0:
            poly = _polydiv_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(q: int) -> tuple[tuple[int, ...], ...]:
    """Canonical coefficient vectors of zeta^j for 0 <= j < 2q."""
    phi = cyclotomic_polynomial(q)
    dim = len(phi) - 1
    table = []
    cur = [1] + [0] * (dim - 1)
    for _ in range(2 * q):
        table.append(tuple(cur))
        # multiply by zeta and reduce the overflow term with Phi_q
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:dim])]
    return tuple(table)


def _norm(c):
    if type(c) is int:
        return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _check_q(q: int) -> None:
    if not isinstance(q, int) or q < 1:
        raise ValueError(f"cyclotomic order must be a positive integer, got {q!r}")


def _reduce_vector(vec: Sequence, q: int) -> tuple:
    table = _power_table(q)
    dim = len(table[0])
    out = [0] * dim
    period = len(table)
    for j, c in enumerate(vec):
        if c:
            row = table[j % q] if j >= period else table[j]
            for i in range(dim):
                if row[i]:
                    out[i] += c * row[i]
    return tuple(_norm(c) for c in out)


class CycInt:
    """Element of Z[zeta_q] (or Q(zeta_q)) in canonical power-basis form."""

    __slots__ = ("q", "coeffs")

    def __init__(self, q: int, coeffs: Iterable):
        _check_q(q)
        coeffs = tuple(_norm(c) for c in coeffs)
        if len(coeffs) != totient(q):
            raise ValueError(
                f"expected {totient(q)} coefficients for q={q}, got {len(coeffs)}"
            )
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CycInt is immutable")

    @classmethod
    def _make(cls, q: int, coeffs: tuple) -> CycInt:
        # trusted fast path: q checked, coeffs normalized, length correct
        obj = object.__new__(cls)
        object.__setattr__(obj, "q", q)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_int(cls, q: int, value) -> CycInt:
        return cls(q, (value,) + (0,) * (totient(q) - 1))

    @classmethod
    def zero(cls, q: int) -> CycInt:
        return cls.from_int(q, 0)

    @classmethod
    def one(cls, q: int) -> CycInt:
        return cls.from_int(q, 1)

    @classmethod
    def zeta(cls, q: int, j: int = 1) -> CycInt:
        _check_q(q)
        return cls(q, _power_table(q)[j % q])

    # -- coercion -----------------------------------------------------------
    def _coerce(self, other) -> CycInt:
        if isinstance(other, CycInt):
            if other.q != self.q:
                raise DomainMismatch(f"cyclotomic orders differ: {self.q} vs {other.q}")
            return other
        if isinstance(other, (int, Rational)):
            return CycInt.from_int(self.q, other)
        return NotImplemented

    # -- ring operations ----------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt._make(self.q, tuple(_norm(a + b) for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt._make(self.q, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt._make(self.q, tuple(_norm(a - b) for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return CycInt._make(self.q, tuple(_norm(a * other) for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        conv = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return CycInt._make(self.q, _reduce_vector(conv, self.q))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return CycInt(self.q, (Fraction(a) / other for a in self.coeffs))
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a natural number")
        result = CycInt.one(self.q)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # -- orbit and Galois structure -----------------------------------------
    def power_vector(self) -> list:
        """Length-q vector v with self = sum v[j] zeta^j (non-canonical lift)."""
        return list(self.coeffs) + [0] * (self.q - len(self.coeffs))

    def rotate(self, j: int) -> CycInt:
        """Return zeta^j * self."""
        j %= self.q
        if j == 0:
            return self
        vec = [0] * (2 * self.q)
        for i, c in enumerate(self.coeffs):
            vec[i + j] = c
        return CycInt(self.q, _reduce_vector(vec, self.q))

    def galois(self, k: int) -> CycInt:
        """Apply the automorphism zeta -> zeta^k (k coprime to q)."""
        if math.gcd(k, self.q) != 1:
            raise ValueError(f"{k} is not a unit modulo {self.q}")
        vec = [0] * self.q
        for i, c in enumerate(self.coeffs):
            vec[(i * k) % self.q] += c
        return CycInt(self.q, _reduce_vector(vec, self.q))

    def conj(self) -> CycInt:
        """Complex conjugate under the standard embedding."""
        return self.galois(-1 % self.q) if self.q > 2 else self

    def orbit_canonical(self) -> tuple[CycInt, int]:
        """Lexicographically least rotation of self and the orbit size."""
        if self.is_zero():
            return self, 1
        rep = min((self.rotate(j) for j in range(self.q)), key=lambda c: c.coeffs)
        return rep, self.q

    # -- predicates and projections -----------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self):
        """The rational value of self; raises ValueError if self is irrational."""
        if not self.is_rational():
            raise ValueError(f"{self!r} is not a rational number")
        return self.coeffs[0]

    def embed(self) -> complex:
        """Floating-point value under zeta -> exp(2 pi i / q).

        The error is bounded by roughly 8 ulp times sum(|coeffs|).
        """
        roots = _embedded_roots(self.q)
        return complex(sum(float(c) * roots[j] for j, c in enumerate(self.coeffs)))

    # -- dunder plumbing ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycInt):
            return self.q == other.q and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.q, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CycInt(q={self.q}, coeffs={list(self.coeffs)})"

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                z = "z" if j == 1 else f"z^{j}"
                terms.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def to_json(self) -> dict:
        return {"q": self.q, "coeffs": [_coeff_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> CycInt:
        return cls(int(data["q"]), [_coeff_from_json(c) for c in data["coeffs"]])


def _coeff_to_json(c):
    if isinstance(c, Fraction):
        return {"num": c.numerator, "den": c.denominator}
    return int(c)


def _coeff_from_json(c):
    if isinstance(c, dict):
        return _norm(Fraction(int(c["num"]), int(c["den"])))
    return int(c)


@lru_cache(maxsize=None)
def _embedded_roots(q: int) -> tuple[complex, ...]:
    return tuple(cmath.exp(2j * math.pi * k / q) for k in range(q))


# functional aliases mirroring the operation names
def reduce(power_coeffs: Sequence, q: int) -> CycInt:
    """Canonical form of sum power_coeffs[j] * zeta_q^j."""
    _check_q(q)
    if len(power_coeffs) != q:
        raise ValueError(f"expected {q} power coefficients, got {len(power_coeffs)}")
    return CycInt(q, _reduce_vector(power_coeffs, q))


def rotate(a: CycInt, j: int) -> CycInt:
    return a.rotate(j)


def orbit_canonical(a: CycInt) -> tuple[CycInt, int]:
    return a.orbit_canonical()


def embed(a: CycInt) -> complex:
    return a.embed()
