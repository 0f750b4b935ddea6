"""Exact univariate and sparse multivariate polynomials.

``ExactPoly`` is a dense univariate polynomial over one of three exact
domains: ``"int"``, ``"rat"`` or ``("cyc", q)`` (coefficients are
:class:`~hyperspec.cyclotomic.CycInt` with root order q).

``SparsePoly``/``HomogPoly`` are sparse multivariate polynomials whose
coefficients are themselves rational ``ExactPoly`` objects in a parameter
lambda. They carry eigen-systems such as lambda*x_i^(m-1) - (sum x_j)^(m-1).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .cyclotomic import CycInt
from .errors import DomainMismatch

__all__ = [
    "ExactPoly",
    "SparsePoly",
    "HomogPoly",
    "interpolate",
    "rou_product_transform",
    "dehomogenize",
]

INT = "int"
RAT = "rat"


def cyc(q: int) -> tuple[str, int]:
    return ("cyc", q)


def _zero(domain):
    if isinstance(domain, tuple):
        return CycInt.zero(domain[1])
    return Fraction(0) if domain == RAT else 0


def _convert(c, domain):
    if isinstance(domain, tuple):
        if isinstance(c, CycInt):
            if c.q != domain[1]:
                raise DomainMismatch(f"coefficient has q={c.q}, domain wants q={domain[1]}")
            return c
        return CycInt.from_int(domain[1], c)
    if isinstance(c, CycInt):
        c = c.rational_value()
    if domain == RAT:
        return Fraction(c)
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise ValueError(f"{c} is not an integer")
        return c.numerator
    return int(c)


def _check_domain(domain):
    if domain in (INT, RAT):
        return domain
    if isinstance(domain, tuple) and len(domain) == 2 and domain[0] == "cyc":
        return ("cyc", int(domain[1]))
    raise ValueError(f"unknown coefficient domain {domain!r}")


# Kronecker substitution: pack integer coefficient vectors into one big
# integer, multiply, unpack. Python's bigint multiply is subquadratic, so
# this beats schoolbook for the dense char-poly expansions.
def _pack(coeffs: Sequence[int], nbytes: int) -> int:
    return int.from_bytes(
        b"".join(c.to_bytes(nbytes, "little") for c in coeffs), "little"
    )


def _kronecker_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    # every product coefficient and every input coefficient fits below half
    bound = max(sum(abs(x) for x in a), 1) * max(sum(abs(y) for y in b), 1)
    nbytes = (bound.bit_length() + 2) // 8 + 1
    half = 1 << (8 * nbytes - 1)
    a_pos = _pack([x if x > 0 else 0 for x in a], nbytes)
    a_neg = _pack([-x if x < 0 else 0 for x in a], nbytes)
    b_pos = _pack([y if y > 0 else 0 for y in b], nbytes)
    b_neg = _pack([-y if y < 0 else 0 for y in b], nbytes)
    n = len(a) + len(b) - 1
    product = (a_pos - a_neg) * (b_pos - b_neg)
    offset = _pack([half] * n, nbytes)
    raw = (product + offset).to_bytes(n * nbytes, "little")
    return [
        int.from_bytes(raw[k * nbytes:(k + 1) * nbytes], "little") - half
        for k in range(n)
    ]


def _schoolbook(a: Sequence, b: Sequence, zero) -> list:
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return out


class ExactPoly:
    """Dense univariate polynomial, ``coeffs[k]`` multiplies lambda**k."""

    __slots__ = ("domain", "coeffs")

    def __init__(self, coeffs: Iterable = (), domain=INT):
        domain = _check_domain(domain)
        cs = [_convert(c, domain) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("ExactPoly is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff=1, domain=INT) -> ExactPoly:
        return cls([0] * degree + [coeff], domain)

    @classmethod
    def constant(cls, c, domain=INT) -> ExactPoly:
        return cls([c], domain)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else _zero(self.domain)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _zero(self.domain)

    def _same(self, other):
        if not isinstance(other, ExactPoly):
            try:
                return ExactPoly.constant(other, self.domain)
            except TypeError:
                return NotImplemented
        if other.domain != self.domain:
            raise DomainMismatch(f"domains differ: {self.domain} vs {other.domain}")
        return other

    def __add__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPoly((self[k] + other[k] for k in range(n)), self.domain)

    def __neg__(self):
        return ExactPoly((-c for c in self.coeffs), self.domain)

    def __sub__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    __radd__ = __add__

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if not isinstance(other, ExactPoly):
            return self.scale(other)
        other = self._same(other)
        if not self.coeffs or not other.coeffs:
            return ExactPoly((), self.domain)
        a, b = self.coeffs, other.coeffs
        if self.domain == INT and min(len(a), len(b)) > 32:
            return ExactPoly(_kronecker_mul(a, b), INT)
        if self.domain == RAT and min(len(a), len(b)) > 32:
            # clear denominators and reuse the integer path
            da = _lcm_den(a)
            db = _lcm_den(b)
            prod = _kronecker_mul([int(c * da) for c in a], [int(c * db) for c in b])
            return ExactPoly((Fraction(c, da * db) for c in prod), RAT)
        return ExactPoly(_schoolbook(a, b, _zero(self.domain)), self.domain)

    __rmul__ = __mul__

    def scale(self, c) -> ExactPoly:
        c = _convert(c, self.domain)
        return ExactPoly((x * c for x in self.coeffs), self.domain)

    def __pow__(self, e: int) -> ExactPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result = ExactPoly.constant(1, self.domain)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def eval_at(self, point):
        """Horner evaluation; ``point`` may be any ring element (int, Fraction, CycInt, complex)."""
        acc = _zero(self.domain)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    __call__ = eval_at

    def substitute_scaled(self, factor) -> ExactPoly:
        """Return p(factor * x)."""
        out, power = [], _convert(1, self.domain)
        for c in self.coeffs:
            out.append(c * power)
            power = power * factor
        return ExactPoly(out, self.domain)

    def to_domain(self, domain) -> ExactPoly:
        return ExactPoly(self.coeffs, domain)

    def monic(self) -> tuple[ExactPoly, Fraction]:
        """Return (monic polynomial over Q, discarded leading coefficient)."""
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic normalization")
        lc = Fraction(_convert(self.leading_coefficient, RAT))
        return ExactPoly((Fraction(c) / lc for c in self.to_domain(RAT).coeffs), RAT), lc

    def __eq__(self, other):
        if isinstance(other, ExactPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ExactPoly({list(self.coeffs)!r}, domain={self.domain!r})"

    def __str__(self):
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("L" if k == 1 else f"L^{k}")
            if k and c == 1:
                terms.append(mono)
            elif k and c == -1:
                terms.append("-" + mono)
            else:
                cs = f"({c})" if isinstance(c, CycInt) and not c.is_rational() else str(c)
                terms.append(cs + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def to_json(self) -> dict:
        if isinstance(self.domain, tuple):
            return {"domain": {"cyc": self.domain[1]}, "coeffs": [c.to_json() for c in self.coeffs]}
        if self.domain == RAT:
            return {
                "domain": "rat",
                "coeffs": [{"num": c.numerator, "den": c.denominator} for c in self.coeffs],
            }
        return {"domain": "int", "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: Mapping) -> ExactPoly:
        dom = data["domain"]
        if isinstance(dom, Mapping):
            q = int(dom["cyc"])
            return cls((CycInt.from_json(c) for c in data["coeffs"]), cyc(q))
        if dom == "rat":
            return cls((Fraction(int(c["num"]), int(c["den"])) for c in data["coeffs"]), RAT)
        return cls((int(c) for c in data["coeffs"]), INT)


def _lcm_den(coeffs) -> int:
    from math import lcm

    d = 1
    for c in coeffs:
        d = lcm(d, Fraction(c).denominator)
    return d


def interpolate(points: Sequence[tuple]) -> ExactPoly:
    """Unique rational polynomial of degree < len(points) through ``points``.

    Newton divided differences in exact rational arithmetic.
    """
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissae must be distinct")
    table = [Fraction(y) for _, y in points]
    n = len(xs)
    newton = [table[0]] if n else []
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(n - level)
        ]
        newton.append(table[0])
    # expand nested Newton form from the innermost coefficient outward
    result = [Fraction(0)]
    for k in range(n - 1, -1, -1):
        # result = result * (x - xs[k]) + newton[k]
        shifted = [Fraction(0)] + result
        for i, c in enumerate(result):
            shifted[i] -= c * xs[k]
        shifted[0] += newton[k]
        result = shifted
    return ExactPoly(result, RAT)


def rou_product_transform(p: ExactPoly, r: int) -> ExactPoly:
    """Return prod_{j=0}^{r-1} p(zeta_r^j x) by direct substitution.

    Integer input gives integer output (the product is Galois invariant and
    this is checked); cyclotomic input must already use root order r.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if isinstance(p.domain, tuple):
        if p.domain[1] != r:
            raise DomainMismatch(f"cyclotomic order {p.domain[1]} differs from r={r}")
        lifted = p
    elif p.domain == INT:
        lifted = p.to_domain(cyc(r))
    else:
        raise DomainMismatch("rou_product_transform needs integer or cyclotomic input")
    result = ExactPoly.constant(1, cyc(r))
    for j in range(r):
        result = result * lifted.substitute_scaled(CycInt.zeta(r, j))
    if p.domain == INT:
        return result.to_domain(INT)
    return result


# ---------------------------------------------------------------------------
# sparse multivariate polynomials with lambda-polynomial coefficients
# ---------------------------------------------------------------------------

def _lam(c) -> ExactPoly:
    if isinstance(c, ExactPoly):
        return c if c.domain == RAT else c.to_domain(RAT)
    return ExactPoly.constant(c, RAT)


class SparsePoly:
    """Polynomial in ``num_vars`` variables; coefficients are rational polys in lambda."""

    def __init__(self, num_vars: int, terms: Mapping[tuple, object] | None = None):
        self.num_vars = num_vars
        clean: dict[tuple, ExactPoly] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != num_vars or min(exps, default=0) < 0:
                raise ValueError(f"bad exponent vector {exps} for {num_vars} variables")
            c = _lam(c)
            if exps in clean:
                c = clean[exps] + c
            if c.is_zero():
                clean.pop(exps, None)
            else:
                clean[exps] = c
        self.terms = clean

    @classmethod
    def variable(cls, num_vars: int, i: int):
        exps = [0] * num_vars
        exps[i] = 1
        return cls(num_vars, {tuple(exps): 1})

    @classmethod
    def lam(cls, num_vars: int):
        """The constant polynomial lambda."""
        return cls(num_vars, {(0,) * num_vars: ExactPoly([0, 1], RAT)})

    def _wrap(self, terms):
        return SparsePoly(self.num_vars, terms)

    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            return other
        return self._wrap({(0,) * self.num_vars: other})

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return self._wrap({e: c for e, c in terms.items() if not c.is_zero()})

    def __neg__(self):
        return self._wrap({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    __radd__ = __add__

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            return self._wrap({e: c * _lam(other) for e, c in self.terms.items()})
        out: dict[tuple, ExactPoly] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                out[e] = out[e] + c if e in out else c
        return self._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = self._wrap({(0,) * self.num_vars: 1})
        for _ in range(k):
            result = result * self
        return result

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def lambda_degree(self) -> int:
        return max((c.degree for c in self.terms.values()), default=0)

    def at_lambda(self, t) -> dict[tuple, Fraction]:
        """Specialize lambda = t; returns exponent -> value with zeros dropped."""
        out = {}
        for e, c in self.terms.items():
            v = c.eval_at(Fraction(t))
            if v:
                out[e] = v
        return out

    def evaluate(self, lam, point: Sequence):
        """Evaluate at lambda=lam and x=point (any ring with +, *, **)."""
        acc = 0
        for e, c in self.terms.items():
            term = c.eval_at(lam) if not isinstance(lam, (int, Fraction)) else c.eval_at(Fraction(lam))
            for x, k in zip(point, e):
                if k:
                    term = term * x**k
            acc = acc + term
        return acc

    def substitute(self, k: int, value) -> SparsePoly:
        """Set variable k to ``value`` (0 or 1) and drop it."""
        if not 0 <= k < self.num_vars:
            raise IndexError(f"variable index {k} out of range")
        out: dict[tuple, ExactPoly] = {}
        for e, c in self.terms.items():
            if e[k] and value == 0:
                continue
            factor = Fraction(value) ** e[k]
            ne = e[:k] + e[k + 1:]
            c = c.scale(factor)
            out[ne] = out[ne] + c if ne in out else c
        return SparsePoly(self.num_vars - 1, {e: c for e, c in out.items() if not c.is_zero()})

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.num_vars == other.num_vars and self.terms == other.terms
        return NotImplemented

    def __repr__(self):
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i}^{k}" if k > 1 else f"x{i}" for i, k in enumerate(e) if k)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts) or "0"


class HomogPoly(SparsePoly):
    """Homogeneous ``SparsePoly`` of fixed total degree."""

    def __init__(self, num_vars: int, degree: int, terms: Mapping[tuple, object] | None = None):
        super().__init__(num_vars, terms)
        for e in self.terms:
            if sum(e) != degree:
                raise ValueError(f"monomial {e} does not have degree {degree}")
        self.degree = degree

    @classmethod
    def from_sparse(cls, p: SparsePoly) -> HomogPoly:
        if not p.is_homogeneous():
            raise ValueError("polynomial is not homogeneous")
        return cls(p.num_vars, p.total_degree, p.terms)

    def __repr__(self):
        return f"HomogPoly(deg={self.degree}: {super().__repr__()})"


def dehomogenize(F: HomogPoly, k: int, value: int) -> SparsePoly:
    """Substitute x_k = value (0 gives the homogeneous F-bar, 1 the affine f)."""
    if value not in (0, 1):
        raise ValueError("dehomogenization value must be 0 or 1")
    out = F.substitute(k, value)
    if value == 0:
        return HomogPoly(out.num_vars, F.degree, out.terms)
    return out
