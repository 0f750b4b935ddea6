"""Exact endpoint distributions of walks whose steps are q-th roots of unity."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Sequence

from .cyclotomic import CycInt
from .errors import GuardError

__all__ = ["WalkTable", "walk_counts", "multinomial", "DEFAULT_MAX_ENDPOINTS"]

DEFAULT_MAX_ENDPOINTS = 10**7


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / prod(parts!), or 0 unless ``parts`` are naturals summing to n.

    Non-integral parts (e.g. Fractions from closed-form indices) also give 0.
    """
    ks = []
    for p in parts:
        if isinstance(p, float) and not p.is_integer():
            return 0
        if hasattr(p, "denominator") and p.denominator != 1:
            return 0
        p = int(p)
        if p < 0:
            return 0
        ks.append(p)
    if sum(ks) != n:
        return 0
    result, remaining = 1, n
    for k in ks:
        result *= math.comb(remaining, k)
        remaining -= k
    return result


@dataclass(frozen=True)
class WalkTable:
    """Endpoint -> number of n-step walks with steps zeta_q^j."""

    n: int
    q: int
    counts: Mapping[CycInt, int] = field(repr=False)

    def total(self) -> int:
        return sum(self.counts.values())

    def orbit_totals(self) -> dict[CycInt, int]:
        """Canonical orbit representative -> total walk count into that orbit."""
        out: dict[CycInt, int] = {}
        for w, c in self.counts.items():
            rep, _ = w.orbit_canonical()
            out[rep] = out.get(rep, 0) + c
        return out

    def __len__(self):
        return len(self.counts)

    def rows(self) -> list[tuple[float, float, int]]:
        """(re, im, count) rows sorted by the embedded endpoint."""
        rows = []
        for w, c in self.counts.items():
            z = w.embed()
            rows.append((z.real, z.imag, c))
        rows.sort()
        return rows

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["re", "im", "count"])
        for re, im, c in self.rows():
            writer.writerow([repr(re), repr(im), c])
        return buf.getvalue()


def walk_counts(n: int, q: int, max_endpoints: int = DEFAULT_MAX_ENDPOINTS) -> WalkTable:
    """Count n-step walks by endpoint, exactly.

    Dynamic programming over canonical coefficient tuples: each round
    convolves the current endpoint table with the q unit steps.
    """
    if n < 0 or q < 1:
        raise ValueError("need n >= 0 and q >= 1")
    steps = [CycInt.zeta(q, j).coeffs for j in range(q)]
    current: dict[tuple, int] = {CycInt.zero(q).coeffs: 1}
    for _ in range(n):
        nxt: dict[tuple, int] = {}
        for pos, c in current.items():
            for s in steps:
                key = tuple(a + b for a, b in zip(pos, s))
                nxt[key] = nxt.get(key, 0) + c
        if len(nxt) > max_endpoints:
            raise GuardError(
                f"{len(nxt)} distinct endpoints exceeds the guard of {max_endpoints}"
            )
        current = nxt
    counts = {CycInt(q, k): c for k, c in current.items()}
    return WalkTable(n, q, MappingProxyType(counts))
