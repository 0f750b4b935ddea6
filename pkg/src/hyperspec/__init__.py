"""Exact characteristic polynomials and spectral measures of hypermatrices.

The package covers cyclotomic integer arithmetic, exact polynomials, root of
unity walk enumeration, closed-form factored characteristic polynomials for
all-ones hypermatrices and sunflower hypergraphs, a brute-force resultant
oracle, and the induced spectral measures.
"""

__version__ = "0.1.0"

from .cyclotomic import CycInt  # noqa: E402
from .distribution import SpectralMeasure, closed_form_measure, exact_measure  # noqa: E402
from .errors import GuardError, InvariantError  # noqa: E402
from .polynomial import ExactPoly  # noqa: E402
from .resultants import Hypergraph, Hypermatrix, char_poly_oracle  # noqa: E402
from .spectra import FactoredCharPoly, all_ones_charpoly, expand, sunflower_charpoly  # noqa: E402
from .walks import walk_counts  # noqa: E402

__all__ = [
    "CycInt",
    "ExactPoly",
    "Hypermatrix",
    "Hypergraph",
    "FactoredCharPoly",
    "SpectralMeasure",
    "GuardError",
    "InvariantError",
    "all_ones_charpoly",
    "sunflower_charpoly",
    "expand",
    "char_poly_oracle",
    "exact_measure",
    "closed_form_measure",
    "walk_counts",
]
