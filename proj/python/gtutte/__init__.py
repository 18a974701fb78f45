"""Tutte polynomials, G-invariants and freedom matroids.

Polynomials are ``Poly`` objects; coefficients come back as ``fractions.Fraction``.
Bit sequences are plain strings such as ``"10110"``.
"""

import os as _os

from ._core import (
    Poly,
    basis,
    dominates,
    express,
    g_invariant,
    g_invariant_bases,
    gamma_matrix,
    girth,
    is_join_irreducible,
    is_meet_irreducible,
    relations,
    sequences,
    sp,
    span_dimension,
    suite_names,
    tutte,
    tutte_bases,
    tutte_uniform,
)
from ._core import verify as _verify

_PACKAGED_DATA = _os.path.join(_os.path.dirname(__file__), "data")


def verify(suite, data_dir=None, **kwargs):
    """Run a verification suite and return its JSON report as a dict."""
    if data_dir is None:
        data_dir = _os.environ.get("GTUTTE_DATA_DIR", "")
        if not data_dir and _os.path.isdir(_PACKAGED_DATA):
            data_dir = _PACKAGED_DATA
    return _verify(suite, data_dir, **kwargs)


__all__ = [
    "Poly",
    "basis",
    "dominates",
    "express",
    "g_invariant",
    "g_invariant_bases",
    "gamma_matrix",
    "girth",
    "is_join_irreducible",
    "is_meet_irreducible",
    "relations",
    "sequences",
    "sp",
    "span_dimension",
    "suite_names",
    "tutte",
    "tutte_bases",
    "tutte_uniform",
    "verify",
]
