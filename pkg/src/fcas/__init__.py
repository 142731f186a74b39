"""fcas: exact symbolic verification of a hypersurface curvature classification.

The package re-derives, with exact polynomial arithmetic, every displayed
algebraic step of the classification argument for hypersurfaces of
5-dimensional pseudo-Euclidean space whose mean curvature vector satisfies
the eigenvalue condition Laplacian(H) = lambda * H with diagonal shape
operator, and the biharmonic (lambda = 0) specialization.  Derived
polynomials are compared against checked-in golden transcriptions of the
displayed equations; heavy eliminations are certified by modular
specialization probes instead of full expansion.
"""

__version__ = "0.1.0"

from .poly import (  # noqa: F401
    Polynomial,
    VarTable,
    STANDARD_VARS,
    SIGN_NAMES,
    MINUS_INFINITY,
    parse,
    format_poly,
    to_bytes,
    from_bytes,
)
