"""Exact-arithmetic toolkit for lens-space surgery obstructions:
d-invariants, Alexander-polynomial enumeration, plumbing-lattice oracles,
GF(2) surgery-triangle algebra, and machine-checkable L-space certificates.
"""

from .exactnum import (
    INFINITY,
    farey_parents,
    format_slope,
    hj_eval,
    hj_expand,
    parse_slope,
    rational_reduce,
)
from .lensdi import (
    DInvariantCache,
    DInvariantTable,
    LensSpace,
    conj_label,
    d_rec,
    d_table,
    froy_closed_form,
    grading_diff,
    lens_normalize,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "rational_reduce",
    "hj_expand",
    "hj_eval",
    "farey_parents",
    "format_slope",
    "parse_slope",
    "LensSpace",
    "lens_normalize",
    "conj_label",
    "d_rec",
    "d_table",
    "froy_closed_form",
    "grading_diff",
    "DInvariantTable",
    "DInvariantCache",
    "__version__",
]
