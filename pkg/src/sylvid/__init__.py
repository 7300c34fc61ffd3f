"""
Exact verification of Sylvester's determinantal identity and its generalizations.

All arithmetic is over Python integers and :class:`fractions.Fraction`;
every identity is checked in cross-multiplied form, so no check ever
divides by a possibly vanishing determinant.
"""

from .determinants import (
    REFERENCE_CAP,
    Division,
    EliminationTrace,
    det_bareiss,
    det_reference,
    extended_minor,
    leading_minor,
    minor_det,
)
from .errors import (
    BoundsError,
    CapacityError,
    CertificationError,
    ConfigurationError,
    DomainError,
    MatrixFormatError,
    PivotError,
    ShapeError,
    SylvidError,
)
from .fraction_free import GrowthStats, bareiss_certified, growth_report, growth_tsv
from .identities import *  # noqa: F401,F403
from .identities import __all__ as _identities_all
from .indexlists import (
    PairClass,
    PermutationWithSign,
    enumerate_permutations,
    inversions,
    list_complement,
    list_difference,
    list_intersection,
    list_union,
    pairclass_arrow,
)
from .matrix import ExactMatrix, format_matrix, parse_matrix, read_matrix, submatrix, write_matrix

__version__ = "0.1.0"

__all__ = [
    "ExactMatrix",
    "submatrix",
    "parse_matrix",
    "format_matrix",
    "read_matrix",
    "write_matrix",
    "REFERENCE_CAP",
    "det_reference",
    "det_bareiss",
    "minor_det",
    "extended_minor",
    "leading_minor",
    "Division",
    "EliminationTrace",
    "PairClass",
    "PermutationWithSign",
    "enumerate_permutations",
    "inversions",
    "list_union",
    "list_intersection",
    "list_difference",
    "list_complement",
    "pairclass_arrow",
    "bareiss_certified",
    "growth_report",
    "growth_tsv",
    "GrowthStats",
    "SylvidError",
    "ShapeError",
    "BoundsError",
    "DomainError",
    "CapacityError",
    "ConfigurationError",
    "PivotError",
    "CertificationError",
    "MatrixFormatError",
    *_identities_all,
]
