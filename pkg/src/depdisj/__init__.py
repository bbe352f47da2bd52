"""Compile-time modularization of dependent disjunctions.

Groups of same-named disjunctions over opaque base constraints are split
into the independent subgroups they factor into, so that downstream
solvers try sums of cases instead of products.
"""

from .core import AltCaseForm, AltVar, CaseForm, DependencyGroup, canonicalize, make_group
from .document import Document, parse_document, serialize_document
from .encode import decode_groups, encode_group
from .errors import (
    BadSubscope,
    DuplicateGroup,
    EmptyCaseForm,
    EmptyGroup,
    GroupTooLarge,
    InvalidToken,
    ModularizeError,
    NothingToSplit,
    ParseError,
    RaggedGroup,
    ScopeMismatch,
    ScopeOverlap,
    VerificationError,
)
from .kernels import BACKEND
from .modularize import (
    SearchStats,
    bipartitions,
    confine,
    free_combine,
    independent_split,
    modularize_case,
    modularize_group,
)

__version__ = "0.1.0"
