"""Balanced-partition combinatorics for equivariant Hilbert schemes of the plane.

The package computes Betti numbers, Poincare polynomials, Euler
characteristics and motivic classes of the equivariant Hilbert schemes
attached to cyclic subgroups of GL2, entirely through the combinatorics
of colored Young diagrams, and mechanically verifies the periodicity
and quasipolynomiality of these invariants in the group order at desk
scale.
"""

from .abacus import (
    Abacus,
    MultiPartition,
    from_abacus,
    from_core_quotient,
    has_empty_core,
    runners,
    to_abacus,
)
from .analysis import (
    Quasipolynomial,
    check_rectangle_bijection,
    fit_quasipolynomial,
    hj_expand,
    multipartition_count,
    normalize_group,
    rectangle_map,
    satisfies_star,
    verify_quasipolynomial,
)
from .coloring import (
    GroupParams,
    WeightVector,
    color,
    enumerate_balanced,
    is_balanced,
    weight_vector,
)
from .errors import (
    AmbiguousQuotientError,
    EnumerationLimitError,
    EqhilbError,
    InsufficientSamplesError,
    InvariantViolationError,
    NotNCoreError,
    PreconditionError,
    UnbalancedPartitionError,
)
from .partitions import Box, Partition, diagram, partitions_of
from .stabilization import (
    SplitContext,
    diagonal,
    make_split,
    phi,
    psi,
    psi_inverse,
    verify_period,
)
from .tangent import (
    Arrow,
    LPolynomial,
    betti_statistic,
    cotangent_weights,
    distinguished_arrows,
    invariant_arrows,
    is_lex_positive,
    l_class,
)

__all__ = [
    "Abacus",
    "AmbiguousQuotientError",
    "Arrow",
    "Box",
    "EnumerationLimitError",
    "EqhilbError",
    "GroupParams",
    "InsufficientSamplesError",
    "InvariantViolationError",
    "LPolynomial",
    "MultiPartition",
    "NotNCoreError",
    "Partition",
    "PreconditionError",
    "Quasipolynomial",
    "SplitContext",
    "UnbalancedPartitionError",
    "WeightVector",
    "betti_statistic",
    "check_rectangle_bijection",
    "color",
    "cotangent_weights",
    "diagonal",
    "diagram",
    "distinguished_arrows",
    "enumerate_balanced",
    "fit_quasipolynomial",
    "from_abacus",
    "from_core_quotient",
    "has_empty_core",
    "hj_expand",
    "invariant_arrows",
    "is_balanced",
    "is_lex_positive",
    "l_class",
    "make_split",
    "multipartition_count",
    "normalize_group",
    "partitions_of",
    "phi",
    "psi",
    "psi_inverse",
    "rectangle_map",
    "runners",
    "satisfies_star",
    "to_abacus",
    "verify_period",
    "verify_quasipolynomial",
    "weight_vector",
]
