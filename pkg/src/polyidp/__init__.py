"""polyidp: exact-arithmetic checks for symmetric lattice polytopes.

Core vocabulary: partitions under dominance, semistandard tableaux and
Kostka counts, Schur-polynomial supports, orbit polytopes with exact LP
membership, and theorem-level verifiers that return certified reports.
"""

from .errors import (
    EmptyInput,
    LengthExceedsAmbient,
    LetterOutOfRange,
    NoWitness,
    PreconditionViolated,
    ShapeMismatch,
    ShapeSumMismatch,
    SingularMatrix,
    SizeMismatch,
)
from .partitions import (
    Dominance,
    antichain_max,
    compare_dominance,
    dominated_by,
    enumerate_dominated,
    orbit,
    partition_sum,
    trim,
)
from .polytope import (
    Region3D,
    SymmetricPolytope,
    barycentric,
    contains,
    from_generators,
    is_2pm,
    lattice_points,
    mlp,
    region_3d,
)
from .schur import SchurSum, in_schur_support, schur_support, ts_summands, ts_support
from .tableaux import content, decompose_tableau, is_ssyt, kostka, ssyt_witness
from .verify import (
    ExploreConfig,
    Report,
    check_2pm,
    check_idp,
    check_snp,
    decompose_point,
    explore_conjecture,
    lemma41_check,
    matrix_identities,
    thm43_witness,
)

__all__ = [
    "Dominance",
    "EmptyInput",
    "ExploreConfig",
    "LengthExceedsAmbient",
    "LetterOutOfRange",
    "NoWitness",
    "PreconditionViolated",
    "Region3D",
    "Report",
    "SchurSum",
    "ShapeMismatch",
    "ShapeSumMismatch",
    "SingularMatrix",
    "SizeMismatch",
    "SymmetricPolytope",
    "antichain_max",
    "barycentric",
    "check_2pm",
    "check_idp",
    "check_snp",
    "compare_dominance",
    "contains",
    "content",
    "decompose_point",
    "decompose_tableau",
    "dominated_by",
    "enumerate_dominated",
    "explore_conjecture",
    "from_generators",
    "in_schur_support",
    "is_2pm",
    "is_ssyt",
    "kostka",
    "lattice_points",
    "lemma41_check",
    "matrix_identities",
    "mlp",
    "orbit",
    "partition_sum",
    "region_3d",
    "schur_support",
    "ssyt_witness",
    "thm43_witness",
    "trim",
    "ts_summands",
    "ts_support",
]

__version__ = "0.1.0"
