"""Doppler-resilient complementary sequence sets over finite fields.

Builds five families of complementary sequence sets from trace sequences
and column-orthogonal root-of-unity matrices, and verifies their
ambiguity-function peaks, lower-bound optimality factors, and per-column
multicarrier PAPR by exhaustive desk-scale computation.
"""

from .ambiguity import (
    AFSurface,
    MetricsReport,
    af_surface,
    bound_eq2,
    bound_lemma1,
    cross_af,
    eq2_zx_minimum,
    metrics,
    optimality_factor,
    set_af,
)
from .constructions import (
    CONSTRUCTORS,
    ComplementaryMatrix,
    SequenceSet,
    construct,
    construct_t1,
    construct_t2,
    construct_t3,
    construct_t4,
    construct_t5,
)
from .finite_field import (
    ExtensionTower,
    FieldElement,
    FiniteField,
    PhiMap,
    abs_trace,
    find_primitive,
    make_field,
    phi_default,
    write_m_sequence_csv,
)
from .orthomatrix import (
    OrthoMatrix,
    OrthogonalityReport,
    PaprReport,
    character_matrix,
    dft_matrix,
    example_matrix_q5,
    max_column_papr,
    papr,
    validate_orthogonality,
)

__version__ = "0.1.0"

__all__ = [
    "AFSurface",
    "ComplementaryMatrix",
    "CONSTRUCTORS",
    "ExtensionTower",
    "FieldElement",
    "FiniteField",
    "MetricsReport",
    "OrthoMatrix",
    "OrthogonalityReport",
    "PaprReport",
    "PhiMap",
    "SequenceSet",
    "abs_trace",
    "af_surface",
    "bound_eq2",
    "bound_lemma1",
    "character_matrix",
    "construct",
    "construct_t1",
    "construct_t2",
    "construct_t3",
    "construct_t4",
    "construct_t5",
    "cross_af",
    "dft_matrix",
    "eq2_zx_minimum",
    "example_matrix_q5",
    "find_primitive",
    "make_field",
    "max_column_papr",
    "metrics",
    "optimality_factor",
    "papr",
    "phi_default",
    "set_af",
    "validate_orthogonality",
    "write_m_sequence_csv",
]
