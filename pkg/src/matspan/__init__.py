"""Exact linear algebra over finite fields for two-sided matrix families.

The package answers one question in several independent ways: when do the
products A^i S B^j span the whole space of rectangular matrices?  It
provides the finite field arithmetic, the exact matrix layer, the span
criteria with witnesses, product counting, and a CLI.
"""

from .errors import (
    BaseNotPrime,
    BudgetExceeded,
    DimensionMismatch,
    DivisionByZero,
    DTooSmall,
    EmbeddingUnavailable,
    FieldError,
    FieldMismatch,
    InvalidKind,
    InvalidOrder,
    LemmaViolation,
    MatSpanError,
    Not2x2,
    NotDiagonalizableCyclic,
    NotEigenvectors,
    NotIrreducible,
    NotPrime,
    NotSquare,
    Overflow,
    ParseError,
    PropositionViolation,
    SelfCheckError,
    ZeroPolynomial,
)
from .fields import Elem, Field, make_prime_field
from .polys import (
    Poly,
    canonical_field,
    compositum,
    embed,
    embed_poly,
    factor,
    is_irreducible,
    make_extension,
    poly_gcd,
    roots_in,
    smallest_irreducible,
)
from .matrices import (
    EigenData,
    EigenItem,
    Mat,
    charpoly,
    companion,
    eigen_data,
    eigen_items_in,
    embed_mat,
    hstack,
    is_cyclic,
    kron,
    left_nullspace,
    minpoly,
    poly_at_matrix,
    rank,
    right_nullspace,
    splitting_degree_over_prime,
    unvec,
    vec,
    vstack,
)
from .span import (
    SpanReport,
    Witness,
    combination_eigenvalues,
    commutator_test_2x2,
    coupling_condition,
    diagonalizable_span_dimension,
    generator_combination,
    generator_combination_matrix,
    irreducible_pair_criterion,
    pbh_test,
    products_matrix,
    span_dimension,
    span_verdict,
    spans_full,
    vandermonde_factorization_check,
)
from .counting import (
    DEFAULT_BUDGET,
    cardinality_formula,
    enumerate_products,
    outer_product_fibers,
)
from .instances import (
    Instance,
    dump_instance,
    irreducible_pair_instance,
    parse_instance,
    random_cyclic_instance,
    random_instance,
    shift_instance,
)
from .verify import SuiteResult, run_suite, run_suites, suite_names

__version__ = "0.1.0"

__all__ = [
    "BaseNotPrime", "BudgetExceeded", "DimensionMismatch", "DivisionByZero",
    "DTooSmall", "EmbeddingUnavailable", "FieldError", "FieldMismatch",
    "InvalidKind", "InvalidOrder", "LemmaViolation", "MatSpanError",
    "Not2x2", "NotDiagonalizableCyclic", "NotEigenvectors", "NotIrreducible",
    "NotPrime", "NotSquare", "Overflow", "ParseError", "PropositionViolation",
    "SelfCheckError", "ZeroPolynomial",
    "Elem", "Field", "make_prime_field",
    "Poly", "canonical_field", "compositum", "embed", "embed_poly", "factor",
    "is_irreducible", "make_extension", "poly_gcd", "roots_in",
    "smallest_irreducible",
    "EigenData", "EigenItem", "Mat", "charpoly", "companion", "eigen_data",
    "eigen_items_in", "embed_mat", "hstack", "is_cyclic", "kron",
    "left_nullspace", "minpoly", "poly_at_matrix", "rank", "right_nullspace",
    "splitting_degree_over_prime", "unvec", "vec", "vstack",
    "SpanReport", "Witness", "combination_eigenvalues", "commutator_test_2x2",
    "coupling_condition", "diagonalizable_span_dimension",
    "generator_combination", "generator_combination_matrix",
    "irreducible_pair_criterion", "pbh_test", "products_matrix",
    "span_dimension", "span_verdict", "spans_full",
    "vandermonde_factorization_check",
    "DEFAULT_BUDGET", "cardinality_formula", "enumerate_products",
    "outer_product_fibers",
    "Instance", "dump_instance", "irreducible_pair_instance",
    "parse_instance", "random_cyclic_instance", "random_instance",
    "shift_instance",
    "SuiteResult", "run_suite", "run_suites", "suite_names",
]
