"""
Двойное пространство Фока типа B: векторы, симметризатор, операторы, спектры
"""

from .vectors import FockVector, Word, expand_vector, free_inner_product
from .symmetrizer import (
    r_terms,
    symmetrizer_terms,
    apply_R,
    apply_symmetrizer,
    apply_symmetrizer_recursive,
    inner_product,
)
from .operators import (
    creation,
    free_annihilation,
    annihilation,
    annihilation_closed_parts,
    annihilation_closed,
    free_gauge,
    gauge,
    gauge_closed_parts,
    gauge_closed,
    poisson_apply,
    apply_factors,
    vacuum_expectation_oracle,
)
from .spectral import (
    r_matrix,
    symmetrizer_matrix,
    symmetrizer_spectrum,
    r_norm,
    r_norm_bound,
    symmetrizer_norm,
    symmetrizer_norm_bound,
    creation_norm,
    creation_norm_bounds,
    classify_region,
    gauge_norm,
    gauge_norm_bound,
)

__all__ = [
    "FockVector",
    "Word",
    "expand_vector",
    "free_inner_product",
    "r_terms",
    "symmetrizer_terms",
    "apply_R",
    "apply_symmetrizer",
    "apply_symmetrizer_recursive",
    "inner_product",
    "creation",
    "free_annihilation",
    "annihilation",
    "annihilation_closed_parts",
    "annihilation_closed",
    "free_gauge",
    "gauge",
    "gauge_closed_parts",
    "gauge_closed",
    "poisson_apply",
    "apply_factors",
    "vacuum_expectation_oracle",
    "r_matrix",
    "symmetrizer_matrix",
    "symmetrizer_spectrum",
    "r_norm",
    "r_norm_bound",
    "symmetrizer_norm",
    "symmetrizer_norm_bound",
    "creation_norm",
    "creation_norm_bounds",
    "classify_region",
    "gauge_norm",
    "gauge_norm_bound",
]
