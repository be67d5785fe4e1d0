"""Exact combinatorics of type-C crystal bases in the Nakajima monomial realization.

The package computes crystal graphs of fundamental crystals, entrywise
products of their monomial models, and the decomposition of those products
into irreducibles, all in exact integer arithmetic; a Kashiwara-Nakashima
column model provides an independent oracle for tensor-product
decompositions.
"""

from .graphs import (
    Component,
    CrystalGraph,
    CrystalInvariantError,
    Decomposition,
    TensorPair,
    VertexBudgetExceeded,
    decompose_set,
    export,
    generate_closure,
    is_closed,
)
from .monomials import (
    Monomial,
    StringStats,
    TaggedElement,
    XLetter,
    m_k_set,
    root_monomial,
    tagged_m_k_set,
    x_monomial,
)
from .products import (
    ComponentPrediction,
    ProductSpec,
    VerificationReport,
    component_threshold,
    decompose_product_bruteforce,
    decomposition_pairs,
    fundamental_crystal,
    general_product_decomposition,
    normalize_product_params,
    predicted_components,
    product_decomposition_closed_form,
    product_set,
    tensor_decomposition_closed_form,
    verify_range,
    weight_of_pair,
    weight_to_pair,
)
from .rootdata import Weight, cartan_entry, cartan_matrix, simple_root
from .tableaux import (
    Column,
    Letter,
    column_crystal,
    column_is_admissible,
    letter_crystal,
    tensor_highest_weights,
)

__all__ = [
    "Column",
    "Component",
    "ComponentPrediction",
    "CrystalGraph",
    "CrystalInvariantError",
    "Decomposition",
    "Letter",
    "Monomial",
    "ProductSpec",
    "StringStats",
    "TaggedElement",
    "TensorPair",
    "VerificationReport",
    "VertexBudgetExceeded",
    "Weight",
    "XLetter",
    "cartan_entry",
    "cartan_matrix",
    "column_crystal",
    "column_is_admissible",
    "component_threshold",
    "decompose_product_bruteforce",
    "decompose_set",
    "decomposition_pairs",
    "export",
    "fundamental_crystal",
    "general_product_decomposition",
    "generate_closure",
    "is_closed",
    "letter_crystal",
    "m_k_set",
    "normalize_product_params",
    "predicted_components",
    "product_decomposition_closed_form",
    "product_set",
    "root_monomial",
    "simple_root",
    "tagged_m_k_set",
    "tensor_decomposition_closed_form",
    "tensor_highest_weights",
    "verify_range",
    "weight_of_pair",
    "weight_to_pair",
    "x_monomial",
]

__version__ = "0.1.0"
