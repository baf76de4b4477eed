"""Combinatorial Nullstellensatz toolkit for graph coloring.

Exact finite-field and rational arithmetic, decorated graph polynomials,
constructive low-degree monomial certificates for planar near-triangulations
and clique-sum compositions, list-coloring extraction and counting bounds.
"""

__version__ = "0.1.0"

from .algebra import FieldSpec, field_make, find_element_of_order
from .graphs import Graph, PlaneEmbedding, clique_sum, parse_graph, validate_near_triangulation
from .polys import FactorList, SparsePoly, an_number, coeff_of_monomial, decorated_factors, expand_capped
from .certify import (
    CliqueSumTree,
    Glue,
    MonomialCertificate,
    clique_sum_monomial,
    find_matching_at3,
    nice_monomial,
    triangle_deleted_monomial,
    triangulation_monomial,
    v8_rooted_monomial,
)
from .coloring import AbelianGroup, adversarial_min, cn_solve, count_colorings, cyclic_embed, multiplicative_instance
from .bounds import af_min_product, af_weak_bound, count_nonzero_points, lemma_product_check

__all__ = [
    "AbelianGroup",
    "CliqueSumTree",
    "FactorList",
    "FieldSpec",
    "Glue",
    "Graph",
    "MonomialCertificate",
    "PlaneEmbedding",
    "SparsePoly",
    "adversarial_min",
    "af_min_product",
    "af_weak_bound",
    "an_number",
    "clique_sum",
    "clique_sum_monomial",
    "cn_solve",
    "coeff_of_monomial",
    "count_colorings",
    "count_nonzero_points",
    "cyclic_embed",
    "decorated_factors",
    "expand_capped",
    "field_make",
    "find_element_of_order",
    "find_matching_at3",
    "lemma_product_check",
    "multiplicative_instance",
    "nice_monomial",
    "parse_graph",
    "triangle_deleted_monomial",
    "triangulation_monomial",
    "v8_rooted_monomial",
    "validate_near_triangulation",
]
