"""Integral cohomology of coordinate and diagonal arrangement complements.

A simplicial complex K on [m] determines two subspace arrangements: the
coordinate one, with a subspace z_i = 0 (i in I) for every non-face I,
and the diagonal one, with z_{i_1} = ... = z_{i_k} for every non-face.
This package computes the integral cohomology of their complements from
the intersection lattice, checks the answers through independent
combinatorial routes, multiplies classes at the chain level, and verifies
the structural relations tying the two families together.
"""

from .abelian import GradedAbelianGroup
from .catalog import (
    k_equal_complex,
    projective_plane_6,
    seven_vertex_golod,
    square_boundary,
)
from .chains import (
    ChainComplex,
    HomologyData,
    betti_numbers_mod_p,
    betti_numbers_rational,
    cohomology_from_homology,
    pair_homology,
    reduced_cohomology,
    reduced_homology,
    relative_chain_complex,
    simplicial_chain_complex,
)
from .constructions import (
    bbcg_report,
    bbcg_summands,
    complex_info,
    cone_equivalence_check,
    kequal_closed_form,
    realize_as_coordinate,
    suspension_relation_check,
)
from .corpus import all_complexes, iso_canonical_form, random_mf_complex
from .errors import ArrcompError, DomainError, InputError, IntegrityError
from .gm import (
    coordinate_cohomology,
    diagonal_cohomology,
    diagonal_cohomology_via_links,
    diagonal_cohomology_via_subcomplexes,
    gm_cohomology,
    hochster_coordinate_cohomology,
)
from .lattice import (
    CoordinateStratum,
    DiagonalStratum,
    IntersectionLattice,
    coordinate_lattice,
    diagonal_lattice,
    enumerate_nonfaces,
    interval_order_complex,
    interval_pair_homology,
    interval_reduced_homology,
    lattice_isomorphic_to_dual,
)
from .products import (
    boundary_chain,
    class_product,
    cross_product,
    golod_product_check,
    product_table,
    unit_chain,
)
from .simplicial import SimplicialComplex, complex_from_missing_faces, join_complex
from .snf import (
    IntegerMatrix,
    bareiss_determinant,
    elementary_divisors,
    is_unimodular,
    rank_mod_p,
    rank_over_q,
    smith_normal_form,
)

__version__ = "0.1.0"

__all__ = [
    "ArrcompError", "ChainComplex", "CoordinateStratum", "DiagonalStratum",
    "DomainError", "GradedAbelianGroup", "HomologyData", "InputError",
    "IntegerMatrix", "IntegrityError", "IntersectionLattice",
    "SimplicialComplex", "all_complexes", "bareiss_determinant",
    "bbcg_report", "bbcg_summands", "betti_numbers_mod_p",
    "betti_numbers_rational", "boundary_chain", "class_product",
    "cohomology_from_homology", "complex_from_missing_faces", "complex_info",
    "cone_equivalence_check", "coordinate_cohomology", "coordinate_lattice",
    "cross_product", "diagonal_cohomology", "diagonal_cohomology_via_links",
    "diagonal_cohomology_via_subcomplexes", "diagonal_lattice",
    "elementary_divisors", "enumerate_nonfaces", "gm_cohomology",
    "golod_product_check", "hochster_coordinate_cohomology",
    "interval_order_complex", "interval_pair_homology",
    "interval_reduced_homology", "is_unimodular", "iso_canonical_form",
    "join_complex", "k_equal_complex", "kequal_closed_form",
    "lattice_isomorphic_to_dual", "pair_homology", "product_table",
    "projective_plane_6", "rank_mod_p", "rank_over_q",
    "realize_as_coordinate", "reduced_cohomology", "reduced_homology",
    "relative_chain_complex", "random_mf_complex", "seven_vertex_golod",
    "simplicial_chain_complex", "smith_normal_form", "square_boundary",
    "suspension_relation_check", "unit_chain",
]
