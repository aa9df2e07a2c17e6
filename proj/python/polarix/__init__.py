"""Exact combinatorial engine for polarizations of powers of graded maximal ideals."""

from ._core import (
    BudgetExceeded,
    DirectedLabeledTree,
    IsotoneFamily,
    MonomialIdeal,
    SimplicialComplex,
    alexander_dual_from_family,
    alexander_dual_oracle,
    b_family,
    ball_or_sphere_verdict,
    canonical_form,
    collapse,
    complex_from_ideal,
    dual_linear_quotients_order,
    enumerate_valid_families,
    family_from_json,
    generators_from_family,
    hilbert_numerator,
    is_polarization_oracle,
    is_valid_polarization,
    ls_path,
    map_count_up_to_symmetry,
    rainbow_binary_words,
    rainbow_linear_resolution,
    reduced_homology_gf2,
    render_svg,
    simplex_points,
    standard_family,
    tree_linear_quotients_order,
    tree_pair_ideal,
    tree_vertex_ideal,
    trees_up_to_iso,
    validate_family,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "1.0.0"
