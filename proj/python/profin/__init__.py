"""Finite shadows of profinite completions of group extensions."""

from ._profin import (
    abelianization_factors,
    annihilator_exps,
    are_isomorphic,
    catalog_names,
    dual_factors,
    group_json,
    group_order,
    heisenberg_orbit,
    lamp_level_orders,
    low_index_counts,
    reconstruct,
    rf_map_verdict,
    separating_character,
    smith_normal_form,
    verify_all,
)

__all__ = [
    "abelianization_factors",
    "annihilator_exps",
    "are_isomorphic",
    "catalog_names",
    "dual_factors",
    "group_json",
    "group_order",
    "heisenberg_orbit",
    "lamp_level_orders",
    "low_index_counts",
    "reconstruct",
    "rf_map_verdict",
    "separating_character",
    "smith_normal_form",
    "verify_all",
]
