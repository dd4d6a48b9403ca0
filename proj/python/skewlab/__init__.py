"""Python surface of the skew brace computation engine."""

from ._core import (
    FiniteGroup,
    InputError,
    ResourceError,
    SkewBrace,
    alternating4,
    build_example_braces,
    cyclic,
    dihedral,
    direct_product,
    enumerate_braces,
    enumerate_z_groups,
    group_by_name,
    groups_of_odd_order,
    is_almost_sylow_cyclic,
    is_cyclic,
    is_ideal,
    is_isomorphic,
    is_nilpotent,
    is_solvable,
    is_subbrace,
    is_supersolvable_group,
    is_z_group,
    parse_brace,
    parse_group,
    quaternion8,
    report_to_csv,
    report_to_human,
    serialize_brace,
    serialize_group,
    socle,
    supersolvable_chain,
    sweep_fitting_commutator,
    sweep_sylow_transitivity,
    symmetric,
    trivial_brace,
    verify_theorem_a,
    verify_theorem_b,
    verify_theorem_c,
)

__all__ = [
    "FiniteGroup",
    "InputError",
    "ResourceError",
    "SkewBrace",
    "alternating4",
    "build_example_braces",
    "cyclic",
    "dihedral",
    "direct_product",
    "enumerate_braces",
    "enumerate_z_groups",
    "group_by_name",
    "groups_of_odd_order",
    "is_almost_sylow_cyclic",
    "is_cyclic",
    "is_ideal",
    "is_isomorphic",
    "is_nilpotent",
    "is_solvable",
    "is_subbrace",
    "is_supersolvable_group",
    "is_z_group",
    "parse_brace",
    "parse_group",
    "quaternion8",
    "report_to_csv",
    "report_to_human",
    "serialize_brace",
    "serialize_group",
    "socle",
    "supersolvable_chain",
    "sweep_fitting_commutator",
    "sweep_sylow_transitivity",
    "symmetric",
    "trivial_brace",
    "verify_theorem_a",
    "verify_theorem_b",
    "verify_theorem_c",
]
