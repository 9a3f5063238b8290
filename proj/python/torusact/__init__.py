"""Exact relation lattices, orbit structure and Folner-average simulation
for translation actions of LCA-group duals on the torus."""

from torusact._core import (
    apply_automorphism,
    bohr_mean_trace,
    bohr_orthogonality_trace,
    character_weight,
    find_conjugacy,
    haar_target,
    hnf,
    is_uniquely_ergodic,
    is_unimodular,
    kronecker_solvable,
    load_config,
    orbit_structure,
    power_basis_coords,
    preimage_lattice,
    rational_kernel_lattice,
    relation_lattice,
    serialize_config,
    smith_normal_form,
    solve_integer_linear,
    verify_conjugacy,
    weyl_average,
    weyl_trace,
    wiener_atom_trace,
    wiener_energy_trace,
)

__all__ = [
    "apply_automorphism",
    "bohr_mean_trace",
    "bohr_orthogonality_trace",
    "character_weight",
    "find_conjugacy",
    "haar_target",
    "hnf",
    "is_uniquely_ergodic",
    "is_unimodular",
    "kronecker_solvable",
    "load_config",
    "orbit_structure",
    "power_basis_coords",
    "preimage_lattice",
    "rational_kernel_lattice",
    "relation_lattice",
    "serialize_config",
    "smith_normal_form",
    "solve_integer_linear",
    "verify_conjugacy",
    "weyl_average",
    "weyl_trace",
    "wiener_atom_trace",
    "wiener_energy_trace",
]

__version__ = "0.1.0"
