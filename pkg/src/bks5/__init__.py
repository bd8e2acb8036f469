"""Exact reconstruction and verification of real five-qubit
Bell-Kochen-Specker proofs.

The package rebuilds the 160-ray configuration from five maximal
commuting sets of symmetric Pauli operators, enumerates its maximal
orthogonal bases, certifies non-colorability, searches for small
non-colorable subfamilies, computes exact Hilbert-Schmidt distance
spectra, and analyzes the underlying binary symplectic geometry and the
overlap-graph symmetries.  All arithmetic is exact (integers, rationals,
GF(2)); floating point appears only in rendered output.
"""
from .bases import (OrthoGraph, build_ortho_graph, contains_basis,
                    enumerate_maximal_bases)
from .coloring import (ColoringResult, KSInstance, check_colorable,
                       export_cnf, verify_coloring)
from .geometry import (GF2Subspace, classify_generator_systems,
                       distinguished_observables, geometry_report, intersect,
                       intersection_dimension_table, pauli_to_point,
                       quadratic_form, span, symplectic_form)
from .metrics import (DistanceSpectrum, distance_spectrum, emit_histogram,
                      hs_distance_squared)
from .pauli import (CommutingSet, MagicReport, PauliOp, apply_pauli, commutes,
                    make_pauli, pauli_mul, pauli_to_matrix, set_product,
                    verify_magic)
from .rays import (Ray, RayTable, build_ray_table, identify_block,
                   joint_eigenrays, magic_configuration, partner)
from .search import ProofCandidate, find_partitions, search_small_proof
from .symmetry import (AutGroupReport, OverlapGraph, automorphism_group,
                       build_overlap_graph)

__version__ = "0.1.0"

__all__ = [
    "AutGroupReport", "ColoringResult", "CommutingSet", "DistanceSpectrum",
    "GF2Subspace", "KSInstance", "MagicReport", "OrthoGraph", "OverlapGraph",
    "PauliOp", "ProofCandidate", "Ray", "RayTable", "apply_pauli",
    "automorphism_group", "build_ortho_graph", "build_overlap_graph",
    "build_ray_table", "check_colorable", "classify_generator_systems",
    "commutes", "contains_basis", "distance_spectrum",
    "distinguished_observables", "emit_histogram", "enumerate_maximal_bases",
    "export_cnf", "find_partitions", "geometry_report", "hs_distance_squared",
    "identify_block", "intersect", "intersection_dimension_table",
    "joint_eigenrays", "magic_configuration", "make_pauli", "partner",
    "pauli_mul", "pauli_to_matrix", "pauli_to_point", "quadratic_form",
    "search_small_proof", "set_product", "span", "symplectic_form",
    "verify_coloring", "verify_magic",
]
