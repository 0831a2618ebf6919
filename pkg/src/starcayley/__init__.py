"""starcayley: (n,k)-star graphs, Cayley certification, and the supporting
group-theoretic and number-theoretic verification battery."""

from .perm import (CapExceeded, Flag, Lambda, Perm, PermGroup, canonical_flag,
                   closure, compose, flag_count, flag_stabilizer,
                   is_k_homogeneous, is_k_transitive,
                   is_sharply_k_transitive, is_sharply_lambda_transitive,
                   orbit_of_set, orbit_of_tuple)
from .pairs import (AutPair, PairGroup, aut_product, project_and_kernel,
                    symmetric_nu_group)
from .stargraph import (EdgeKind, StarGraph, apply_automorphism,
                        brute_force_automorphism_count, build, edge_kind,
                        is_edge_in_triangle, rank, residual_neighbors,
                        six_cycles_through, star_neighbors,
                        transposition_identity_check, unrank)
from .gf import Field, ProjPoint, SemilinearMap, field, field_of_order, proj_line
from .witness_groups import (agammal1, agl, agl1, mathieu11, mathieu12,
                             pgammal2, pgl2, psl2)
from .cayley import (Certificate, ClassificationResult, build_certificate,
                     certify_via_lambda, certify_via_sharp_k, classify,
                     is_prime_power, sabidussi_direct, search_regular_subgroup,
                     table_certificate, verify_certificate)
from .case_elim import CaseFamily, CaseRecord, eliminate_case, pgammal_solution_scan
from . import numbers

__version__ = "0.1.0"

__all__ = [
    "AutPair", "CapExceeded", "CaseFamily", "CaseRecord", "Certificate",
    "ClassificationResult", "EdgeKind", "Field", "Flag", "Lambda", "PairGroup",
    "Perm", "PermGroup", "ProjPoint", "SemilinearMap", "StarGraph",
    "agammal1", "agl", "agl1", "apply_automorphism", "aut_product",
    "brute_force_automorphism_count", "build", "build_certificate",
    "canonical_flag", "certify_via_lambda", "certify_via_sharp_k", "classify",
    "closure", "compose", "edge_kind", "eliminate_case", "field",
    "field_of_order", "flag_count", "flag_stabilizer", "is_edge_in_triangle",
    "is_k_homogeneous", "is_k_transitive", "is_prime_power",
    "is_sharply_k_transitive", "is_sharply_lambda_transitive", "mathieu11",
    "mathieu12", "numbers", "orbit_of_set", "orbit_of_tuple", "pgammal2",
    "pgammal_solution_scan", "pgl2", "proj_line", "project_and_kernel", "psl2",
    "rank", "residual_neighbors", "sabidussi_direct", "search_regular_subgroup",
    "six_cycles_through", "star_neighbors", "symmetric_nu_group",
    "table_certificate", "transposition_identity_check", "unrank",
    "verify_certificate",
]
