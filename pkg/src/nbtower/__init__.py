"""Exact finite-field towers whose normal bases have sparse multiplication
tables, with brute-force verification of every constructed object."""

from .artin_schreier import (ASLevel, TowerSpec, as_extend, as_irreducible,
                             build_tower, compute_h, next_delta,
                             normal_element, shift_keeps_basis)
from .errors import FieldError
from .fields import (FieldCtx, FieldElement, FpScalar, PrimeModulus, ext_inv,
                     ext_mul, fp_inv, frobenius, min_poly, rank_over_prime,
                     relative_conjugate_sum, trace_to_prime)
from .kummer import (KummerLevel, KummerParams, conj_sum, find_xi,
                     kummer_extend, kummer_normality, kummer_params,
                     kummer_table)
from .oracle import (VerificationReport, is_irreducible_bruteforce,
                     is_normal_bruteforce, min_poly_via_conjugates,
                     verify_reciprocal_relations)
from .polys import Poly
from .tables import (FullTable, MultTable, SparseRow, SparsityReport,
                     delta_table, full_table, gamma_table, sparsity,
                     verify_table)

__version__ = "0.1.0"

__all__ = [
    "ASLevel", "TowerSpec", "as_extend", "as_irreducible", "build_tower",
    "compute_h", "next_delta", "normal_element", "shift_keeps_basis",
    "FieldError", "FieldCtx", "FieldElement", "FpScalar", "PrimeModulus",
    "ext_inv", "ext_mul", "fp_inv", "frobenius", "min_poly",
    "rank_over_prime", "relative_conjugate_sum", "trace_to_prime",
    "KummerLevel", "KummerParams", "conj_sum", "find_xi", "kummer_extend",
    "kummer_normality", "kummer_params", "kummer_table",
    "VerificationReport", "is_irreducible_bruteforce",
    "is_normal_bruteforce", "min_poly_via_conjugates",
    "verify_reciprocal_relations", "Poly", "FullTable", "MultTable",
    "SparseRow", "SparsityReport", "delta_table", "full_table",
    "gamma_table", "sparsity", "verify_table", "__version__",
]
