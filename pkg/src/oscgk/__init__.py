"""Exact-arithmetic lab for the double-graded oscillator action of sl(n):
catalogued highest-weight modules, bracket verification, and growth-degree
(Gelfand-Kirillov dimension) measurements of their filtrations."""

from .poly import GradedPair, Poly, RepConfig, compare_monomials, grading, is_graded_homogeneous
from .weyl import WeylOp, commutator, compose
from .rep import (
    NotWeightVector,
    RootVectorSet,
    e_op,
    eta,
    laplacian,
    root_vectors,
    verify_brackets,
    verify_module_invariance,
    weight_of,
)
from .span import EchelonBasis, InsertResult
from .catalog import (
    HOWE,
    HwModuleSpec,
    HwValidationError,
    HwValidationReport,
    IndexUnavailable,
    LaurentResidue,
    case_of,
    catalog,
    howe_e_op,
    howe_root_vectors,
    pointed_expected,
    validate_hwv,
    zeta1,
    zeta2,
)
from .growth import (
    GrowthReport,
    OracleReport,
    PointedReport,
    SweepBudget,
    estimate_degree,
    filtration_sweep,
    finite_difference_table,
    free_module_phi,
    gk_formula,
    is_minimal_case,
    minimal_gk,
    oracle_a_k,
    oracle_d_k,
    oracle_dprime_k,
    pointed_check,
    span_sweep,
)

__version__ = "0.1.0"
