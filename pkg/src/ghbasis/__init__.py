"""Exact verification of monomial derivative bases for Garsia-Haiman modules.

The package builds Delta_mu as an exact integer polynomial, enumerates the
cross drawings that index monomial derivative bases for hook partitions,
realizes the explicit annihilator-ideal generators and the spanning
rewriting, and certifies dimensions and ranks with exact linear algebra.
"""

from .partitions import (
    Biexponent,
    HookParams,
    Partition,
    biexponents,
    conjugate,
    conjugate_factorial,
    hook_params,
    hook_partition,
    n_stat,
    parse_partition,
)
from .poly import (
    Monomial,
    Polynomial,
    apply_diff,
    apply_diff_poly,
    format_poly,
    min_monomial,
    mono_less,
    parse_poly,
)
from .delta import DeltaPolynomial, build_delta
from .hooks import (
    CrossDiagram,
    HookDrawing,
    HookShape,
    closed_form_count,
    descendant_graph,
    diff_op_of,
    enumerate_drawings,
    flip,
    is_son,
    reconstruct,
    split,
)
from .annihilator import (
    AnomalyClass,
    GeneratorSet,
    annihilates,
    classify_diagram,
    generators,
    normal_form,
    proposition_instances,
    quotient_hilbert,
    reduce_step,
)
from .linalg import (
    RankCertificate,
    SparseIntMatrix,
    derivative_closure,
    in_span,
    rank,
)
from .zerox import (
    GeneralDrawing,
    corner_recursion_check,
    count_check,
    enumerate_general,
    reconstruct_general,
    split_general,
    verify_zero_x_degree_basis,
)

__all__ = [
    "Biexponent",
    "HookParams",
    "Partition",
    "biexponents",
    "conjugate",
    "conjugate_factorial",
    "hook_params",
    "hook_partition",
    "n_stat",
    "parse_partition",
    "Monomial",
    "Polynomial",
    "apply_diff",
    "apply_diff_poly",
    "format_poly",
    "min_monomial",
    "mono_less",
    "parse_poly",
    "DeltaPolynomial",
    "build_delta",
    "CrossDiagram",
    "HookDrawing",
    "HookShape",
    "closed_form_count",
    "descendant_graph",
    "diff_op_of",
    "enumerate_drawings",
    "flip",
    "is_son",
    "reconstruct",
    "split",
    "AnomalyClass",
    "GeneratorSet",
    "annihilates",
    "classify_diagram",
    "generators",
    "normal_form",
    "proposition_instances",
    "quotient_hilbert",
    "reduce_step",
    "RankCertificate",
    "SparseIntMatrix",
    "derivative_closure",
    "in_span",
    "rank",
    "GeneralDrawing",
    "corner_recursion_check",
    "count_check",
    "enumerate_general",
    "reconstruct_general",
    "split_general",
    "verify_zero_x_degree_basis",
]
