"""Exact-arithmetic engine for lacunary generating functions of Hermite polynomials."""

from .closed_forms import (
    ClosedFormBranch,
    ClosedFormPlan,
    RkSeries,
    closed_form_HK0,
    closed_form_HKL,
    closed_form_plan,
    nieto_truax,
    nieto_truax_partial_sum,
    rk_series,
)
from .hermite import (
    CoeffTable,
    fact,
    hermite_coeff_table,
    hermite_egf,
    hermite_poly,
    table_egf,
)
from .hypergeom import (
    DomainError,
    HypergeomSpec,
    PoleError,
    gmfc_check,
    pfq_series,
    pochhammer,
)
from .normal_ordering import (
    ConsistencyError,
    NormalOrderResult,
    SemiLinearOp,
    apply_exp_op,
    compose,
    crofton_check,
    normal_order,
)
from .operators import (
    Branch,
    ResummedSeries,
    dilate_bruteforce,
    lemma1_branches,
    parity_split_branches,
    resum_corollary1,
    resum_lemma1,
    shift,
)
from .series import (
    BivarPoly,
    LambdaSeries,
    TruncationUnderflowError,
    series_add,
    series_diff_lambda,
    series_exp,
    series_mul,
)
from .verify import (
    VerifyCase,
    VerifyConfig,
    VerifyReport,
    random_dense_table,
    run_appendix_sweep,
    run_verification,
)

__all__ = [
    "BivarPoly",
    "Branch",
    "ClosedFormBranch",
    "ClosedFormPlan",
    "CoeffTable",
    "ConsistencyError",
    "DomainError",
    "HypergeomSpec",
    "LambdaSeries",
    "NormalOrderResult",
    "PoleError",
    "ResummedSeries",
    "RkSeries",
    "SemiLinearOp",
    "TruncationUnderflowError",
    "VerifyCase",
    "VerifyConfig",
    "VerifyReport",
    "apply_exp_op",
    "closed_form_HK0",
    "closed_form_HKL",
    "closed_form_plan",
    "compose",
    "crofton_check",
    "dilate_bruteforce",
    "fact",
    "gmfc_check",
    "hermite_coeff_table",
    "hermite_egf",
    "hermite_poly",
    "lemma1_branches",
    "nieto_truax",
    "nieto_truax_partial_sum",
    "normal_order",
    "parity_split_branches",
    "pfq_series",
    "pochhammer",
    "random_dense_table",
    "resum_corollary1",
    "resum_lemma1",
    "rk_series",
    "run_appendix_sweep",
    "run_verification",
    "series_add",
    "series_diff_lambda",
    "series_exp",
    "series_mul",
    "shift",
    "table_egf",
]

__version__ = "0.1.0"
