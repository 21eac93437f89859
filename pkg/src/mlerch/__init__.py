"""Multiple Lerch and Hurwitz zeta functions with analytic continuation, residues and polar-set classification."""

from __future__ import annotations

import sys as _sys

from .bernoulli import ZeroIndexSet, bernoulli_eval, bernoulli_numbers, bernoulli_poly, bernoulli_polys, rational_roots, zero_index_set
from .classifier import SingularityReport, classify, classify_hurwitz, classify_lerch
from .core import (
    AccuracyError,
    ConditioningError,
    EvalPoint,
    Hyperplane,
    MlerchError,
    OffHyperplaneError,
    ParameterError,
    PoleProximityError,
    RegionError,
    RegionIndex,
    TwistParams,
    UnsupportedError,
    pochhammer,
    region_index,
)
from .evaluator import EvalResult, TruncationPolicy, eval_continued, eval_depth1, eval_direct, identity_residual
from .matrixkit import TruncatedMatrix, build_matrix, first_row_chain, residue_hurwitz, two_prod_oracle

__all__ = sorted(
    name for name, obj in list(globals().items())
    if not name.startswith("_") and name != "annotations" and not isinstance(obj, type(_sys))
)
