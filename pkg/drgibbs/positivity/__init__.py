# Gibbs kernel positivity

from .region import PositivityRegion
from .bochner import (
    Verdict,
    Certificate,
    bochner_check,
    gibbs_check_finite,
    dual_polynomials,
    positivity_region,
)
from .gram import gram_matrix, gram_psd_check, gram_determinant, truncated_region
from .schur import exp_transform, schur_exp_stability

__all__ = [
    'PositivityRegion',
    'Verdict',
    'Certificate',
    'bochner_check',
    'gibbs_check_finite',
    'dual_polynomials',
    'positivity_region',
    'gram_matrix',
    'gram_psd_check',
    'gram_determinant',
    'truncated_region',
    'exp_transform',
    'schur_exp_stability',
]
