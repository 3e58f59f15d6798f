# Distance-regular graph families

from .finite import (
    complete,
    hamming,
    johnson,
    octahedron,
    q_johnson,
    gaussian_binomial,
    hamming_dual,
    johnson_dual,
    q_johnson_dual,
    wildberger_residuals,
)
from .trees import (
    TreeConstants,
    gamma_ab,
    tree_constants,
    tree_coefficients,
    closed_form_g,
    tree_char_closed_form,
    tree_polynomial,
    character_kernel_region,
    bounded_pd_transfers,
)
from .krawtchouk import krawtchouk, krawtchouk_weight, krawtchouk_norm, krawtchouk_gram
from .descriptors import FamilySpec, parse_family, build_family

__all__ = [
    'complete',
    'hamming',
    'johnson',
    'octahedron',
    'q_johnson',
    'gaussian_binomial',
    'hamming_dual',
    'johnson_dual',
    'q_johnson_dual',
    'wildberger_residuals',
    'TreeConstants',
    'gamma_ab',
    'tree_constants',
    'tree_coefficients',
    'closed_form_g',
    'tree_char_closed_form',
    'tree_polynomial',
    'character_kernel_region',
    'bounded_pd_transfers',
    'krawtchouk',
    'krawtchouk_weight',
    'krawtchouk_norm',
    'krawtchouk_gram',
    'FamilySpec',
    'parse_family',
    'build_family',
]
