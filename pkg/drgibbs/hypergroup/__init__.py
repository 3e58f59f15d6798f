# Polynomial hypergroup algebra

from .core import (
    UNBOUNDED,
    PolynomialHypergroup,
    FiniteMeasure,
    from_recurrence,
    haar_weights,
    convolve,
    convolution_tensor,
    polynomial_values,
    eval_polynomial,
)
from .dual import DualSpace, dual_space, fourier, inverse_fourier

__all__ = [
    'UNBOUNDED',
    'PolynomialHypergroup',
    'FiniteMeasure',
    'from_recurrence',
    'haar_weights',
    'convolve',
    'convolution_tensor',
    'polynomial_values',
    'eval_polynomial',
    'DualSpace',
    'dual_space',
    'fourier',
    'inverse_fourier',
]
