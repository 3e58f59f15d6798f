# Spectral measures and quadrature

from .quadrature import quadrature
from .spectral import (
    SpectralMeasure,
    tree_orthogonality_measure,
    natural_orthogonality_measure,
    push_forward,
    letac_measure,
    sample_density,
    orthogonality_norms,
    moment_identity_scan,
)

__all__ = [
    'quadrature',
    'SpectralMeasure',
    'tree_orthogonality_measure',
    'natural_orthogonality_measure',
    'push_forward',
    'letac_measure',
    'sample_density',
    'orthogonality_norms',
    'moment_identity_scan',
]
