# Vertex-level ground truth

from .graphs import ConcreteGraph, enumerate_hamming, enumerate_johnson
from .finite_fields import enumerate_q_johnson, rref_mod_p, rank_mod_p, canonical_label
from .gamma_ball import build_gamma_ball, ball_size
from .kernel import kernel_matrix, kernel_psd
from .catalog import enumerate_family
from .intersection import (
    IntersectionTable,
    empirical_intersection_numbers,
    empirical_coefficients,
    empirical_hypergroup,
)

__all__ = [
    'ConcreteGraph',
    'enumerate_hamming',
    'enumerate_johnson',
    'enumerate_family',
    'enumerate_q_johnson',
    'rref_mod_p',
    'rank_mod_p',
    'canonical_label',
    'build_gamma_ball',
    'ball_size',
    'kernel_matrix',
    'kernel_psd',
    'IntersectionTable',
    'empirical_intersection_numbers',
    'empirical_coefficients',
    'empirical_hypergroup',
]
