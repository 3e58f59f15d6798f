# Infinite embedding sequences

from .sequences import EmbeddingSequence, ConvergenceReport, leading_coefficient, coefficient_convergence
from .accumulation import AccumulationEstimate, dual_cloud, accumulation_set
from .inclusion import InclusionReport, vertex_map, verify_subgraph_inclusion

__all__ = [
    'EmbeddingSequence',
    'ConvergenceReport',
    'leading_coefficient',
    'coefficient_convergence',
    'AccumulationEstimate',
    'dual_cloud',
    'accumulation_set',
    'InclusionReport',
    'vertex_map',
    'verify_subgraph_inclusion',
]
