"""Numerical defaults shared by the whole package."""

from dataclasses import dataclass, replace

# Bochner test: f_hat(x_j) >= -DUAL_SLACK * sum(omega)
DUAL_SLACK = 1e-10
# Gram test: min eigenvalue >= -EIGEN_SLACK * ||M||
EIGEN_SLACK = 1e-8
# Vertex-level test: min eigenvalue >= -KERNEL_SLACK * |V|
KERNEL_SLACK = 1e-10
ENDPOINT_TOLERANCE = 1e-8
ROOT_IMAG_TOLERANCE = 1e-6
DUAL_POINT_SEPARATION = 1e-9
UNIT_POINT_TOLERANCE = 1e-12
QUADRATURE_TOLERANCE = 1e-9
QUADRATURE_MAX_REFINEMENTS = 20
SERIES_TAIL = 1e-14

# full convolution tensor is only precomputed up to this diameter
TENSOR_PRECOMPUTE_LIMIT = 64

MAX_ENUMERATED_VERTICES = 4096
MAX_BALL_VERTICES = 20000
EXHAUSTIVE_PAIR_LIMIT = 512
SAMPLED_PAIRS = 10000
SAMPLE_SEED = 0xD46

ACCUMULATION_EPS = 0.01
TRUNCATION_GRID_STEP = 1e-3


@dataclass(frozen=True)
class Tolerances:
    """Bundle of the slack parameters used by the positivity tests."""

    dual: float = DUAL_SLACK
    eigen: float = EIGEN_SLACK
    kernel: float = KERNEL_SLACK
    endpoint: float = ENDPOINT_TOLERANCE
    root_imag: float = ROOT_IMAG_TOLERANCE
    quadrature: float = QUADRATURE_TOLERANCE

    def with_overrides(self, **kwargs):
        """Return a copy with the given fields replaced, ignoring ``None`` values."""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


DEFAULT_TOLERANCES = Tolerances()
