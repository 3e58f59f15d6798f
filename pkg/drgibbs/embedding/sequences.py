"""
Embedding sequences: a family instance enlarged step by step so that its
recurrence coefficients ``a_i`` tend to 1.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import pandas as pd

from ..exceptions import BadParam
from ..families import FamilySpec, parse_family

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EmbeddingSequence:
    """
    A base family with its enlargement rule ``n -> base.enlarge(n)``.

    Attributes
    ----------
    base : FamilySpec
        Family instance at n = 0
    n_max : int
        Horizon of the sequence
    """

    base: FamilySpec
    n_max: int = 200

    def __post_init__(self):
        if self.base.kind == "custom":
            raise BadParam("custom recurrences have no embedding sequence")
        if self.n_max < 1:
            raise BadParam(f"n_max must be positive, got {self.n_max}")

    @classmethod
    def from_descriptor(cls, text, n_max=200):
        return cls(parse_family(text), n_max)

    def member(self, n):
        return self.base.enlarge(n)

    @property
    def base_diameter(self):
        return self.base.diameter


def leading_coefficient(spec, i):
    """
    Exact ``a_i`` of a family instance from its closed form.

    Parameters
    ----------
    spec : FamilySpec
        Hamming, Johnson, q-Johnson or gamma instance
    i : int
        Index (i >= 1 for gamma)

    Returns
    -------
    Fraction
        The coefficient ``a_i``
    """
    p = spec.params
    if spec.kind == "hamming":
        return Fraction(p["D"] - i, p["D"])
    if spec.kind == "johnson":
        v, D = p["v"], p["D"]
        return Fraction((D - i) * (v - D - i), D * (v - D))
    if spec.kind == "qjohnson":
        q, v, D = p["q"], p["v"], p["D"]
        return Fraction((q ** D - q ** i) * (q ** (v - D) - q ** i), (q ** D - 1) * (q ** (v - D) - 1))
    if spec.kind == "gamma":
        return Fraction(1) if i == 0 else Fraction(p["a"] - 1, p["a"])
    raise BadParam(f"no closed-form coefficients for {spec.kind}")


@dataclass(frozen=True)
class ConvergenceReport:
    """
    Deviations ``|a_i^(n) - 1|`` along an embedding sequence.

    Attributes
    ----------
    frame : pandas.DataFrame
        Columns ``n``, ``i``, ``deviation``
    max_deviation : numpy.ndarray
        Largest deviation over i for each n
    decay_order : float
        Slope of ``-log(max_deviation)`` against ``log(n)`` over the second half
    monotone : bool
        Whether the largest deviation is nonincreasing in n
    """

    frame: pd.DataFrame
    max_deviation: np.ndarray
    decay_order: float
    monotone: bool

    def to_dict(self):
        return {
            "max_deviation": self.max_deviation.tolist(),
            "decay_order": self.decay_order,
            "monotone": self.monotone,
        }


def coefficient_convergence(seq, i=None, n_max=None):
    """
    Track how fast the enlarged families' ``a_i`` approach 1.

    Parameters
    ----------
    seq : EmbeddingSequence
        Embedding sequence
    i : int, optional
        Single index to track; by default every ``i`` below the base diameter
        (``i = 1`` for gamma)
    n_max : int, optional
        Horizon; by default ``seq.n_max``

    Returns
    -------
    ConvergenceReport
        Deviations per (n, i), their maximum over i and the fitted decay order
    """
    n_max = seq.n_max if n_max is None else n_max
    if i is None:
        indices = [1] if not seq.base.finite else list(range(seq.base_diameter))
    else:
        if seq.base.finite and not 0 <= i < seq.base_diameter:
            raise BadParam(f"index {i} must lie below the base diameter {seq.base_diameter}")
        indices = [i]

    records = []
    for n in range(n_max + 1):
        spec = seq.member(n)
        for k in indices:
            records.append((n, k, float(abs(leading_coefficient(spec, k) - 1))))
    frame = pd.DataFrame(records, columns=["n", "i", "deviation"])

    max_deviation = frame.groupby("n")["deviation"].max().to_numpy()
    monotone = bool(np.all(np.diff(max_deviation) <= 0))
    ns = np.arange(n_max + 1)
    tail = (ns >= max(1, n_max // 2)) & (max_deviation > 0)
    if tail.sum() >= 2:
        slope = np.polyfit(np.log(ns[tail]), np.log(max_deviation[tail]), 1)[0]
        decay_order = float(-slope)
    else:
        decay_order = float("nan")
    logger.debug("%s: max deviation %.3e at n=%d", seq.base.descriptor, max_deviation[-1], n_max)
    return ConvergenceReport(frame, max_deviation, decay_order, monotone)
