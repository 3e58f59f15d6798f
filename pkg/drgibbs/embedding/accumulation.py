"""
Accumulation points of the dual supports along an embedding sequence.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
import pandas as pd

from ..config import ACCUMULATION_EPS
from ..exceptions import BadParam
from ..positivity.region import PositivityRegion

logger = logging.getLogger(__name__)

# a small cluster counts as an isolated point when the next dual point of
# every late member is farther than this multiple of eps
ISOLATION_FACTOR = 5


@dataclass(frozen=True)
class AccumulationEstimate:
    """
    Numerical estimate of the accumulation set of the dual supports.

    Attributes
    ----------
    region : PositivityRegion
        Clustered tail of the dual supports (claim "estimate")
    predicted : PositivityRegion
        Set predicted by the family theory
    hausdorff : float
        Hausdorff distance between ``region`` and ``predicted``
    covers_prediction : bool
        Whether every predicted point lies within eps of a late dual point
    attained : tuple
        Predicted points that occur exactly as a dual point for some n
    limit_only : tuple
        Predicted points that are approached but never attained
    cloud : pandas.DataFrame
        Columns ``n``, ``j``, ``dual_point`` for every member up to ``n_max``
    """

    region: PositivityRegion
    predicted: PositivityRegion
    hausdorff: float
    covers_prediction: bool
    attained: tuple
    limit_only: tuple
    cloud: pd.DataFrame

    def to_dict(self):
        return {
            "region": self.region.to_dict(),
            "predicted": self.predicted.to_dict(),
            "hausdorff": self.hausdorff,
            "covers_prediction": self.covers_prediction,
            "attained": list(self.attained),
            "limit_only": list(self.limit_only),
        }


def dual_cloud(seq, n_max=None):
    """
    Closed-form dual points of every member ``n = 0..n_max``.

    Returns
    -------
    dict
        ``n -> list of Fraction`` in decreasing order
    """
    n_max = seq.n_max if n_max is None else n_max
    if not seq.base.finite:
        raise BadParam("accumulation sets are computed for finite families only")
    return {n: seq.member(n).closed_form_dual() for n in range(n_max + 1)}


def _chains(values, eps):
    chains = [[values[0]]]
    for value in values[1:]:
        if value - chains[-1][-1] < eps:
            chains[-1].append(value)
        else:
            chains.append([value])
    return [(chain[0], chain[-1]) for chain in chains]


def _isolated(lo, hi, late, eps):
    for points in late:
        outside = points[(points < lo) | (points > hi)]
        if len(outside) == 0:
            continue
        gap = np.min(np.where(outside < lo, lo - outside, outside - hi))
        if gap <= ISOLATION_FACTOR * eps:
            return False
    return True


def _prediction_samples(predicted, eps):
    samples = list(predicted.isolated_points)
    for lo, hi in predicted.intervals:
        count = max(2, int(math.ceil((hi - lo) / (eps / 2))) + 1)
        samples.extend(np.linspace(lo, hi, count).tolist())
    return samples


def accumulation_set(seq, n_max=None, eps=ACCUMULATION_EPS):
    """
    Estimate the accumulation set of the dual supports of an embedding sequence.

    Only the tail ``n in [ceil(n_max/2), n_max]`` is clustered. Sorted tail points
    with consecutive gaps below eps form chains; chains of span at least eps
    become intervals. A shorter chain becomes an isolated point when every late
    member keeps its other dual points more than ``5 eps`` away, otherwise it
    is kept as a short interval.

    Parameters
    ----------
    seq : EmbeddingSequence
        Sequence of a finite family
    n_max : int, optional
        Horizon; by default ``seq.n_max``
    eps : float, optional
        Clustering threshold, by default 0.01

    Returns
    -------
    AccumulationEstimate
        Estimate compared against the predicted set
    """
    n_max = seq.n_max if n_max is None else n_max
    cloud = dual_cloud(seq, n_max)
    start = math.ceil(n_max / 2)
    late = [np.array([float(p) for p in cloud[n]]) for n in range(start, n_max + 1)]
    values = np.unique(np.concatenate(late))

    intervals, points = [], []
    for lo, hi in _chains(values.tolist(), eps):
        if hi - lo >= eps:
            intervals.append((lo, hi))
        elif _isolated(lo, hi, late, eps):
            points.append(0.5 * (lo + hi))
        else:
            intervals.append((lo, hi))
    region = PositivityRegion.from_intervals(intervals, points, claim="estimate")

    predicted = seq.base.predicted_region()
    hausdorff = region.hausdorff_distance(predicted)
    covers = all(np.min(np.abs(values - s)) <= eps for s in _prediction_samples(predicted, eps))

    every = {p for n in cloud for p in cloud[n]}
    candidates = sorted(set(predicted.isolated_points)
                        | {x for interval in predicted.intervals for x in interval})
    attained = tuple(x for x in candidates if any(abs(float(p) - x) <= 1e-12 for p in every))
    limit_only = tuple(x for x in candidates if x not in attained)

    frame = pd.DataFrame(
        [(n, j, float(p)) for n in sorted(cloud) for j, p in enumerate(cloud[n])],
        columns=["n", "j", "dual_point"],
    )
    logger.info("%s: accumulation estimate %s (Hausdorff %.4f)", seq.base.descriptor, region, hausdorff)
    return AccumulationEstimate(region, predicted, hausdorff, covers, attained, limit_only, frame)
