"""
Subsets of [-1, 1] made of closed intervals and isolated points.
"""

from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from ..config import ENDPOINT_TOLERANCE
from ..exceptions import BadParam

# exact: the set itself; inner: a subset of the true set; outer: a superset;
# estimate: a numerical approximation without a containment guarantee
CLAIMS = ("exact", "inner", "outer", "estimate")


@dataclass(frozen=True)
class PositivityRegion:
    """
    Union of disjoint closed intervals and isolated points inside [-1, 1].

    Attributes
    ----------
    intervals : tuple
        Sorted ``(lo, hi)`` pairs, separated by more than ``endpoint_tolerance``
    isolated_points : tuple
        Sorted points outside every interval
    endpoint_tolerance : float
        Resolution used for membership and merging
    claim : str
        How the set relates to the true positivity set, one of ``CLAIMS``
    """

    intervals: Tuple[Tuple[float, float], ...] = ()
    isolated_points: Tuple[float, ...] = ()
    endpoint_tolerance: float = ENDPOINT_TOLERANCE
    claim: str = field(default="exact")

    @classmethod
    def from_intervals(cls, intervals, points=(), tolerance=ENDPOINT_TOLERANCE, claim="exact"):
        """
        Normalise intervals and points into a region.

        Intervals are clipped to [-1, 1], sorted and merged when they overlap or
        lie within ``tolerance`` of each other; points covered by an interval or
        by another point are dropped.
        """
        if claim not in CLAIMS:
            raise BadParam(f"unknown claim {claim!r}")
        merged = []
        for lo, hi in sorted((max(float(lo), -1.0), min(float(hi), 1.0)) for lo, hi in intervals):
            if hi < lo:
                continue
            if merged and lo <= merged[-1][1] + tolerance:
                merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
            else:
                merged.append((lo, hi))

        kept = []
        for p in sorted(float(p) for p in points):
            if p < -1.0 - tolerance or p > 1.0 + tolerance:
                continue
            if any(lo - tolerance <= p <= hi + tolerance for lo, hi in merged):
                continue
            if kept and p - kept[-1] <= tolerance:
                continue
            kept.append(min(max(p, -1.0), 1.0))
        return cls(tuple(merged), tuple(kept), tolerance, claim)

    def contains(self, x, tolerance=None):
        """Return True if ``x`` lies in an interval or at an isolated point, up to tolerance."""
        tol = self.endpoint_tolerance if tolerance is None else tolerance
        return self.distance_to(x) <= tol

    def distance_to(self, x):
        """Euclidean distance from ``x`` to the region (inf for the empty region)."""
        best = np.inf
        for lo, hi in self.intervals:
            best = min(best, max(lo - x, 0.0, x - hi))
        for p in self.isolated_points:
            best = min(best, abs(x - p))
        return float(best)

    def covers(self, lo, hi, tolerance=None):
        """Return True if ``[lo, hi]`` lies inside one interval, up to tolerance."""
        tol = self.endpoint_tolerance if tolerance is None else tolerance
        return any(a - tol <= lo and hi <= b + tol for a, b in self.intervals)

    @property
    def is_empty(self):
        return not self.intervals and not self.isolated_points

    def _components(self):
        parts = list(self.intervals) + [(p, p) for p in self.isolated_points]
        return sorted(parts)

    def _directed_distance(self, other):
        # sup over self of the distance to other; maxima sit at endpoints or gap midpoints of other
        candidates = [x for part in self._components() for x in part]
        others = other._components()
        for (_, left_hi), (right_lo, _) in zip(others, others[1:]):
            mid = 0.5 * (left_hi + right_lo)
            if self.contains(mid, 0.0):
                candidates.append(mid)
        return max((other.distance_to(x) for x in candidates), default=0.0)

    def hausdorff_distance(self, other):
        """
        Hausdorff distance between two non-empty regions.

        Parameters
        ----------
        other : PositivityRegion
            Region to compare against

        Returns
        -------
        float
            ``max(sup_{a in self} d(a, other), sup_{b in other} d(b, self))``
        """
        if self.is_empty or other.is_empty:
            raise BadParam("the Hausdorff distance needs two non-empty regions")
        return max(self._directed_distance(other), other._directed_distance(self))

    def to_dict(self):
        data = {
            "intervals": [[lo, hi] for lo, hi in self.intervals],
            "points": list(self.isolated_points),
            "tolerance": self.endpoint_tolerance,
        }
        if self.claim != "exact":
            data["claim"] = self.claim
        return data

    @classmethod
    def from_dict(cls, data):
        return cls.from_intervals(
            [tuple(pair) for pair in data["intervals"]],
            data.get("points", ()),
            tolerance=data.get("tolerance", ENDPOINT_TOLERANCE),
            claim=data.get("claim", "exact"),
        )

    def __str__(self):
        parts = [f"[{lo:.10g}, {hi:.10g}]" for lo, hi in self.intervals]
        parts += [f"{{{p:.10g}}}" for p in self.isolated_points]
        return " U ".join(parts) if parts else "{}"
