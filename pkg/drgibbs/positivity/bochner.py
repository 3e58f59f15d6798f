"""
Bochner-type positivity tests on finite hypergroups.

A function f on {0, ..., D} is positive definite exactly when its Fourier
transform is nonnegative on the dual; for ``f_x(i) = x^i`` this is the same as
positive semidefiniteness of the Gibbs kernel ``x^d(u,v)`` on the graph.
"""

import enum
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from numpy.polynomial import polynomial as P

from ..config import DUAL_SLACK, ENDPOINT_TOLERANCE, ROOT_IMAG_TOLERANCE
from ..exceptions import BadParam, NumericalFailure
from ..hypergroup import dual_space, fourier
from .region import PositivityRegion

logger = logging.getLogger(__name__)


class Verdict(enum.Enum):
    PSD = "PSD"
    NOT_PSD = "NotPSD"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Certificate:
    """
    Outcome of a positivity test.

    Attributes
    ----------
    verdict : Verdict
        PSD or NotPSD
    method : str
        Test that produced it: "bochner", "gram", "kernel", "truncation" or "schur"
    x : float, optional
        Parameter of the geometric function, when there is one
    dual_measure : numpy.ndarray, optional
        Nonnegative weights on the dual points (PSD from the Bochner test)
    witness : dict
        Violation data for NotPSD, e.g. ``{"dual_index": j, "value": v}``
    margin : float, optional
        Smallest tested value (transform value or eigenvalue)
    level : int, optional
        Truncation level for Gram-matrix tests
    deviation : float, optional
        Distance to a reference kernel (exp/Schur transform)
    """

    verdict: Verdict
    method: str
    x: Optional[float] = None
    dual_measure: Optional[np.ndarray] = None
    witness: dict = field(default_factory=dict)
    margin: Optional[float] = None
    level: Optional[int] = None
    deviation: Optional[float] = None

    @property
    def is_psd(self):
        return self.verdict is Verdict.PSD

    def to_dict(self):
        data = {"verdict": self.verdict.value, "method": self.method}
        for name in ("x", "margin", "level", "deviation"):
            value = getattr(self, name)
            if value is not None:
                data[name] = value
        if self.dual_measure is not None:
            data["dual_measure"] = self.dual_measure.tolist()
        if self.witness:
            data["witness"] = self.witness
        return data


def bochner_check(H, f, tolerance=DUAL_SLACK, dual=None, method="bochner", x=None):
    """
    Test positive definiteness of a function on a finite hypergroup.

    Parameters
    ----------
    H : PolynomialHypergroup
        Finite hypergroup
    f : callable or sequence
        Function on ``0..D``
    tolerance : float, optional
        Slack scale; the transform must be at least ``-tolerance * sum(omega)``,
        by default 1e-10
    dual : DualSpace, optional
        Precomputed dual space

    Returns
    -------
    Certificate
        PSD with the dual measure ``pi_j f_hat(x_j)``, or NotPSD with the dual
        point where the transform is most negative
    """
    dual = dual or dual_space(H)
    transform = fourier(H, f, dual)
    slack = tolerance * dual.haar.sum()
    j = int(np.argmin(transform))
    margin = float(transform[j])

    if margin >= -slack:
        measure = np.maximum(dual.plancherel * transform, 0.0)
        return Certificate(Verdict.PSD, method, x=x, dual_measure=measure, margin=margin)

    witness = {"dual_index": j, "dual_point": float(dual.points[j]), "value": margin}
    return Certificate(Verdict.NOT_PSD, method, x=x, witness=witness, margin=margin)


def gibbs_check_finite(H, x, tolerance=DUAL_SLACK, dual=None):
    """
    Bochner test for the geometric function ``f_x(i) = x^i``.

    PSD iff ``sum_i omega_i x^i P_i(x_j) >= -tolerance * sum(omega)`` at every
    dual point.

    Raises
    ------
    BadParam
        If x lies outside [-1, 1]
    """
    x = float(x)
    if not -1.0 <= x <= 1.0:
        raise BadParam(f"x must lie in [-1, 1], got {x}")
    return bochner_check(H, lambda i: x ** i, tolerance, dual, x=x)


def dual_polynomials(H, dual=None):
    """
    Coefficients of ``q_j(x) = sum_i omega_i P_i(x_j) x^i``.

    Returns
    -------
    numpy.ndarray
        ``(D+1, D+1)`` array; row j holds the coefficients of ``q_j`` in
        increasing degree
    """
    dual = dual or dual_space(H)
    return dual.character_table.T * dual.haar[np.newaxis, :]


def _merge_breakpoints(values, tolerance):
    anchors = (-1.0, 0.0, 1.0)
    merged = []
    for value in sorted(values):
        if merged and value - merged[-1][-1] <= tolerance:
            merged[-1].append(value)
        else:
            merged.append([value])
    points = []
    for cluster in merged:
        exact = [a for a in anchors if any(abs(a - v) <= tolerance for v in cluster)]
        points.append(exact[0] if exact else float(np.mean(cluster)))
    return points


def positivity_region(H, tolerance=DUAL_SLACK, endpoint_tolerance=ENDPOINT_TOLERANCE,
                      root_imag=ROOT_IMAG_TOLERANCE, dual=None):
    """
    Exact set of x in [-1, 1] for which the Gibbs kernel is PSD.

    All real roots of every ``q_j`` (companion-matrix eigenvalues) together
    with -1, 0 and 1 form the breakpoints; each breakpoint and each midpoint
    between consecutive breakpoints is sign-tested. Runs of passing midpoints
    give closed intervals; a passing breakpoint between two failing midpoints
    is an isolated point.

    Parameters
    ----------
    H : PolynomialHypergroup
        Finite hypergroup
    tolerance : float, optional
        Dual slack scale, by default 1e-10
    endpoint_tolerance : float, optional
        Breakpoints closer than this are merged, by default 1e-8
    root_imag : float, optional
        Largest imaginary part of an accepted root, by default 1e-6

    Returns
    -------
    PositivityRegion
        Union of intervals and isolated points

    Raises
    ------
    NumericalFailure
        If root finding returns non-finite values
    """
    dual = dual or dual_space(H)
    coefficients = dual_polynomials(H, dual)
    slack = tolerance * dual.haar.sum()

    roots = []
    for row in coefficients:
        r = P.polyroots(row)
        if not np.all(np.isfinite(r)):
            raise NumericalFailure(f"root finding failed for {H!r}")
        real = r.real[(np.abs(r.imag) <= root_imag) & (np.abs(r.real) <= 1.0 + endpoint_tolerance)]
        roots.extend(np.clip(real, -1.0, 1.0).tolist())

    breakpoints = _merge_breakpoints([-1.0, 0.0, 1.0] + roots, endpoint_tolerance)
    logger.debug("%r: %d breakpoints", H, len(breakpoints))

    def passes(x):
        return P.polyval(x, coefficients.T).min() >= -slack

    point_ok = [passes(b) for b in breakpoints]
    gap_ok = [passes(0.5 * (lo + hi)) for lo, hi in zip(breakpoints, breakpoints[1:])]

    intervals, points = [], []
    k = 0
    while k < len(gap_ok):
        if gap_ok[k]:
            start = k
            while k + 1 < len(gap_ok) and gap_ok[k + 1]:
                k += 1
            intervals.append((breakpoints[start], breakpoints[k + 1]))
        k += 1
    for k, ok in enumerate(point_ok):
        left = k > 0 and gap_ok[k - 1]
        right = k < len(gap_ok) and gap_ok[k]
        if ok and not (left or right):
            points.append(breakpoints[k])

    region = PositivityRegion.from_intervals(intervals, points, endpoint_tolerance)
    logger.info("positivity region of %r: %s", H, region)
    return region
