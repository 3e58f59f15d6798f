"""
Dual space, Plancherel weights and Fourier transforms of finite hypergroups.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, eigh_tridiagonal

from ..config import DUAL_POINT_SEPARATION
from ..exceptions import BadParam, NumericalFailure
from ..utils.conversions import as_float_array
from .core import haar_weights, polynomial_values

logger = logging.getLogger(__name__)

# tolerated distance of the largest eigenvalue from 1 before it is snapped
_SNAP_LIMIT = 1e-9


@dataclass(frozen=True, eq=False)
class DualSpace:
    """
    Dual space of a finite polynomial hypergroup.

    Attributes
    ----------
    points : numpy.ndarray
        Dual points ``x_0 = 1 > x_1 > ... > x_D``
    plancherel : numpy.ndarray
        Plancherel weights ``pi_j > 0``
    character_table : numpy.ndarray
        ``(D+1, D+1)`` array with entry ``[i, j] = P_i(x_j)``
    haar : numpy.ndarray
        Haar weights as floats
    """

    points: np.ndarray
    plancherel: np.ndarray
    character_table: np.ndarray
    haar: np.ndarray

    @property
    def size(self):
        return len(self.points)

    def to_dict(self):
        return {
            "points": self.points.tolist(),
            "plancherel": self.plancherel.tolist(),
        }


def dual_space(H, separation=DUAL_POINT_SEPARATION):
    """
    Compute the dual points and Plancherel weights of a finite hypergroup.

    The dual points are the eigenvalues of the transition operator
    (row i: ``c_i`` at i-1, ``b_i`` at i, ``a_i`` at i+1), obtained from its
    symmetrised tridiagonal form with off-diagonal ``sqrt(a_i c_{i+1})``. The
    character table is evaluated by the three-term recurrence at each point.

    Parameters
    ----------
    H : PolynomialHypergroup
        Finite hypergroup
    separation : float, optional
        Minimal gap between consecutive dual points, by default 1e-9

    Returns
    -------
    DualSpace
        Dual points sorted in decreasing order with Plancherel weights

    Raises
    ------
    NumericalFailure
        If the eigensolver fails or two dual points coincide
    """
    if not H.finite:
        raise BadParam("the dual space is only computed for finite hypergroups")
    cached = H._cache.get(("dual", separation))
    if cached is not None:
        return cached

    D = H.diameter
    triples = [H.coefficients(i) for i in range(D + 1)]
    diagonal = np.array([float(b) for _, b, _ in triples])
    off_diagonal = np.sqrt([float(triples[i][0] * triples[i + 1][2]) for i in range(D)])
    try:
        eigenvalues = eigh_tridiagonal(diagonal, off_diagonal, eigvals_only=True)
    except LinAlgError as err:
        raise NumericalFailure(f"tridiagonal eigensolver failed for {H!r}: {err}") from err

    points = np.sort(eigenvalues)[::-1].copy()
    if abs(points[0] - 1.0) > _SNAP_LIMIT:
        raise NumericalFailure(f"largest dual point {points[0]!r} is not 1")
    if points[-1] < -1.0 - _SNAP_LIMIT:
        raise NumericalFailure(f"smallest dual point {points[-1]!r} is below -1")
    points[0] = 1.0
    points[-1] = max(points[-1], -1.0)

    gaps = -np.diff(points)
    if np.any(gaps < separation):
        j = int(np.argmin(gaps))
        raise NumericalFailure(
            f"dual points {j} and {j + 1} coincide within {separation} ({points[j]!r})"
        )

    table = np.array(polynomial_values(H, D, points))
    haar = as_float_array(haar_weights(H))
    plancherel = 1.0 / (haar @ table**2)
    logger.debug("dual space of %r: points=%s", H, points)

    dual = DualSpace(points, plancherel, table, haar)
    H._cache[("dual", separation)] = dual
    return dual


def _function_values(f, D):
    if callable(f):
        return as_float_array([f(i) for i in range(D + 1)])
    values = np.asarray([float(v) for v in f], dtype=np.float64)
    if len(values) != D + 1:
        raise BadParam(f"expected {D + 1} function values, got {len(values)}")
    return values


def fourier(H, f, dual=None):
    """
    Fourier transform ``f_hat(x_j) = sum_i f(i) P_i(x_j) omega_i``.

    Parameters
    ----------
    H : PolynomialHypergroup
        Finite hypergroup
    f : callable or sequence
        Function on ``0..D``
    dual : DualSpace, optional
        Precomputed dual space

    Returns
    -------
    numpy.ndarray
        Values of the transform at the dual points
    """
    dual = dual or dual_space(H)
    values = _function_values(f, H.diameter)
    return dual.character_table.T @ (values * dual.haar)


def inverse_fourier(H, mu, dual=None):
    """
    Inverse transform ``mu_check(i) = sum_j mu_j P_i(x_j)`` of a measure on the dual.

    Parameters
    ----------
    H : PolynomialHypergroup
        Finite hypergroup
    mu : sequence
        Weights at the dual points, in dual-point order
    dual : DualSpace, optional
        Precomputed dual space

    Returns
    -------
    numpy.ndarray
        Function values on ``0..D``
    """
    dual = dual or dual_space(H)
    weights = np.asarray(mu, dtype=np.float64)
    if weights.shape != (dual.size,):
        raise BadParam(f"expected {dual.size} dual weights, got shape {weights.shape}")
    return dual.character_table @ weights
