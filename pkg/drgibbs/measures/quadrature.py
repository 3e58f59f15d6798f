"""
Adaptive quadrature against spectral measures.

The continuous part is integrated after the substitution
``z = center + half * cos(theta)``, which absorbs square-root behaviour at
both ends of the support, with composite Gauss-Legendre panels in theta.
"""

import logging

import numpy as np
from numpy.polynomial.legendre import leggauss

from ..config import QUADRATURE_MAX_REFINEMENTS, QUADRATURE_TOLERANCE
from ..exceptions import NoConvergence, NumericalFailure

logger = logging.getLogger(__name__)

GAUSS_ORDER = 20


def _panel_rule(panels, order):
    # nodes and weights on [0, pi] split into equal panels
    nodes, weights = leggauss(order)
    edges = np.linspace(0.0, np.pi, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    theta = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    w = (half[:, None] * weights[None, :]).ravel()
    return theta, w


def _continuous_part(measure, integrand, panels, order):
    lo, hi = measure.support
    center, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
    theta, w = _panel_rule(panels, order)
    z = center + half * np.cos(theta)

    density = np.asarray(measure.density(z), dtype=np.float64)
    if np.any(density < 0):
        k = int(np.argmin(density))
        raise NumericalFailure(f"negative density {density[k]:.3e} at z = {z[k]:.6f}")

    jacobian = half * np.sin(theta) * w * density
    values = np.ones_like(z) if integrand is None else np.asarray(integrand(z), dtype=np.float64)
    return values @ jacobian


def _atom_part(measure, integrand):
    total = 0.0
    for location, weight in measure.atoms:
        if integrand is None:
            total = total + float(weight)
        else:
            value = np.asarray(integrand(np.array([float(location)])), dtype=np.float64)
            total = total + float(weight) * value[..., 0]
    return total


def quadrature(measure, integrand=None, tol=QUADRATURE_TOLERANCE, order=GAUSS_ORDER,
               max_refinements=QUADRATURE_MAX_REFINEMENTS):
    """
    Integrate a function against a spectral measure.

    The number of panels doubles until two successive estimates of the
    continuous part differ by less than ``tol``; atoms are added exactly.

    Parameters
    ----------
    measure : SpectralMeasure
        Measure with a density on ``measure.support`` and optional atoms
    integrand : callable, optional
        Vectorised function of z. It may return an array of shape
        ``(..., len(z))`` to integrate several functions at once. By default
        the constant 1, giving the total mass
    tol : float, optional
        Absolute tolerance between refinements, by default 1e-9
    order : int, optional
        Gauss-Legendre nodes per panel, by default 20
    max_refinements : int, optional
        Number of panel doublings allowed, by default 20

    Returns
    -------
    float or numpy.ndarray
        Integral, with the shape of one integrand column

    Raises
    ------
    NoConvergence
        If the estimates have not settled after ``max_refinements`` doublings
    NumericalFailure
        If the density is negative at a node
    """
    atoms = _atom_part(measure, integrand)
    lo, hi = measure.support
    if hi <= lo:
        return atoms

    panels = 1
    change = float("inf")
    previous = _continuous_part(measure, integrand, panels, order)
    for _ in range(max_refinements):
        panels *= 2
        current = _continuous_part(measure, integrand, panels, order)
        change = float(np.max(np.abs(current - previous)))
        if change < tol:
            logger.debug("quadrature of %s settled with %d panels (change %.2e)",
                         measure.label or "measure", panels, change)
            return current + atoms
        previous = current

    raise NoConvergence(
        f"quadrature did not settle within {max_refinements} refinements "
        f"(last change {change:.3e}, tolerance {tol:.1e})"
    )
