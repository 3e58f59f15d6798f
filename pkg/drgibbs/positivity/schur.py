import logging
import math

import numpy as np
from scipy.stats import poisson

from ..config import DUAL_SLACK, SERIES_TAIL
from ..exceptions import BadParam
from .bochner import Certificate, bochner_check, gibbs_check_finite
from .gram import gram_matrix

logger = logging.getLogger(__name__)


def exp_transform(x, t, D, tail=SERIES_TAIL):
    """
    Values ``g(k) = exp(t (x^k - 1) / (1 - x))`` for ``k = 0..D`` from the series.

    ``g = sum_m Poisson(m; c) f_{x^m}`` with ``c = t / (1 - x)``, a nonnegative
    combination of pointwise powers of ``f_x``. The series stops where the
    Poisson tail drops below ``tail``.

    Returns
    -------
    numpy.ndarray
        Transformed function on ``0..D``
    """
    c = t / (1.0 - x)
    ks = np.arange(D + 1)
    if c == 0:
        return np.ones(D + 1)
    terms = int(poisson.isf(tail, c)) + 1
    ms = np.arange(terms)
    weights = poisson.pmf(ms, c)
    powers = float(x) ** (ms[:, np.newaxis] * ks[np.newaxis, :])
    return weights @ powers


def schur_exp_stability(H, x, t, tolerance=DUAL_SLACK, tail=SERIES_TAIL):
    """
    Positivity of the exp transform of a positive definite geometric function.

    Parameters
    ----------
    H : PolynomialHypergroup
        Finite hypergroup
    x : float
        Parameter in (0, 1) with ``f_x`` positive definite
    t : float
        Nonnegative time parameter

    Returns
    -------
    Certificate
        Bochner certificate of the transform; ``deviation`` is the largest entry
        of the difference between its Gram matrix and that of ``f_{exp(-t)}``

    Raises
    ------
    BadParam
        If x is outside (0, 1), t is negative, or ``f_x`` is not positive definite
    """
    x, t = float(x), float(t)
    if not 0.0 < x < 1.0:
        raise BadParam(f"x must lie in (0, 1), got {x}")
    if t < 0:
        raise BadParam(f"t must be nonnegative, got {t}")
    if not gibbs_check_finite(H, x, tolerance).is_psd:
        raise BadParam(f"f_x is not positive definite at x={x}")

    D = H.diameter
    g = exp_transform(x, t, D, tail)
    certificate = bochner_check(H, g, tolerance, method="schur", x=x)

    reference = math.exp(-t)
    difference = gram_matrix(H, g, D) - gram_matrix(H, lambda k: reference ** k, D)
    deviation = float(np.abs(difference).max())
    logger.debug("exp transform x=%g t=%g: deviation %.3e", x, t, deviation)
    return Certificate(certificate.verdict, "schur", x=x, dual_measure=certificate.dual_measure,
                       witness=certificate.witness, margin=certificate.margin, deviation=deviation)
