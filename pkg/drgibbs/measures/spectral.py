"""
Spectral measures of the Gamma(a, b) hypergroups.

Orthogonality measures of the tree polynomials in the tilde frame (support
``[-1, 1]``), their push-forward to the natural frame, and the measures
``mu_x`` on the homogeneous tree representing ``n -> x^n``.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Tuple

import numpy as np
import pandas as pd

from ..config import QUADRATURE_TOLERANCE
from ..exceptions import BadParam, DomainError, NumericalFailure
from ..families.finite import _require_int
from ..families.trees import gamma_ab, tree_constants
from ..hypergroup import polynomial_values
from .quadrature import quadrature

logger = logging.getLogger(__name__)

FRAMES = ("tilde", "natural")


@dataclass(frozen=True, eq=False)
class SpectralMeasure:
    """
    Density on a closed interval plus finitely many atoms.

    Attributes
    ----------
    density : callable
        Vectorised density on ``support``
    support : tuple of float
        ``(lo, hi)``; ``lo == hi`` for a purely atomic measure
    atoms : tuple
        ``(location, weight)`` pairs
    frame : str
        "tilde" (polynomials P~_n, support in [-1, 1]) or "natural"
    label : str
        Human readable name
    """

    density: Callable
    support: Tuple[float, float]
    atoms: Tuple[Tuple[float, object], ...] = ()
    frame: str = "tilde"
    label: str = ""

    def __post_init__(self):
        if self.frame not in FRAMES:
            raise BadParam(f"unknown frame {self.frame!r}")
        if any(w < 0 for _, w in self.atoms):
            raise BadParam("atom weights must be nonnegative")

    @property
    def atom_mass(self):
        return sum((w for _, w in self.atoms), Fraction(0))

    def mass(self, tol=QUADRATURE_TOLERANCE):
        return quadrature(self, None, tol)

    def to_dict(self):
        return {
            "label": self.label,
            "frame": self.frame,
            "support": list(self.support),
            "atoms": [[loc, w] for loc, w in self.atoms],
        }


def _zero_density(z):
    return np.zeros_like(np.asarray(z, dtype=np.float64))


def tree_orthogonality_measure(a, b):
    """
    Normalised orthogonality measure of the tilde-frame polynomials of Gamma(a, b).

    The density is ``(a / 2 pi) sqrt(1 - x^2) / ((s~_1 - x)(x - s~_0))`` on
    ``[-1, 1]``. When ``b > a`` an atom of weight ``(b - a)/b`` sits at ``s~_0``.

    Parameters
    ----------
    a, b : int
        Gamma(a, b) parameters, both at least 2

    Returns
    -------
    SpectralMeasure
        Measure in the tilde frame
    """
    constants = tree_constants(a, b)
    s0, s1 = constants.s_tilde_0, constants.s_tilde_1
    scale = a / (2 * math.pi)

    def density(x):
        x = np.asarray(x, dtype=np.float64)
        root = np.sqrt(np.clip(1.0 - x * x, 0.0, None))
        return scale * root / ((s1 - x) * (x - s0))

    atoms = ()
    if constants.atom_weight is not None:
        atoms = ((s0, constants.atom_weight),)
    return SpectralMeasure(density, (-1.0, 1.0), atoms, "tilde", f"rho:a={a},b={b}")


def push_forward(measure, slope, intercept):
    """
    Image of a tilde-frame measure under ``y = slope * x + intercept``.

    Parameters
    ----------
    measure : SpectralMeasure
        Measure in the tilde frame
    slope, intercept : float
        Coefficients of the affine map, ``slope != 0``

    Returns
    -------
    SpectralMeasure
        Measure in the natural frame
    """
    if measure.frame != "tilde":
        raise BadParam("only tilde-frame measures can be pushed forward")
    slope, intercept = float(slope), float(intercept)
    if slope == 0:
        raise BadParam("slope must be nonzero")

    def density(y):
        y = np.asarray(y, dtype=np.float64)
        return measure.density((y - intercept) / slope) / abs(slope)

    lo, hi = sorted(slope * s + intercept for s in measure.support)
    atoms = tuple((slope * float(loc) + intercept, w) for loc, w in measure.atoms)
    return SpectralMeasure(density, (lo, hi), atoms, "natural", measure.label)


def natural_orthogonality_measure(a, b):
    """Orthogonality measure of the recurrence polynomials P_n of Gamma(a, b)."""
    constants = tree_constants(a, b)
    return push_forward(tree_orthogonality_measure(a, b), constants.slope, constants.intercept)


def letac_measure(a, x):
    """
    Spectral measure ``mu_x`` on the homogeneous tree of degree ``a``.

    It represents ``n -> x^n`` against the tree polynomials,
    ``x^n = int P_n d mu_x``. With ``c = 2 sqrt(a-1)/a`` the density is
    ``(a/2pi) (1-x^2) / (1 + (a-1)x^2 - a z x) * sqrt(c^2 - z^2) / (1 - z^2)``
    on ``[-c, c]``; ``x = +-1`` gives the point mass at ``x``.

    Parameters
    ----------
    a : int
        Degree of the tree, at least 2
    x : float
        Parameter with ``|x| < 1/sqrt(a-1)`` or ``x = +-1``

    Returns
    -------
    SpectralMeasure
        Measure in the natural frame

    Raises
    ------
    DomainError
        If ``|x|`` is at or beyond ``1/sqrt(a-1)`` and not 1
    """
    _require_int("a", a, 2)
    x = float(x)
    label = f"letac:a={a},x={x:g}"
    if abs(x) == 1.0:
        return SpectralMeasure(_zero_density, (x, x), ((x, Fraction(1)),), "natural", label)

    limit = 1 / math.sqrt(a - 1)
    if abs(x) >= limit:
        raise DomainError(f"|x| = {abs(x):g} must be below 1/sqrt(a-1) = {limit:.6f}")

    c = 2 * math.sqrt(a - 1) / a
    scale = a * (1 - x * x) / (2 * math.pi)

    def density(z):
        z = np.asarray(z, dtype=np.float64)
        denominator = 1 + (a - 1) * x * x - a * z * x
        if np.any(denominator <= 0):
            raise NumericalFailure(f"denominator of mu_x not positive for x = {x:g}")
        root = np.sqrt(np.clip(c * c - z * z, 0.0, None))
        return scale * root / (denominator * (1 - z * z))

    return SpectralMeasure(density, (-c, c), (), "natural", label)


def sample_density(measure, samples):
    """
    Sample a density at interior points of its support.

    Returns
    -------
    pandas.DataFrame
        Columns ``z`` and ``density``
    """
    if samples < 1:
        raise BadParam("samples must be at least 1")
    lo, hi = measure.support
    z = np.linspace(lo, hi, samples + 2)[1:-1]
    return pd.DataFrame({"z": z, "density": np.asarray(measure.density(z), dtype=np.float64)})


def orthogonality_norms(a, b, n_max, tol=QUADRATURE_TOLERANCE):
    """
    Squared norms ``int P~_n^2 d rho~`` of the tilde-frame polynomials.

    Returns
    -------
    pandas.DataFrame
        Columns ``n`` and ``norm`` for ``n = 0..n_max``
    """
    _require_int("n_max", n_max, 0)
    H, constants = gamma_ab(a, b)
    measure = tree_orthogonality_measure(a, b)

    def squares(x):
        return np.stack(polynomial_values(H, n_max, constants.T(x))) ** 2

    norms = quadrature(measure, squares, tol)
    return pd.DataFrame({"n": np.arange(n_max + 1), "norm": norms})


def moment_identity_scan(a, x_list, n_max=10, tol=QUADRATURE_TOLERANCE):
    """
    Compare ``int P_n d mu_x`` with ``x^n`` on the homogeneous tree.

    Parameters
    ----------
    a : int
        Degree of the tree
    x_list : sequence of float
        Parameters of the measures
    n_max : int, optional
        Highest moment, by default 10
    tol : float, optional
        Quadrature tolerance, by default 1e-9

    Returns
    -------
    pandas.DataFrame
        One row per x with ``max_deviation`` and the worst ``n``
    """
    _require_int("n_max", n_max, 0)
    H, _ = gamma_ab(a, 2)
    powers = np.arange(n_max + 1)

    rows = []
    for x in x_list:
        measure = letac_measure(a, x)
        moments = quadrature(measure, lambda z: np.stack(polynomial_values(H, n_max, z)), tol)
        deviation = np.abs(moments - float(x) ** powers)
        worst = int(np.argmax(deviation))
        rows.append({"x": float(x), "max_deviation": float(deviation[worst]), "worst_n": worst})
        logger.debug("a=%d x=%g: max deviation %.2e at n=%d", a, x, deviation[worst], worst)
    return pd.DataFrame(rows, columns=["x", "max_deviation", "worst_n"])
