"""
The graphs Gamma(a, b): ``a`` copies of the complete graph K_b glued at
every vertex in a tree-like way. ``b = 2`` gives the homogeneous tree of
degree ``a``.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..exceptions import BadParam, DomainError, NumericalFailure
from ..hypergroup import UNBOUNDED, FiniteMeasure, eval_polynomial, from_recurrence
from ..positivity.region import PositivityRegion
from .finite import _require_int

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TreeConstants:
    """
    Constants of the Gamma(a, b) polynomials.

    The tilde frame has the dual support in ``[-1, 1]``; ``T(x) = slope*x + intercept``
    maps it onto the natural frame of the recurrence.

    Attributes
    ----------
    s_tilde_0, s_tilde_1 : float
        Poles of the tilde-frame density
    s_0, s_1 : Fraction
        Images ``T(s_tilde_0) = -1/(b-1)`` and ``T(s_tilde_1) = 1``
    slope : float
        ``(2/a) sqrt((a-1)/(b-1))``
    intercept : Fraction
        ``(b-2)/(a(b-1))``
    hat_x_left : Fraction
        Left end of the bounded dual, ``(a+2b-ab-4)/(a(b-1))``
    support : tuple of float
        Support ``T([-1, 1])`` of the Plancherel density
    atom_weight : Fraction or None
        ``(b-a)/b`` at ``s_tilde_0`` when b > a
    """

    a: int
    b: int
    s_tilde_0: float
    s_tilde_1: float
    s_0: Fraction
    s_1: Fraction
    slope: float
    intercept: Fraction
    hat_x_left: Fraction
    support: tuple
    atom_weight: Optional[Fraction]

    def T(self, x):
        return self.slope * x + float(self.intercept)

    def T_inverse(self, y):
        return (y - float(self.intercept)) / self.slope

    def to_dict(self):
        return {
            "s_tilde_0": self.s_tilde_0,
            "s_tilde_1": self.s_tilde_1,
            "s_0": self.s_0,
            "s_1": self.s_1,
            "slope": self.slope,
            "intercept": self.intercept,
            "hat_x_left": self.hat_x_left,
            "support": list(self.support),
            "atom_weight": self.atom_weight,
        }


def _check_ab(a, b):
    _require_int("a", a, 2)
    _require_int("b", b, 2)


def tree_coefficients(a, b):
    """Constant recurrence triple ``((a-1)/a, (b-2)/(a(b-1)), 1/(a(b-1)))``."""
    return (Fraction(a - 1, a), Fraction(b - 2, a * (b - 1)), Fraction(1, a * (b - 1)))


def tree_constants(a, b):
    _check_ab(a, b)
    root = math.sqrt((a - 1) * (b - 1))
    slope = (2 / a) * math.sqrt((a - 1) / (b - 1))
    intercept = Fraction(b - 2, a * (b - 1))

    # T(m / (2 root)) = m / (a(b-1)) + intercept for each pole numerator m
    poles = (2 - a - b, a * b - a - b + 2)
    s_tilde = [m / (2 * root) for m in poles]
    s = [Fraction(m, a * (b - 1)) + intercept for m in poles]
    for tilde, natural in zip(s_tilde, s):
        if abs(slope * tilde + float(intercept) - float(natural)) > 1e-9:
            raise NumericalFailure(f"pole {tilde!r} does not map to {natural} for a={a}, b={b}")
    return TreeConstants(
        a=a,
        b=b,
        s_tilde_0=s_tilde[0],
        s_tilde_1=s_tilde[1],
        s_0=s[0],
        s_1=s[1],
        slope=slope,
        intercept=intercept,
        hat_x_left=Fraction(a + 2 * b - a * b - 4, a * (b - 1)),
        support=(float(intercept) - slope, float(intercept) + slope),
        atom_weight=Fraction(b - a, b) if b > a else None,
    )


def gamma_ab(a, b):
    """
    Unbounded hypergroup of Gamma(a, b) together with its tree constants.

    Parameters
    ----------
    a : int
        Number of cliques at each vertex, a >= 2
    b : int
        Clique size, b >= 2

    Returns
    -------
    tuple
        ``(PolynomialHypergroup, TreeConstants)``
    """
    _check_ab(a, b)
    triple = tree_coefficients(a, b)

    def generator(i):
        return (1, 0, 0) if i == 0 else triple

    H = from_recurrence([(1, 0, 0), triple], diameter=UNBOUNDED,
                        label=f"gamma:a={a},b={b}", generator=generator)
    return H, tree_constants(a, b)


def closed_form_g(a, b, m, n):
    """
    Convolution ``delta_m * delta_n`` on Gamma(a, b) from the counting formulas.

    With ``s = min(m, n)`` and ``d = |m - n|``:
    ``g_{d} = 1/(a (a-1)^(s-1) (b-1)^s)``,
    ``g_{d+2k+1} = (b-2)/(a (a-1)^(s-k-1) (b-1)^(s-k))`` for ``k <= s-1``,
    ``g_{d+2k+2} = (a-2)/(a (a-1)^(s-k-1) (b-1)^(s-k-1))`` for ``k <= s-2`` and
    ``g_{m+n} = (a-1)/a``.

    Returns
    -------
    FiniteMeasure
        Exact measure on ``[d, m+n]``
    """
    _check_ab(a, b)
    if m < 0 or n < 0:
        raise BadParam(f"indices must be nonnegative, got {m}, {n}")
    s, d = min(m, n), abs(m - n)
    if s == 0:
        return FiniteMeasure.from_mapping({d: Fraction(1)})

    weights = {d: Fraction(1, a * (a - 1) ** (s - 1) * (b - 1) ** s)}
    for k in range(s):
        weights[d + 2 * k + 1] = Fraction(b - 2, a * (a - 1) ** (s - k - 1) * (b - 1) ** (s - k))
    for k in range(s - 1):
        weights[d + 2 * k + 2] = Fraction(a - 2, a * (a - 1) ** (s - k - 1) * (b - 1) ** (s - k - 1))
    weights[m + n] = Fraction(a - 1, a)
    return FiniteMeasure.from_mapping(weights)


def _c(z, a, b):
    return ((a - 1) * z - 1 / z + (b - 2) * math.sqrt(a - 1) / math.sqrt(b - 1)) / (a * (z - 1 / z))


def tree_char_closed_form(a, b, n, z):
    """
    Closed form of the tilde-frame polynomial at ``(z + 1/z)/2``.

    ``P_tilde_n((z + 1/z)/2) = (c(z) z^n + c(1/z) z^-n) / ((a-1)(b-1))^(n/2)``
    with ``c(z) = ((a-1)z - 1/z + (b-2) sqrt(a-1)/sqrt(b-1)) / (a (z - 1/z))``.

    Raises
    ------
    DomainError
        For z in {0, 1, -1}, where ``c`` is undefined
    """
    _check_ab(a, b)
    if z == 0 or z == 1 or z == -1:
        raise DomainError(f"z = {z} is excluded from the closed form")
    z = float(z)
    scale = ((a - 1) * (b - 1)) ** (n / 2)
    return (_c(z, a, b) * z ** n + _c(1 / z, a, b) * z ** (-n)) / scale


def tree_polynomial(a, b, n, x):
    """Tilde-frame polynomial ``P_tilde_n(x) = P_n(T(x))`` by the recurrence."""
    H, constants = gamma_ab(a, b)
    return eval_polynomial(H, n, constants.T(x))


def predicted_gamma_region(a, b):
    """Graph-kernel positivity set ``[-1/(b-1), 1]`` of Gamma(a, b)."""
    _check_ab(a, b)
    return PositivityRegion.from_intervals([(-1.0 / (b - 1), 1.0)])


def character_kernel_region(a, b):
    """
    Set of x for which the character kernel ``P_{d(u,v)}(x)`` is PSD on Gamma(a, b).

    This is ``[s_0, 1] = [-1/(b-1), 1]`` in the natural frame.
    """
    return predicted_gamma_region(a, b)


def bounded_pd_transfers(a, b):
    """
    Whether every bounded positive definite function on the hypergroup gives a
    PSD graph kernel, i.e. whether the bounded dual starts at ``s_0``.

    True exactly when a = 2 or b = 2.
    """
    constants = tree_constants(a, b)
    return constants.hat_x_left == constants.s_0
