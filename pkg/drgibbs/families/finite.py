"""
Finite distance-regular families: complete graphs, Hamming, Johnson and
Grassmann (q-Johnson) graphs.

Each constructor returns a validated ``PolynomialHypergroup``; the closed-form
Haar weights and dual points are exposed separately so that they can be
compared against the generic algebra.
"""

import logging
from fractions import Fraction
from math import comb

from ..exceptions import BadParam
from ..hypergroup import convolve, from_recurrence

logger = logging.getLogger(__name__)


def _require_int(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, int):
        raise BadParam(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise BadParam(f"{name} must be >= {minimum}, got {value}")


def _check_half(v, D):
    if 2 * D > v:
        raise BadParam(f"need 1 <= D <= v/2, got v={v}, D={D}")


def gaussian_binomial(n, k, q):
    """Exact Gaussian binomial coefficient ``[n choose k]_q``."""
    if k < 0 or k > n:
        return 0
    value = Fraction(1)
    for i in range(k):
        value *= Fraction(q ** (n - i) - 1, q ** (i + 1) - 1)
    return int(value)


def _coefficients_from_haar(a, omega):
    # c_i = omega_{i-1} a_{i-1} / omega_i, b_i = 1 - a_i - c_i
    triples = [(Fraction(1), Fraction(0), Fraction(0))]
    for i in range(1, len(a)):
        c = Fraction(omega[i - 1]) * a[i - 1] / omega[i]
        triples.append((a[i], 1 - a[i] - c, c))
    return triples


def complete(N):
    """
    Hypergroup of the complete graph on N vertices (D = 1).

    ``delta_1 * delta_1 = (1/(N-1)) delta_0 + ((N-2)/(N-1)) delta_1``.
    """
    _require_int("N", N, 2)
    coeffs = [(1, 0, 0), (0, Fraction(N - 2, N - 1), Fraction(1, N - 1))]
    return from_recurrence(coeffs, label=f"complete:N={N}")


def hamming(D, N):
    """
    Hypergroup of the Hamming graph H(D, N).

    Parameters
    ----------
    D : int
        Word length (diameter), D >= 1
    N : int
        Alphabet size, N >= 2

    Returns
    -------
    PolynomialHypergroup
        Coefficients ``a_i = (D-i)/D``, ``b_i = (N-2)/(N-1) * i/D``,
        ``c_i = 1/(N-1) * i/D``
    """
    _require_int("D", D, 1)
    _require_int("N", N, 2)
    coeffs = []
    for i in range(D + 1):
        a = Fraction(D - i, D)
        b = Fraction(N - 2, N - 1) * Fraction(i, D)
        c = Fraction(1, N - 1) * Fraction(i, D)
        coeffs.append((a, b, c))
    return from_recurrence(coeffs, label=f"hamming:D={D},N={N}")


def johnson_haar(v, D):
    return [comb(D, i) * comb(v - D, i) for i in range(D + 1)]


def johnson(v, D):
    """
    Hypergroup of the Johnson graph J(v, D) on D-subsets of a v-set.

    ``a_i = (D-i)(v-D-i) / (D(v-D))``; ``c_i`` and ``b_i`` follow from the Haar
    weights ``omega_i = C(D,i) C(v-D,i)``.
    """
    _require_int("D", D, 1)
    _require_int("v", v, 2)
    _check_half(v, D)
    a = [Fraction((D - i) * (v - D - i), D * (v - D)) for i in range(D + 1)]
    coeffs = _coefficients_from_haar(a, johnson_haar(v, D))
    return from_recurrence(coeffs, label=f"johnson:v={v},D={D}")


def octahedron():
    """The octahedron K_{2,2,2}, i.e. J(4, 2)."""
    H = johnson(4, 2)
    return from_recurrence(H.coeffs, label="octahedron")


def q_johnson_haar(q, v, D):
    return [q ** (i * i) * gaussian_binomial(D, i, q) * gaussian_binomial(v - D, i, q)
            for i in range(D + 1)]


def q_johnson(q, v, D):
    """
    Hypergroup of the Grassmann graph J_q(v, D) of D-subspaces of F_q^v.

    Parameters
    ----------
    q : int
        Field size used as a number, q >= 2 (primality is not needed here)
    v : int
        Ambient dimension
    D : int
        Subspace dimension, 1 <= D <= v/2

    Returns
    -------
    PolynomialHypergroup
        Coefficients ``a_i = (q^D - q^i)(q^(v-D) - q^i) / ((q^D - 1)(q^(v-D) - 1))``
        with ``b_i``, ``c_i`` from the Haar weights
        ``omega_i = q^(i^2) [D choose i]_q [v-D choose i]_q``
    """
    _require_int("q", q, 2)
    _require_int("D", D, 1)
    _require_int("v", v, 2)
    _check_half(v, D)
    denominator = (q ** D - 1) * (q ** (v - D) - 1)
    a = [Fraction((q ** D - q ** i) * (q ** (v - D) - q ** i), denominator) for i in range(D + 1)]
    coeffs = _coefficients_from_haar(a, q_johnson_haar(q, v, D))
    return from_recurrence(coeffs, label=f"qjohnson:q={q},v={v},D={D}")


def hamming_dual(D, N):
    return [1 - Fraction(N * x, D * (N - 1)) for x in range(D + 1)]


def johnson_dual(v, D):
    return [1 - Fraction(j * (v - j + 1), D * (v - D)) for j in range(D + 1)]


def q_johnson_dual(q, v, D):
    """
    Normalised eigenvalues ``theta_j / theta_0`` of the Grassmann graph.

    ``theta_j = q^(j+1) [D-j] [v-D-j] - [j]`` with ``[m] = (q^m - 1)/(q - 1)``,
    evaluated in exact integers so large ``v`` does not overflow.
    """
    def bracket(m):
        return (q ** m - 1) // (q - 1)

    theta = [q ** (j + 1) * bracket(D - j) * bracket(v - D - j) - bracket(j) for j in range(D + 1)]
    return [Fraction(t, theta[0]) for t in theta]


def wildberger_residuals(H):
    """
    Residuals of the order-3 hermitian hypergroup relations for D = 2.

    With ``alpha_1 = b_1`` and ``gamma_1``, ``gamma_2`` the weights of
    ``delta_1`` and ``delta_2`` in ``delta_1 * delta_2``, both
    ``alpha_1 - 1 + (1 + gamma_1 omega_2)/omega_1`` and
    ``alpha_2 - 1 + (1 + gamma_2 omega_1)/omega_2`` vanish, where
    ``alpha_2`` is the weight of ``delta_2`` in ``delta_2 * delta_2``.

    Returns
    -------
    tuple of Fraction
        The two residuals (both zero for a valid hypergroup)
    """
    if H.diameter != 2:
        raise BadParam("order-3 relations apply to hypergroups with D = 2")
    omega_1 = 1 / convolve(H, 1, 1)[0]
    omega_2 = 1 / convolve(H, 2, 2)[0]
    alpha_1 = convolve(H, 1, 1)[1]
    alpha_2 = convolve(H, 2, 2)[2]
    gamma_1 = convolve(H, 1, 2)[1]
    gamma_2 = convolve(H, 1, 2)[2]
    first = alpha_1 - 1 + (1 + gamma_1 * omega_2) / omega_1
    second = alpha_2 - 1 + (1 + gamma_2 * omega_1) / omega_2
    return first, second
