from fractions import Fraction
from math import comb

from ..exceptions import BadParam
from ..utils.conversions import to_fraction


def krawtchouk(i, x, D, p):
    """
    Krawtchouk polynomial ``K_i(x; D, p) = 2F1(-i, -x; -D; 1/p)``.

    The terminating hypergeometric sum is evaluated term by term, so the result
    is an exact rational for rational ``p``.

    Parameters
    ----------
    i, x : int
        Degree and argument, ``0 <= i, x <= D``
    D : int
        Length parameter
    p : int, Fraction or str
        Probability parameter, ``0 < p <= 1``

    Returns
    -------
    Fraction
        Exact value of ``K_i(x)``
    """
    p = to_fraction(p)
    if not 0 < p <= 1:
        raise BadParam(f"p must lie in (0, 1], got {p}")
    if not (0 <= i <= D and 0 <= x <= D):
        raise BadParam(f"need 0 <= i, x <= D, got i={i}, x={x}, D={D}")

    total = term = Fraction(1)
    for k in range(min(i, x)):
        # ratio of consecutive terms of the hypergeometric series
        term *= Fraction((-i + k) * (-x + k), (-D + k) * (k + 1)) / p
        total += term
    return total


def krawtchouk_weight(x, D, p):
    """Binomial weight ``C(D, x) p^x (1-p)^(D-x)``."""
    p = to_fraction(p)
    return comb(D, x) * p ** x * (1 - p) ** (D - x)


def krawtchouk_norm(l, D, p):
    """Squared norm ``C(D, l)^-1 ((1-p)/p)^l`` under the binomial weight."""
    p = to_fraction(p)
    return Fraction(1, comb(D, l)) * ((1 - p) / p) ** l


def krawtchouk_gram(D, p):
    """
    Exact Gram matrix ``sum_x K_l(x) K_m(x) w(x)`` for ``l, m = 0..D``.

    Returns
    -------
    list of list of Fraction
        Diagonal with entries ``krawtchouk_norm(l, D, p)``
    """
    values = [[krawtchouk(l, x, D, p) for x in range(D + 1)] for l in range(D + 1)]
    weights = [krawtchouk_weight(x, D, p) for x in range(D + 1)]
    return [
        [sum(values[l][x] * values[m][x] * weights[x] for x in range(D + 1)) for m in range(D + 1)]
        for l in range(D + 1)
    ]
