from fractions import Fraction
from numbers import Rational

import numpy as np


def to_fraction(value):
    """
    Convert an exact scalar to a ``Fraction``.

    Parameters
    ----------
    value : int, Fraction or str
        Exact number; strings may be written as ``"p/q"`` or as a decimal literal

    Returns
    -------
    Fraction
        The same number as an exact rational

    Raises
    ------
    TypeError
        If ``value`` is a float or another inexact type
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def is_exact(value):
    """Return True for ints and rationals (the exact arithmetic path)."""
    return isinstance(value, Rational) and not isinstance(value, bool)


def fraction_to_str(value):
    """Render an exact rational as ``"p/q"`` (or ``"p"`` for integers)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_float_array(values):
    """
    Convert a sequence of exact or floating numbers to a float64 array.

    Parameters
    ----------
    values : sequence
        Ints, Fractions or floats

    Returns
    -------
    numpy.ndarray
        One-dimensional float64 array
    """
    return np.array([float(v) for v in values], dtype=np.float64)


def match_type(coefficient, x):
    """Return ``coefficient`` in the arithmetic of ``x``: exact for rationals, float otherwise."""
    if is_exact(x):
        return coefficient
    return float(coefficient)
