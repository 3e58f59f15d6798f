"""
Gram-matrix tests ``M_ij = sum_k g_ij^k f(k)`` for finite and unbounded hypergroups.
"""

import itertools
import logging

import numpy as np
import sympy
from scipy.optimize import brentq

from ..config import EIGEN_SLACK, ENDPOINT_TOLERANCE, TRUNCATION_GRID_STEP
from ..exceptions import BadParam
from ..hypergroup import convolve
from ..utils.conversions import is_exact
from .bochner import Certificate, Verdict
from .region import PositivityRegion

logger = logging.getLogger(__name__)

# all principal minors are enumerated up to this size
EXACT_MINOR_LIMIT = 8


def gram_matrix(H, f, n):
    """
    Gram matrix of a function on the hypergroup.

    Parameters
    ----------
    H : PolynomialHypergroup
        Hypergroup (finite or unbounded)
    f : callable or sequence
        Function on the indices; needs values up to ``2n`` (or D)
    n : int
        Size parameter, the matrix is ``(n+1) x (n+1)``

    Returns
    -------
    numpy.ndarray
        Object array of Fractions when every value of f is exact, float64 otherwise
    """
    H.check_index(n)
    fn = f if callable(f) else f.__getitem__
    entries = [[convolve(H, i, j).integrate(fn) for j in range(n + 1)] for i in range(n + 1)]
    if all(is_exact(v) for row in entries for v in row):
        return np.array(entries, dtype=object)
    return np.array(entries, dtype=np.float64)


def _minor(M, indices):
    sub = sympy.Matrix([[sympy.Rational(M[i][j].numerator, M[i][j].denominator) for j in indices]
                        for i in indices])
    return sub.det(method="bareiss")


def gram_psd_check(M, tolerance=EIGEN_SLACK, x=None):
    """
    Positive semidefiniteness of a symmetric Gram matrix.

    Exact matrices up to 8 x 8 are decided by the signs of all principal minors
    (leading minors alone do not decide semidefiniteness). Float matrices, and
    larger exact ones, pass when the smallest eigenvalue is at least
    ``-tolerance * ||M||``.

    Parameters
    ----------
    M : numpy.ndarray
        Symmetric matrix (object array of Fractions or float64)
    tolerance : float, optional
        Relative eigenvalue slack, by default 1e-8

    Returns
    -------
    Certificate
        NotPSD certificates carry the violating index set and the negative
        minor or eigenvalue
    """
    size = M.shape[0]
    x = None if x is None else float(x)
    if M.dtype == object and size <= EXACT_MINOR_LIMIT:
        rows = M.tolist()
        for k in range(1, size + 1):
            for indices in itertools.combinations(range(size), k):
                value = _minor(rows, indices)
                if value < 0:
                    witness = {"indices": list(indices), "minor": str(value)}
                    return Certificate(Verdict.NOT_PSD, "gram", x=x, witness=witness,
                                       margin=float(value))
        return Certificate(Verdict.PSD, "gram", x=x, margin=0.0)

    A = np.asarray(M, dtype=np.float64)
    eigenvalues, vectors = np.linalg.eigh(A)
    scale = max(np.abs(eigenvalues).max(), np.finfo(float).tiny)
    smallest = float(eigenvalues[0])
    if smallest >= -tolerance * scale:
        return Certificate(Verdict.PSD, "gram", x=x, margin=smallest)
    witness = {"indices": list(range(size)), "eigenvalue": smallest,
               "vector": vectors[:, 0].tolist()}
    return Certificate(Verdict.NOT_PSD, "gram", x=x, witness=witness, margin=smallest)


def gram_determinant(H, n=None):
    """
    Determinant of the Gram matrix of ``f_x(i) = x^i`` as an exact polynomial.

    Parameters
    ----------
    H : PolynomialHypergroup
        Hypergroup
    n : int, optional
        Size parameter; by default the diameter

    Returns
    -------
    sympy.Poly
        Polynomial in the symbol ``x`` with rational coefficients
    """
    if n is None:
        if not H.finite:
            raise BadParam("n is required for an unbounded hypergroup")
        n = H.diameter
    x = sympy.Symbol("x")
    rows = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            measure = convolve(H, i, j)
            row.append(sum(sympy.Rational(w.numerator, w.denominator) * x ** k for k, w in measure))
        rows.append(row)
    det = sympy.Matrix(rows).det(method="bareiss")
    return sympy.Poly(sympy.expand(det), x)


def coefficient_stack(H, n):
    """
    Matrices ``C_k`` with ``M(x) = sum_k x^k C_k`` for the Gram matrix of ``f_x``.

    Returns
    -------
    numpy.ndarray
        Array of shape ``(2n+1, n+1, n+1)``
    """
    stack = np.zeros((2 * n + 1, n + 1, n + 1))
    for i in range(n + 1):
        for j in range(i, n + 1):
            for k, w in convolve(H, i, j):
                stack[k, i, j] = stack[k, j, i] = float(w)
    return stack


def _margins(stack, xs, tolerance):
    powers = xs[:, np.newaxis] ** np.arange(stack.shape[0])[np.newaxis, :]
    matrices = np.einsum("gk,kij->gij", powers, stack)
    eigenvalues = np.linalg.eigvalsh(matrices)
    scale = np.maximum(np.abs(eigenvalues).max(axis=1), np.finfo(float).tiny)
    return eigenvalues[:, 0] + tolerance * scale


def truncated_region(H, n, grid_step=TRUNCATION_GRID_STEP, tolerance=EIGEN_SLACK,
                     endpoint_tolerance=ENDPOINT_TOLERANCE):
    """
    Set of x where the ``(n+1) x (n+1)`` Gram matrix of ``f_x`` is PSD.

    This is a necessary condition only: the result contains the set of x for
    which ``f_x`` is positive definite on the hypergroup and shrinks as n grows.
    The matrices are evaluated on a grid in one batched eigensolve and the
    boundaries refined by root finding on the eigenvalue margin.

    Parameters
    ----------
    H : PolynomialHypergroup
        Hypergroup, usually unbounded
    n : int
        Truncation level
    grid_step : float, optional
        Spacing of the scan grid, by default 1e-3
    tolerance : float, optional
        Relative eigenvalue slack, by default 1e-8
    endpoint_tolerance : float, optional
        Accuracy of refined endpoints, by default 1e-8

    Returns
    -------
    PositivityRegion
        Region with claim "outer"
    """
    if n < 0:
        raise BadParam(f"truncation level must be nonnegative, got {n}")
    H.check_index(n)
    stack = coefficient_stack(H, n)
    count = int(round(2.0 / grid_step)) + 1
    xs = np.union1d(np.linspace(-1.0, 1.0, count), [0.0, 1.0])
    ok = _margins(stack, xs, tolerance) >= 0

    def margin(x):
        return float(_margins(stack, np.array([x]), tolerance)[0])

    def refine(inside, outside):
        lo, hi = sorted((inside, outside))
        return brentq(margin, lo, hi, xtol=endpoint_tolerance)

    intervals, points = [], []
    k = 0
    while k < len(xs):
        if not ok[k]:
            k += 1
            continue
        start = k
        while k + 1 < len(xs) and ok[k + 1]:
            k += 1
        lo = xs[start] if start == 0 else refine(xs[start], xs[start - 1])
        hi = xs[k] if k == len(xs) - 1 else refine(xs[k], xs[k + 1])
        if hi - lo > endpoint_tolerance:
            intervals.append((lo, hi))
        else:
            points.append(xs[start])
        k += 1

    logger.debug("truncated region at level %d: %d intervals", n, len(intervals))
    return PositivityRegion.from_intervals(intervals, points, endpoint_tolerance, claim="outer")
