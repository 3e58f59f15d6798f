"""
Subspaces of F_p^v in reduced row echelon form and the Grassmann graph J_p(v, D).
"""

import itertools
import logging

import numpy as np
import sympy
from scipy import sparse

from ..config import MAX_ENUMERATED_VERTICES, SAMPLE_SEED
from ..exceptions import BadParam, NonPrimeField, NumericalFailure, TooLarge
from ..families.finite import gaussian_binomial
from .graphs import ConcreteGraph

logger = logging.getLogger(__name__)

# pairs re-checked by rank computation
_RANK_SAMPLE = 200


def _check_prime(p):
    if not sympy.isprime(p):
        raise NonPrimeField(f"subspace enumeration needs a prime field size, got q={p}")


def rref_mod_p(matrix, p):
    """
    Reduced row echelon form over F_p.

    Parameters
    ----------
    matrix : array_like
        Integer matrix
    p : int
        Prime

    Returns
    -------
    tuple
        ``(rref, pivots)``: the nonzero rows as an int array and their pivot columns
    """
    A = np.array(matrix, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(A[r:, c])[0]
        if len(nonzero) == 0:
            continue
        k = r + nonzero[0]
        A[[r, k]] = A[[k, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        pivots.append(c)
        r += 1
    return A[:r], tuple(pivots)


def rank_mod_p(matrix, p):
    return len(rref_mod_p(matrix, p)[1])


def canonical_label(basis, p):
    """Hashable label of the span of ``basis``: its RREF rows as tuples."""
    rref, _ = rref_mod_p(basis, p)
    return tuple(tuple(int(a) for a in row) for row in rref)


def rref_subspaces(p, v, D):
    """
    Enumerate all D-dimensional subspaces of F_p^v.

    One RREF matrix per pivot pattern and assignment of the free entries
    (entries right of a pivot in columns without a pivot).

    Yields
    ------
    numpy.ndarray
        ``(D, v)`` basis matrix in reduced row echelon form
    """
    for pivots in itertools.combinations(range(v), D):
        free = [(r, c) for r in range(D) for c in range(pivots[r] + 1, v) if c not in pivots]
        for values in itertools.product(range(p), repeat=len(free)):
            basis = np.zeros((D, v), dtype=np.int64)
            basis[range(D), pivots] = 1
            for (r, c), value in zip(free, values):
                basis[r, c] = value
            yield basis


def span_indices(basis, p):
    """Integer codes ``sum_i x_i p^i`` of all vectors in the span of ``basis``."""
    D, v = basis.shape
    coefficients = np.array(list(itertools.product(range(p), repeat=D)), dtype=np.int64).reshape(-1, D)
    vectors = (coefficients @ basis) % p
    return vectors @ (p ** np.arange(v, dtype=np.int64))


def _span_distances(bases, q, v, D):
    # shared nonzero vectors of two D-spaces number q^dim - 1
    rows, cols = [], []
    for k, basis in enumerate(bases):
        codes = span_indices(basis, q)
        codes = codes[codes != 0]
        rows.append(np.full(len(codes), k, dtype=np.int64))
        cols.append(codes)
    rows, cols = np.concatenate(rows), np.concatenate(cols)
    incidence = sparse.csr_matrix((np.ones(len(rows), dtype=np.int64), (rows, cols)),
                                  shape=(len(bases), q ** v))
    shared = (incidence @ incidence.T).toarray() + 1

    powers = q ** np.arange(D + 1, dtype=np.int64)
    dims = np.minimum(np.searchsorted(powers, shared), D)
    if not np.array_equal(powers[dims], shared):
        raise NumericalFailure("shared vector counts are not powers of the field size")
    return (D - dims).astype(np.int16)


def enumerate_q_johnson(q, v, D, max_vertices=MAX_ENUMERATED_VERTICES):
    """
    Grassmann graph of D-subspaces of F_q^v for prime q.

    The distance ``D - dim(x & y)`` is read off the number ``q^dim - 1`` of
    common nonzero vectors of the two spans, counted with a sparse
    subspace-by-vector incidence matrix; a sample of pairs is re-checked
    with ``dim(x & y) = 2D - rank`` of the stacked bases.

    Parameters
    ----------
    q : int
        Prime field size
    v : int
        Ambient dimension
    D : int
        Subspace dimension, ``1 <= D <= v/2``
    max_vertices : int, optional
        Vertex budget, by default 4096

    Returns
    -------
    ConcreteGraph
        Vertices labelled by their RREF rows

    Raises
    ------
    NonPrimeField
        If q is not prime
    TooLarge
        If the Gaussian binomial exceeds the budget
    """
    _check_prime(q)
    if not 1 <= D <= v / 2:
        raise BadParam(f"Grassmann graphs need 1 <= D <= v/2, got v={v}, D={D}")
    count = gaussian_binomial(v, D, q)
    if count > max_vertices:
        raise TooLarge(f"{count} subspaces exceed the budget of {max_vertices}")

    bases = list(rref_subspaces(q, v, D))
    distances = _span_distances(bases, q, v, D)

    rng = np.random.default_rng(SAMPLE_SEED)
    for x, y in rng.integers(0, len(bases), size=(min(_RANK_SAMPLE, len(bases) ** 2), 2)):
        rank = rank_mod_p(np.vstack([bases[x], bases[y]]), q)
        if D - (2 * D - rank) != distances[x, y]:
            raise NumericalFailure(f"span count and rank disagree for subspaces {x}, {y}")

    labels = [tuple(tuple(int(a) for a in row) for row in basis) for basis in bases]
    logger.debug("enumerated J_%d(%d, %d): %d vertices", q, v, D, len(labels))
    return ConcreteGraph(f"qjohnson:q={q},v={v},D={D}", labels, distances)
