import logging

import numpy as np

from ..config import KERNEL_SLACK
from ..exceptions import BadParam, NumericalFailure
from ..positivity.bochner import Certificate, Verdict

logger = logging.getLogger(__name__)


def kernel_matrix(G, x=None, values=None):
    """
    Kernel ``K(u, v) = x^d(u,v)``, or ``values[d(u, v)]`` when values are given.
    """
    if (x is None) == (values is None):
        raise BadParam("give exactly one of x and values")
    if values is not None:
        table = np.asarray([float(v) for v in values])
        if len(table) <= G.diameter:
            raise BadParam(f"need kernel values up to distance {G.diameter}")
        return table[G.distances]
    return np.power(float(x), G.distances.astype(np.int64)).astype(np.float64)


def kernel_psd(G, x=None, tolerance=KERNEL_SLACK, values=None):
    """
    Vertex-level positive semidefiniteness of a distance kernel.

    Parameters
    ----------
    G : ConcreteGraph
        Graph with its distance matrix
    x : float, optional
        Parameter of the Gibbs kernel ``x^d(u,v)``
    tolerance : float, optional
        The smallest eigenvalue must be at least ``-tolerance * |V|``, by default 1e-10
    values : sequence, optional
        Kernel values by distance, instead of x (e.g. a character ``P_d(s)``)

    Returns
    -------
    Certificate
        NotPSD certificates carry the smallest eigenvalue and its eigenvector

    Raises
    ------
    NumericalFailure
        If the eigensolver fails
    """
    K = kernel_matrix(G, x, values)
    try:
        eigenvalues, vectors = np.linalg.eigh(K)
    except np.linalg.LinAlgError as err:
        raise NumericalFailure(f"eigensolver failed on {G.family}: {err}") from err

    smallest = float(eigenvalues[0])
    x = None if x is None else float(x)
    if smallest >= -tolerance * G.vertex_count:
        return Certificate(Verdict.PSD, "kernel", x=x, margin=smallest)
    logger.debug("%s: kernel eigenvalue %.3e at x=%s", G.family, smallest, x)
    witness = {"eigenvalue": smallest, "vector": vectors[:, 0].tolist()}
    return Certificate(Verdict.NOT_PSD, "kernel", x=x, witness=witness, margin=smallest)
