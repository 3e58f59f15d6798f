"""
Explicit vertex sets and distance matrices of Hamming and Johnson graphs.
"""

import itertools
import logging
from dataclasses import dataclass
from math import comb
from typing import Optional

import numpy as np

from ..config import MAX_ENUMERATED_VERTICES
from ..exceptions import BadParam, TooLarge

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ConcreteGraph:
    """
    A graph given by its vertices and all pairwise distances.

    Attributes
    ----------
    family : str
        Family descriptor the graph was built from
    vertices : list
        Vertex labels, in matrix order
    distances : numpy.ndarray
        Symmetric integer matrix of path distances
    interior : numpy.ndarray, optional
        Indices of vertices whose full neighbourhood is present (balls only)
    """

    family: str
    vertices: list
    distances: np.ndarray
    interior: Optional[np.ndarray] = None

    @property
    def vertex_count(self):
        return len(self.vertices)

    @property
    def diameter(self):
        return int(self.distances.max())

    @property
    def adjacency(self):
        return self.distances == 1

    def index(self):
        """Map from vertex label to matrix index."""
        return {v: k for k, v in enumerate(self.vertices)}

    def sphere_sizes(self, base=0):
        """Number of vertices at each distance from ``base``."""
        return np.bincount(self.distances[base], minlength=self.diameter + 1)

    def check_metric(self):
        """
        Verify symmetry, ``d(u, v) = 0`` iff ``u = v`` and the triangle inequality.

        Returns
        -------
        bool
            True if the distance matrix is a metric
        """
        d = self.distances
        if not np.array_equal(d, d.T) or np.any(np.diag(d) != 0):
            return False
        off = d + np.eye(len(d), dtype=d.dtype)
        if np.any(off == 0):
            return False
        # d(u, w) <= d(u, v) + d(v, w), one intermediate vertex at a time
        for v in range(len(d)):
            if np.any(d > d[:, [v]] + d[[v], :]):
                return False
        return True

    def to_dict(self):
        return {"family": self.family, "vertex_count": self.vertex_count, "diameter": self.diameter}


def _check_budget(count, limit=MAX_ENUMERATED_VERTICES):
    if count > limit:
        raise TooLarge(f"{count} vertices exceed the budget of {limit}")


def enumerate_hamming(D, N, max_vertices=MAX_ENUMERATED_VERTICES):
    """
    Hamming graph H(D, N): words of length D over N letters.

    Parameters
    ----------
    D : int
        Word length
    N : int
        Alphabet size
    max_vertices : int, optional
        Vertex budget, by default 4096

    Returns
    -------
    ConcreteGraph
        Distance = number of differing coordinates

    Raises
    ------
    TooLarge
        If ``N^D`` exceeds the budget
    """
    if D < 1 or N < 2:
        raise BadParam(f"Hamming graphs need D >= 1 and N >= 2, got D={D}, N={N}")
    _check_budget(N ** D, max_vertices)
    words = list(itertools.product(range(N), repeat=D))
    array = np.array(words, dtype=np.int16).reshape(len(words), D)
    distances = np.zeros((len(words), len(words)), dtype=np.int16)
    for k in range(D):
        distances += array[:, np.newaxis, k] != array[np.newaxis, :, k]
    logger.debug("enumerated H(%d, %d): %d vertices", D, N, len(words))
    return ConcreteGraph(f"hamming:D={D},N={N}", words, distances)


def enumerate_johnson(v, D, max_vertices=MAX_ENUMERATED_VERTICES):
    """
    Johnson graph J(v, D): D-subsets of ``{0, ..., v-1}``.

    Distance is ``D - |x & y|``, computed from the incidence matrix.
    """
    if not 1 <= D <= v / 2:
        raise BadParam(f"Johnson graphs need 1 <= D <= v/2, got v={v}, D={D}")
    _check_budget(comb(v, D), max_vertices)
    subsets = [frozenset(c) for c in itertools.combinations(range(v), D)]
    incidence = np.zeros((len(subsets), v), dtype=np.int16)
    for k, subset in enumerate(subsets):
        incidence[k, list(subset)] = 1
    distances = (D - incidence @ incidence.T).astype(np.int16)
    logger.debug("enumerated J(%d, %d): %d vertices", v, D, len(subsets))
    return ConcreteGraph(f"johnson:v={v},D={D}", subsets, distances)
