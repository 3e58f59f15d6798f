"""
Finite balls in Gamma(a, b).

Every vertex lies in ``a`` cliques of size ``b`` and the cliques are glued
tree-like. A vertex is labelled by its path from the root: a tuple of
``(clique, member)`` steps, where the root owns cliques ``0..a-1`` and every
other vertex owns its ``a-1`` cliques away from the root.
"""

import logging

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import shortest_path

from ..config import MAX_BALL_VERTICES
from ..exceptions import BadParam, DrgibbsError, TooLarge
from .graphs import ConcreteGraph

logger = logging.getLogger(__name__)

# rows per shortest-path call
_CHUNK = 1024


def ball_size(a, b, r):
    """Number of vertices within distance r of a vertex of Gamma(a, b)."""
    total, sphere = 1, a * (b - 1)
    for _ in range(r):
        total += sphere
        sphere *= (a - 1) * (b - 1)
    return total


def build_gamma_ball(a, b, r, max_vertices=MAX_BALL_VERTICES):
    """
    Ball of radius r around a root of Gamma(a, b).

    Parameters
    ----------
    a : int
        Cliques per vertex, a >= 2
    b : int
        Clique size, b >= 2
    r : int
        Radius
    max_vertices : int, optional
        Vertex budget, by default 20000

    Returns
    -------
    ConcreteGraph
        Distances by breadth-first search; ``interior`` holds the vertices at
        depth at most ``r - 1``, whose neighbourhoods are complete

    Raises
    ------
    TooLarge
        If the ball exceeds the budget
    """
    if a < 2 or b < 2 or r < 0:
        raise BadParam(f"need a, b >= 2 and r >= 0, got a={a}, b={b}, r={r}")
    size = ball_size(a, b, r)
    if size > max_vertices:
        raise TooLarge(f"ball of {size} vertices exceeds the budget of {max_vertices}")

    labels = [()]
    depths = [0]
    rows, cols = [], []
    frontier = [0]
    for depth in range(1, r + 1):
        next_frontier = []
        for parent in frontier:
            cliques = a if depth == 1 else a - 1
            for clique in range(cliques):
                members = []
                for member in range(1, b):
                    labels.append(labels[parent] + ((clique, member),))
                    depths.append(depth)
                    members.append(len(labels) - 1)
                group = [parent] + members
                for i in group:
                    for j in group:
                        if i != j:
                            rows.append(i)
                            cols.append(j)
                next_frontier.extend(members)
        frontier = next_frontier

    n = len(labels)
    adjacency = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n)).tocsr()
    distances = np.empty((n, n), dtype=np.int16)
    for start in range(0, n, _CHUNK):
        block = np.arange(start, min(start + _CHUNK, n))
        distances[block] = shortest_path(adjacency, directed=False, unweighted=True, indices=block)
    depths = np.array(depths)
    if not np.array_equal(distances[0], depths):
        raise DrgibbsError("breadth-first distances from the root differ from construction depths")

    logger.debug("Gamma(%d, %d) ball of radius %d: %d vertices", a, b, r, n)
    interior = np.nonzero(depths <= r - 1)[0]
    return ConcreteGraph(f"gamma:a={a},b={b}", labels, distances, interior=interior)
