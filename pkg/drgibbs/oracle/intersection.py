"""
Empirical intersection numbers ``p_{i,j}^k`` of enumerated graphs.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from ..config import EXHAUSTIVE_PAIR_LIMIT, SAMPLE_SEED, SAMPLED_PAIRS
from ..exceptions import BadParam, NotDistanceRegular
from ..hypergroup import from_recurrence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntersectionTable:
    """
    Intersection numbers of a graph.

    Attributes
    ----------
    numbers : numpy.ndarray
        ``numbers[k, i, j] = #{z : d(x, z) = i, d(y, z) = j}`` for ``d(x, y) = k``
    distance_regular : bool
        Whether the counts agreed on every checked pair
    counterexample : tuple, optional
        ``(pair, other_pair, k)`` with different counts at the same distance
    pairs_checked : int
        Number of base pairs counted
    """

    numbers: np.ndarray
    distance_regular: bool
    counterexample: Optional[tuple] = None
    pairs_checked: int = 0

    @property
    def diameter(self):
        return self.numbers.shape[0] - 1

    def p(self, i, j, k):
        return int(self.numbers[k, i, j])

    @property
    def haar(self):
        return [self.p(i, i, 0) for i in range(self.diameter + 1)]

    def coefficients(self):
        """Triples ``(p_{1,i+1}^i, p_{1,i}^i, p_{1,i-1}^i) / omega_1``."""
        D = self.diameter
        degree = self.p(1, 1, 0)
        triples = []
        for i in range(D + 1):
            a = Fraction(self.p(1, i + 1, i), degree) if i < D else Fraction(0)
            b = Fraction(self.p(1, i, i), degree)
            c = Fraction(self.p(1, i - 1, i), degree) if i > 0 else Fraction(0)
            triples.append((a, b, c))
        return triples

    def association_identity_holds(self):
        """Check ``omega_k p_{i,j}^k = omega_i p_{k,j}^i`` for all i, j, k."""
        omega = np.array(self.haar, dtype=np.int64)
        lhs = omega[:, None, None] * self.numbers
        rhs = omega[None, :, None] * np.transpose(self.numbers, (1, 0, 2))
        return bool(np.array_equal(lhs, rhs))

    def to_dict(self):
        return {
            "distance_regular": self.distance_regular,
            "pairs_checked": self.pairs_checked,
            "numbers": self.numbers.tolist(),
        }


def _pair_counts(d, x, y, size):
    return np.bincount(d[x] * size + d[y], minlength=size * size).reshape(size, size)


def empirical_intersection_numbers(G):
    """
    Count ``p_{i,j}^k`` over base pairs of a finite graph.

    All pairs are counted for at most 512 vertices, otherwise 10000 pairs drawn
    with a fixed seed. Distance-regularity is reported, not raised.

    Parameters
    ----------
    G : ConcreteGraph
        Graph with its distance matrix

    Returns
    -------
    IntersectionTable
        Counts from the first pair seen at each distance, with the flag
    """
    d = G.distances.astype(np.int64)
    size = G.diameter + 1
    n = G.vertex_count
    if n <= EXHAUSTIVE_PAIR_LIMIT:
        pairs = ((x, y) for x in range(n) for y in range(n))
        total = n * n
    else:
        rng = np.random.default_rng(SAMPLE_SEED)
        drawn = rng.integers(0, n, size=(SAMPLED_PAIRS, 2))
        # every distance needs a representative
        firsts = [(0, int(np.nonzero(d[0] == k)[0][0])) for k in range(size)]
        pairs = firsts + [tuple(p) for p in drawn]
        total = len(pairs)

    numbers = np.zeros((size, size, size), dtype=np.int64)
    seen = {}
    for x, y in pairs:
        k = int(d[x, y])
        counts = _pair_counts(d, x, y, size)
        if k not in seen:
            seen[k] = (x, y)
            numbers[k] = counts
        elif not np.array_equal(numbers[k], counts):
            logger.warning("%s is not distance-regular at distance %d", G.family, k)
            return IntersectionTable(numbers, False, ((int(x), int(y)), seen[k], k), total)
    logger.debug("%s: %d pairs counted", G.family, total)
    return IntersectionTable(numbers, True, None, total)


def empirical_coefficients(G):
    """
    Recurrence triples from neighbour counts.

    For a pair ``(x, y)`` at distance i, the neighbours z of y split into
    ``d(x, z) = i-1, i, i+1``, giving ``c_i, b_i, a_i`` after division by the
    degree. Only base vertices y in ``G.interior`` are used when the graph is a
    ball; indices then run up to the largest distance seen from an interior vertex.

    Returns
    -------
    list
        Exact triples ``(a_i, b_i, c_i)``

    Raises
    ------
    NotDistanceRegular
        If two pairs at the same distance give different counts
    """
    d = G.distances.astype(np.int64)
    adjacency = G.adjacency
    bases = np.arange(G.vertex_count) if G.interior is None else np.asarray(G.interior)
    if len(bases) == 0:
        raise BadParam(f"{G.family} has no interior vertices")
    degree = int(adjacency[bases[0]].sum())

    found = {}
    for y in bases:
        y = int(y)
        neighbours = np.nonzero(adjacency[y])[0]
        steps = d[:, neighbours] - d[:, [y]]
        counts = np.stack([(steps == s).sum(axis=1) for s in (1, 0, -1)], axis=1)
        for i in np.unique(d[:, y]):
            members = np.nonzero(d[:, y] == i)[0]
            i = int(i)
            if i not in found:
                found[i] = (tuple(int(c) for c in counts[members[0]]), (int(members[0]), y))
            reference = np.array(found[i][0])
            bad = np.nonzero(np.any(counts[members] != reference, axis=1))[0]
            if len(bad):
                raise NotDistanceRegular(found[i][1], (int(members[bad[0]]), y), i)

    top = max(found)
    return [tuple(Fraction(c, degree) for c in found[i][0]) for i in range(top + 1)]


def empirical_hypergroup(G):
    """
    Hypergroup of a finite distance-regular graph from its counts.

    Raises
    ------
    NotDistanceRegular
        With the offending pairs when the counts are not constant
    BadParam
        For ball truncations, which are not distance-regular at the boundary
    """
    if G.interior is not None:
        raise BadParam("ball truncations have no finite hypergroup; use empirical_coefficients")
    table = empirical_intersection_numbers(G)
    if not table.distance_regular:
        pair, other, k = table.counterexample
        raise NotDistanceRegular(pair, other, k)
    return from_recurrence(table.coefficients(), label=G.family)
