"""
Explicit isometric embeddings of a base graph into an enlarged family member.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..exceptions import BadParam, EmbeddingFailure
from ..oracle import canonical_label, enumerate_family, kernel_psd

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InclusionReport:
    """
    Result of an embedding check.

    Attributes
    ----------
    base : str
        Descriptor of the embedded graph
    target : str
        Descriptor of the enlarged graph
    pairs_checked : int
        Number of vertex pairs whose distance was compared
    image : numpy.ndarray
        Index in the target graph of every base vertex
    kernel_verdicts : dict, optional
        ``{"target": verdict, "restricted": verdict}`` at the supplied x
    """

    base: str
    target: str
    pairs_checked: int
    image: np.ndarray
    kernel_verdicts: Optional[dict] = None

    def to_dict(self):
        data = {"base": self.base, "target": self.target, "pairs_checked": self.pairs_checked}
        if self.kernel_verdicts:
            data["kernel"] = self.kernel_verdicts
        return data


def _hamming_map(word, n):
    return tuple(word) + (0,) * n


def _johnson_map(subset, v, n):
    # complement in {0..v-1}, add n new points, complement again in the
    # enlarged set of size v + 2n: x becomes x together with {v, ..., v+n-1}
    complement = set(range(v)) - set(subset)
    padded = complement | set(range(v + n, v + 2 * n))
    return frozenset(set(range(v + 2 * n)) - padded)


def _q_johnson_map(rows, q, v, n):
    basis = [list(row) + [0] * (2 * n) for row in rows]
    for k in range(n):
        extra = [0] * (v + 2 * n)
        extra[v + k] = 1
        basis.append(extra)
    return canonical_label(np.array(basis), q)


def vertex_map(spec, n):
    """
    The inclusion of the base graph into its n-th enlargement, as a label map.

    Hamming words are padded with zeros; Johnson sets are complemented, padded
    and complemented again; a subspace ``x`` of F_q^v goes to
    ``x + span(e_v, ..., e_{v+n-1})`` in F_q^(v+2n); gamma labels are kept.
    """
    p = spec.params
    if spec.kind in ("complete", "hamming"):
        return lambda word: _hamming_map(word, n)
    if spec.kind == "johnson":
        return lambda subset: _johnson_map(subset, p["v"], n)
    if spec.kind == "octahedron":
        return lambda subset: _johnson_map(subset, 4, n)
    if spec.kind == "qjohnson":
        return lambda rows: _q_johnson_map(rows, p["q"], p["v"], n)
    if spec.kind == "gamma":
        return lambda label: label
    raise BadParam(f"no inclusion map for {spec.kind}")


def verify_subgraph_inclusion(seq, n, x=None, radius=2):
    """
    Check that the base graph embeds isometrically into the n-th member.

    Parameters
    ----------
    seq : EmbeddingSequence
        Embedding sequence
    n : int
        Member index
    x : float, optional
        If given, the Gibbs kernel is also tested on the target graph and on
        the embedded vertex set
    radius : int, optional
        Ball radius for gamma families, by default 2

    Returns
    -------
    InclusionReport
        Pairs checked, image indices and optional kernel verdicts

    Raises
    ------
    EmbeddingFailure
        With the first pair whose distance changes
    """
    base_graph = enumerate_family(seq.base, radius=radius)
    target_spec = seq.member(n)
    target_graph = enumerate_family(target_spec, radius=radius)
    index = target_graph.index()
    mapping = vertex_map(seq.base, n)

    image = np.array([index[mapping(label)] for label in base_graph.vertices])
    restricted = target_graph.distances[np.ix_(image, image)]
    bad = np.argwhere(restricted != base_graph.distances)
    if len(bad):
        u, w = (int(k) for k in bad[0])
        raise EmbeddingFailure((u, w), int(base_graph.distances[u, w]), int(restricted[u, w]))

    verdicts = None
    if x is not None:
        target = kernel_psd(target_graph, x)
        embedded = kernel_psd(base_graph, x)
        verdicts = {"target": target.verdict.value, "restricted": embedded.verdict.value}
    pairs = base_graph.vertex_count * (base_graph.vertex_count - 1) // 2
    logger.debug("%s embeds into %s (%d pairs)", seq.base.descriptor, target_spec.descriptor, pairs)
    return InclusionReport(seq.base.descriptor, target_spec.descriptor, pairs, image, verdicts)
