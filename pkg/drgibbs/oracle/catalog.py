from ..exceptions import BadParam
from ..families import parse_family
from .finite_fields import enumerate_q_johnson
from .gamma_ball import build_gamma_ball
from .graphs import ConcreteGraph, enumerate_hamming, enumerate_johnson


def enumerate_family(spec, radius=None):
    """
    Concrete graph of a family descriptor or FamilySpec.

    Gamma families need a ball radius; custom recurrences have no graph.
    """
    if isinstance(spec, str):
        spec = parse_family(spec)
    p = spec.params
    if spec.kind == "complete":
        graph = enumerate_hamming(1, p["N"])
    elif spec.kind == "hamming":
        graph = enumerate_hamming(p["D"], p["N"])
    elif spec.kind == "johnson":
        graph = enumerate_johnson(p["v"], p["D"])
    elif spec.kind == "octahedron":
        graph = enumerate_johnson(4, 2)
    elif spec.kind == "qjohnson":
        graph = enumerate_q_johnson(p["q"], p["v"], p["D"])
    elif spec.kind == "gamma":
        if radius is None:
            raise BadParam("gamma families need a ball radius")
        return build_gamma_ball(p["a"], p["b"], radius)
    else:
        raise BadParam("custom recurrences have no vertex-level graph")
    return ConcreteGraph(spec.descriptor, graph.vertices, graph.distances)
