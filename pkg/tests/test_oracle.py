import itertools

import numpy as np
import pandas as pd
import pytest

from drgibbs.exceptions import BadParam, NonPrimeField, NotDistanceRegular, TooLarge
from drgibbs.families import gamma_ab, parse_family
from drgibbs.hypergroup import dual_space, haar_weights
from drgibbs.oracle import (
    ConcreteGraph,
    ball_size,
    build_gamma_ball,
    canonical_label,
    empirical_coefficients,
    empirical_hypergroup,
    empirical_intersection_numbers,
    enumerate_family,
    enumerate_hamming,
    enumerate_johnson,
    enumerate_q_johnson,
    kernel_matrix,
    kernel_psd,
    rank_mod_p,
    rref_mod_p,
)
from drgibbs.positivity import Verdict, gibbs_check_finite
from drgibbs.utils import write_distance_csv

FINITE_DESCRIPTORS = [
    "complete:N=4",
    "hamming:D=2,N=3",
    "hamming:D=3,N=2",
    "johnson:v=6,D=3",
    "octahedron",
    "qjohnson:q=2,v=4,D=2",
]

# x = -1, -0.99, ..., 1, region endpoints included
GRID = np.arange(-100, 101) / 100


def _path_graph(n):
    idx = np.arange(n)
    return ConcreteGraph(f"path:{n}", list(range(n)), np.abs(idx[:, None] - idx[None, :]).astype(np.int16))


@pytest.mark.parametrize("descriptor", FINITE_DESCRIPTORS)
def test_enumerated_graphs_are_metric(descriptor):
    G = enumerate_family(descriptor)
    spec = parse_family(descriptor)
    assert G.vertex_count == spec.vertex_count
    assert G.diameter == spec.diameter
    assert G.check_metric()


@pytest.mark.parametrize("descriptor", FINITE_DESCRIPTORS)
def test_sphere_sizes_are_haar_weights(descriptor):
    G = enumerate_family(descriptor)
    omega = haar_weights(parse_family(descriptor).build())
    for base in (0, G.vertex_count - 1):
        assert G.sphere_sizes(base).tolist() == omega


@pytest.mark.parametrize("descriptor", FINITE_DESCRIPTORS + ["qjohnson:q=3,v=4,D=2"])
def test_empirical_hypergroup_matches_family(descriptor):
    G = enumerate_family(descriptor)
    H = empirical_hypergroup(G)
    assert H.coeffs == parse_family(descriptor).build().coeffs


def test_intersection_table(j2):
    G = enumerate_family("qjohnson:q=2,v=4,D=2")
    table = empirical_intersection_numbers(G)
    assert table.distance_regular
    assert table.haar == [1, 18, 16]
    assert table.association_identity_holds()
    assert table.pairs_checked == 35 * 35
    assert table.coefficients() == list(j2.coeffs)


def test_grassmann_distances_match_ranks():
    G = enumerate_q_johnson(2, 4, 2)
    bases = [np.array(label) for label in G.vertices]
    for x, y in itertools.combinations(range(G.vertex_count), 2):
        rank = rank_mod_p(np.vstack([bases[x], bases[y]]), 2)
        assert G.distances[x, y] == rank - 2, (x, y)


def test_grassmann_lines_near_the_vertex_cap():
    G = enumerate_q_johnson(3, 8, 1)
    assert G.vertex_count == 3280
    assert (np.diag(G.distances) == 0).all()
    assert (G.distances + np.eye(G.vertex_count, dtype=np.int16) == 1).all()


def test_grassmann_sphere_sizes_over_f5():
    G = enumerate_q_johnson(5, 4, 2)
    assert G.vertex_count == 806
    omega = haar_weights(parse_family("qjohnson:q=5,v=4,D=2").build())
    for base in (0, 805):
        assert G.sphere_sizes(base).tolist() == omega


def test_path_is_not_distance_regular():
    G = _path_graph(4)
    assert G.check_metric()
    assert not empirical_intersection_numbers(G).distance_regular
    with pytest.raises(NotDistanceRegular) as err:
        empirical_hypergroup(G)
    assert err.value.distance == 1


def test_broken_metric_is_detected():
    d = np.array([[0, 1, 3], [1, 0, 1], [3, 1, 0]], dtype=np.int16)
    assert not ConcreteGraph("broken", [0, 1, 2], d).check_metric()


def test_enumeration_limits():
    with pytest.raises(NonPrimeField):
        enumerate_q_johnson(4, 4, 2)
    with pytest.raises(TooLarge):
        enumerate_hamming(13, 2)
    with pytest.raises(TooLarge):
        enumerate_q_johnson(3, 6, 3)
    with pytest.raises(BadParam):
        enumerate_johnson(5, 3)
    with pytest.raises(BadParam):
        enumerate_family("custom:1,0,0;1/2,1/4,1/4;0,1/2,1/2")
    with pytest.raises(BadParam):
        enumerate_family("gamma:a=3,b=3")


def test_linear_algebra_mod_p():
    rref, pivots = rref_mod_p([[1, 1, 0], [1, 0, 1]], 2)
    assert pivots == (0, 1)
    assert rref.tolist() == [[1, 0, 1], [0, 1, 1]]
    assert rank_mod_p([[1, 2], [2, 4]], 3) == 1
    assert rank_mod_p([[1, 2], [2, 4]], 5) == 1
    assert canonical_label([[0, 1, 1], [1, 1, 0]], 2) == canonical_label([[1, 0, 1], [0, 1, 1]], 2)


@pytest.mark.parametrize("a, b, r", [(3, 3, 0), (3, 3, 3), (3, 2, 4), (2, 4, 2)])
def test_gamma_ball_sizes(a, b, r):
    G = build_gamma_ball(a, b, r)
    assert G.vertex_count == ball_size(a, b, r)
    assert G.check_metric()
    H, _ = gamma_ab(a, b)
    assert G.sphere_sizes(0).tolist() == haar_weights(H, r)


def test_gamma_ball_limits():
    with pytest.raises(TooLarge):
        build_gamma_ball(3, 3, 7)
    with pytest.raises(BadParam):
        build_gamma_ball(1, 3, 2)


def test_gamma_ball_coefficients(gamma33):
    G = build_gamma_ball(3, 3, 3)
    triples = empirical_coefficients(G)
    for i in range(4):
        assert triples[i] == gamma33.coefficients(i)
    with pytest.raises(BadParam):
        empirical_hypergroup(G)


@pytest.mark.parametrize("descriptor", FINITE_DESCRIPTORS + [
    "complete:N=10",
    "hamming:D=4,N=2",
    "hamming:D=3,N=3",
    "johnson:v=8,D=3",
])
def test_kernel_agrees_with_bochner(descriptor):
    G = enumerate_family(descriptor)
    H = parse_family(descriptor).build()
    for x in GRID:
        assert kernel_psd(G, x).verdict == gibbs_check_finite(H, x).verdict, x


def test_kernel_witness():
    G = enumerate_family("hamming:D=2,N=3")
    certificate = kernel_psd(G, -0.6)
    assert certificate.verdict is Verdict.NOT_PSD
    vector = np.array(certificate.witness["vector"])
    K = kernel_matrix(G, -0.6)
    assert vector @ K @ vector == pytest.approx(certificate.witness["eigenvalue"])


def test_character_kernels_are_positive(hamming33):
    G = enumerate_family("hamming:D=3,N=3")
    dual = dual_space(hamming33)
    for j in range(4):
        assert kernel_psd(G, values=dual.character_table[:, j]).is_psd
    with pytest.raises(BadParam):
        kernel_matrix(G, values=[1.0, 0.5])
    with pytest.raises(BadParam):
        kernel_matrix(G)


def test_tree_ball_kernels_are_positive():
    G = build_gamma_ball(3, 2, 4)
    for x in np.linspace(-1.0, 1.0, 21):
        assert kernel_psd(G, x).is_psd, x


def test_gamma_ball_kernels_follow_the_region():
    for r in range(1, 5):
        G = build_gamma_ball(3, 3, r)
        for x in (-0.45, 0.0, 0.5, 1.0):
            assert kernel_psd(G, x).is_psd, (r, x)
    # a single triangle already fails below -1/2
    assert kernel_psd(build_gamma_ball(3, 3, 1), -0.75).verdict is Verdict.NOT_PSD


def test_complete_graph_kernel_boundary():
    G = enumerate_family("complete:N=5")
    assert G.vertices == enumerate_hamming(1, 5).vertices
    assert kernel_psd(G, -0.2).is_psd
    assert not kernel_psd(G, -0.3).is_psd


def test_distance_export(tmp_path):
    G = enumerate_family("octahedron")
    path = write_distance_csv(G, str(tmp_path / "octahedron.csv"))
    frame = pd.read_csv(path)
    assert frame.shape == (6, 7)
    assert frame.columns[0] == "vertex"
    assert frame.iloc[:, 1:].to_numpy().max() == 2
