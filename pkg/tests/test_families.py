import math
from fractions import Fraction

import numpy as np
import pytest

from drgibbs import families
from drgibbs.exceptions import BadParam, DomainError
from drgibbs.families import (
    FamilySpec,
    bounded_pd_transfers,
    character_kernel_region,
    closed_form_g,
    gamma_ab,
    krawtchouk,
    krawtchouk_gram,
    krawtchouk_norm,
    parse_family,
    tree_char_closed_form,
    tree_constants,
    tree_polynomial,
    wildberger_residuals,
)
from drgibbs.hypergroup import convolve, dual_space, eval_polynomial, haar_weights


@pytest.mark.parametrize("N", range(2, 11))
def test_complete_graph(N):
    H = families.complete(N)
    assert H.diameter == 1
    assert H.coefficients(1) == (0, Fraction(N - 2, N - 1), Fraction(1, N - 1))
    assert haar_weights(H) == [1, N - 1]


@pytest.mark.parametrize(
    "descriptor",
    [
        "hamming:D=3,N=3",
        "hamming:D=4,N=2",
        "johnson:v=6,D=3",
        "johnson:v=9,D=4",
        "qjohnson:q=2,v=4,D=2",
        "qjohnson:q=3,v=6,D=3",
        "qjohnson:q=4,v=5,D=2",
        "octahedron",
    ],
)
def test_haar_weights_match_closed_form(descriptor):
    spec = parse_family(descriptor)
    omega = haar_weights(spec.build())
    assert omega == spec.haar_closed_form()
    assert sum(omega) == spec.vertex_count


@pytest.mark.parametrize(
    "descriptor",
    [
        "complete:N=5",
        "hamming:D=3,N=3",
        "hamming:D=3,N=5",
        "johnson:v=6,D=3",
        "johnson:v=8,D=3",
        "qjohnson:q=2,v=4,D=2",
        "qjohnson:q=2,v=6,D=3",
        "qjohnson:q=3,v=4,D=2",
    ],
)
def test_dual_points_match_closed_form(descriptor):
    spec = parse_family(descriptor)
    dual = dual_space(spec.build())
    expected = [float(x) for x in spec.closed_form_dual()]
    np.testing.assert_allclose(dual.points, expected, atol=1e-10)


def test_q_johnson_j2_dual():
    assert families.q_johnson_dual(2, 4, 2) == [1, Fraction(1, 6), Fraction(-1, 6)]


def test_octahedron_is_johnson_4_2(octahedron):
    assert octahedron.coeffs == families.johnson(4, 2).coeffs
    assert octahedron.label == "octahedron"


@pytest.mark.parametrize("v, D", [(5, 3), (4, 0), (3, 2)])
def test_johnson_parameter_checks(v, D):
    with pytest.raises(BadParam):
        families.johnson(v, D)


@pytest.mark.parametrize("D", range(1, 9))
@pytest.mark.parametrize("N", [2, 3, 5])
def test_krawtchouk_symmetry_and_orthogonality(D, N):
    p = Fraction(N - 1, N)
    for l in range(D + 1):
        for x in range(D + 1):
            assert krawtchouk(l, x, D, p) == krawtchouk(x, l, D, p)
    gram = krawtchouk_gram(D, p)
    for l in range(D + 1):
        for m in range(D + 1):
            expected = krawtchouk_norm(l, D, p) if l == m else 0
            assert gram[l][m] == expected


@pytest.mark.parametrize("D, N", [(3, 3), (4, 2), (5, 5)])
def test_hamming_polynomials_are_krawtchouk(D, N):
    H = families.hamming(D, N)
    p = Fraction(N - 1, N)
    for x in range(D + 1):
        point = 1 - Fraction(N * x, D * (N - 1))
        for i in range(D + 1):
            assert eval_polynomial(H, i, point) == krawtchouk(i, x, D, p)


@pytest.mark.parametrize(
    "H",
    [
        families.octahedron(),
        families.q_johnson(2, 4, 2),
        families.q_johnson(3, 4, 2),
        families.johnson(7, 2),
        families.hamming(2, 4),
    ],
    ids=["octahedron", "J2(4,2)", "J3(4,2)", "J(7,2)", "H(2,4)"],
)
def test_wildberger_relations_vanish(H):
    assert wildberger_residuals(H) == (0, 0)


def test_wildberger_needs_diameter_two(hamming33):
    with pytest.raises(BadParam):
        wildberger_residuals(hamming33)


def test_gamma_constants_3_3():
    c = tree_constants(3, 3)
    assert c.s_tilde_0 == pytest.approx(-1.0)
    assert c.s_tilde_1 == pytest.approx(1.25)
    assert c.s_0 == Fraction(-1, 2)
    assert c.intercept == Fraction(1, 6)
    assert c.T(c.s_tilde_1) == pytest.approx(1.0)
    assert c.T(c.s_tilde_0) == pytest.approx(-0.5)
    assert c.atom_weight is None
    assert tree_constants(2, 4).atom_weight == Fraction(1, 2)


@pytest.mark.parametrize("a", range(2, 7))
@pytest.mark.parametrize("b", range(2, 7))
def test_tree_poles_map_through_T(a, b):
    c = tree_constants(a, b)
    assert c.s_0 == Fraction(-1, b - 1)
    assert c.s_1 == 1
    assert c.T(c.s_tilde_0) == pytest.approx(float(c.s_0), abs=1e-12)
    assert c.T(c.s_tilde_1) == pytest.approx(1.0, abs=1e-12)
    assert c.T_inverse(float(c.s_1)) == pytest.approx(c.s_tilde_1)


def test_gamma_closed_form_convolution_3_3():
    H, _ = gamma_ab(3, 3)
    assert closed_form_g(3, 3, 2, 2) == convolve(H, 2, 2)
    assert closed_form_g(3, 3, 2, 3).as_dict() == {
        1: Fraction(1, 24), 2: Fraction(1, 24), 3: Fraction(1, 12), 4: Fraction(1, 6), 5: Fraction(2, 3)
    }


@pytest.mark.parametrize("a", range(2, 6))
@pytest.mark.parametrize("b", range(2, 6))
def test_gamma_closed_form_matches_recurrence(a, b):
    H, _ = gamma_ab(a, b)
    for m in range(9):
        for n in range(9):
            measure = closed_form_g(a, b, m, n)
            assert measure.total_mass == 1, (m, n)
            assert measure == convolve(H, m, n), (m, n)


def test_tree_character_closed_form_at_two():
    for n in range(8):
        assert tree_char_closed_form(3, 3, n, 2.0) == pytest.approx(1.0, rel=1e-12)


@pytest.mark.parametrize("a, b", [(3, 3), (3, 2), (2, 4), (5, 3)])
def test_tree_character_closed_form_matches_recurrence(a, b):
    rng = np.random.default_rng(7)
    zs = np.concatenate([rng.uniform(1.1, 3.0, 7), rng.uniform(-3.0, -1.1, 7), rng.uniform(0.2, 0.9, 6)])
    ns = rng.integers(0, 12, len(zs))
    for z, n in zip(zs, ns):
        x = 0.5 * (z + 1 / z)
        expected = tree_polynomial(a, b, int(n), x)
        assert tree_char_closed_form(a, b, int(n), z) == pytest.approx(expected, rel=1e-9, abs=1e-12)


@pytest.mark.parametrize("z", [0, 1, -1])
def test_tree_character_closed_form_domain(z):
    with pytest.raises(DomainError):
        tree_char_closed_form(3, 3, 2, z)


def test_bounded_pd_transfer():
    assert bounded_pd_transfers(2, 5)
    assert bounded_pd_transfers(4, 2)
    assert not bounded_pd_transfers(3, 3)
    assert tree_constants(3, 3).hat_x_left == Fraction(-2, 3)


def test_character_kernel_region():
    region = character_kernel_region(3, 3)
    assert region.intervals == ((-0.5, 1.0),)


def test_parse_family_descriptors():
    spec = parse_family("hamming:D=3,N=3")
    assert spec == FamilySpec("hamming", {"D": 3, "N": 3})
    assert spec.diameter == 3
    assert spec.vertex_count == 27
    assert parse_family(spec.descriptor) == spec
    assert parse_family("octahedron").kind == "octahedron"
    assert parse_family("gamma:a=3,b=2").finite is False


def test_parse_custom_family():
    spec = parse_family("custom:1,0,0;1/2,1/4,1/4;0,1/2,1/2")
    H = spec.build()
    assert H.diameter == 2
    assert H.coefficients(1) == (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4))
    assert parse_family(spec.descriptor).coeffs == spec.coeffs


@pytest.mark.parametrize(
    "text",
    [
        "hamming:D=3",
        "hamming:D=3,N=3,N=4",
        "hamming:D=3,N=3,q=2",
        "hamming:D=three,N=3",
        "johnson:v=4,D=3",
        "triangle:N=3",
        "gamma:a=1,b=3",
        "custom:1,0,0",
    ],
)
def test_parse_family_rejects(text):
    with pytest.raises(BadParam):
        parse_family(text)


def test_enlargement_rules():
    assert parse_family("complete:N=3").enlarge(2).descriptor == "hamming:D=3,N=3"
    assert parse_family("octahedron").enlarge(1).descriptor == "johnson:v=6,D=3"
    assert parse_family("qjohnson:q=2,v=4,D=2").enlarge(1).descriptor == "qjohnson:q=2,v=6,D=3"
    assert parse_family("gamma:a=3,b=3").enlarge(2).descriptor == "gamma:a=5,b=3"


def test_predicted_regions():
    assert parse_family("octahedron").predicted_region().intervals[0][0] == pytest.approx(math.sqrt(3) - 2)
    assert parse_family("johnson:v=6,D=3").predicted_region().claim == "inner"
    q_points = parse_family("qjohnson:q=2,v=4,D=2").predicted_region().isolated_points
    assert 0.0 in q_points and 0.5 in q_points and 1.0 in q_points
