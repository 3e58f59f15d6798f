import math
from fractions import Fraction

import numpy as np
import pytest
import sympy

from drgibbs import families
from drgibbs.exceptions import BadParam
from drgibbs.hypergroup import dual_space
from drgibbs.positivity import (
    PositivityRegion,
    Verdict,
    bochner_check,
    exp_transform,
    gibbs_check_finite,
    gram_determinant,
    gram_matrix,
    gram_psd_check,
    positivity_region,
    schur_exp_stability,
    truncated_region,
)


def _single_interval(region):
    assert len(region.intervals) == 1
    return region.intervals[0]


@pytest.mark.parametrize("N", range(2, 11))
def test_complete_graph_region(N):
    lo, hi = _single_interval(positivity_region(families.complete(N)))
    assert lo == pytest.approx(-1 / (N - 1), abs=1e-9)
    assert hi == pytest.approx(1.0, abs=1e-9)


def test_octahedron_region(octahedron):
    region = positivity_region(octahedron)
    lo, hi = _single_interval(region)
    assert lo == pytest.approx(math.sqrt(3) - 2, abs=1e-9)
    assert hi == pytest.approx(1.0, abs=1e-9)
    assert not region.isolated_points


@pytest.mark.parametrize("D, N", [(2, 2), (3, 3), (4, 2), (3, 5)])
def test_hamming_region(D, N):
    lo, hi = _single_interval(positivity_region(families.hamming(D, N)))
    assert lo == pytest.approx(-1 / (N - 1), abs=1e-8)
    assert hi == pytest.approx(1.0, abs=1e-8)


def test_j2_region_has_isolated_one(j2):
    region = positivity_region(j2)
    lo, hi = _single_interval(region)
    assert lo == pytest.approx((-9 + math.sqrt(65)) / 16, abs=1e-8)
    assert hi == pytest.approx(0.5, abs=1e-8)
    assert len(region.isolated_points) == 1
    assert region.isolated_points[0] == pytest.approx(1.0, abs=1e-8)
    assert not region.contains(0.75)


def test_j2_gram_determinant(j2):
    det = gram_determinant(j2)
    x = sympy.Symbol("x")
    expected = sympy.Rational(1, 288) * (1 - x) ** 2 * (1 - 2 * x) * (1 + 4 * x) * (16 * x ** 2 + 18 * x + 1)
    for value in (0, sympy.Rational(1, 4), sympy.Rational(-1, 2)):
        assert det.eval(value) == expected.subs(x, value)


def test_j2_leading_gram_minor(j2):
    x = Fraction(1, 3)
    M = gram_matrix(j2, lambda i: x ** i, 1)
    assert M.dtype == object
    det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    assert det == Fraction(1, 18) * (1 - x) * (1 + 10 * x)


@pytest.mark.parametrize("v, D", [(4, 2), (6, 3), (8, 3)])
def test_johnson_contains_unit_interval(v, D):
    region = positivity_region(families.johnson(v, D))
    assert region.covers(0.0, 1.0)


def test_octahedron_region_is_strictly_larger(octahedron):
    region = positivity_region(octahedron)
    assert region.contains(-0.2)
    assert not region.contains(-0.3)


@pytest.mark.parametrize("q, v, D", [(2, 4, 2), (2, 6, 3), (3, 4, 2)])
def test_q_johnson_contains_predicted_points(q, v, D):
    region = positivity_region(families.q_johnson(q, v, D))
    for point in [0.0] + [q ** -j for j in range(7)]:
        assert region.contains(point, tolerance=1e-6), point
    assert region.contains(1.0)


def test_j3_region():
    region = positivity_region(families.q_johnson(3, 4, 2))
    lo, hi = _single_interval(region)
    assert lo == pytest.approx((-24 + math.sqrt(495)) / 81, abs=1e-8)
    assert hi == pytest.approx(1 / 3, abs=1e-8)
    assert region.isolated_points == pytest.approx((1.0,))


def test_complete_graph_witness_is_trivial_character():
    certificate = gibbs_check_finite(families.complete(4), -0.5)
    assert certificate.verdict is Verdict.NOT_PSD
    assert certificate.witness["dual_index"] == 0
    assert certificate.witness["dual_point"] == 1.0
    assert certificate.witness["value"] == pytest.approx(-0.5)


@pytest.mark.parametrize("x", [1.5, -1.01, Fraction(3, 2)])
def test_gibbs_check_rejects_x_outside_unit_interval(j2, x):
    with pytest.raises(BadParam):
        gibbs_check_finite(j2, x)


def test_gram_certificate_reports_x_as_float(j2):
    x = Fraction(1, 3)
    certificate = gram_psd_check(gram_matrix(j2, lambda i: x ** i, 2), x=x)
    assert isinstance(certificate.x, float)
    assert certificate.to_dict()["x"] == pytest.approx(1 / 3)


def test_bochner_certificate_is_a_measure(j2):
    certificate = gibbs_check_finite(j2, 0.25)
    assert certificate.is_psd
    assert np.all(certificate.dual_measure >= 0)
    # f(0) = 1 is the total mass of the representing measure
    assert certificate.dual_measure.sum() == pytest.approx(1.0)


def test_bochner_check_of_a_character(hamming33):
    dual = dual_space(hamming33)
    certificate = bochner_check(hamming33, dual.character_table[:, 1], dual=dual)
    assert certificate.is_psd
    np.testing.assert_allclose(certificate.dual_measure, [0, 1, 0, 0], atol=1e-9)


def test_bochner_check_rejects_negative_function(hamming33):
    certificate = bochner_check(hamming33, [1.0, 1.0, 1.0, 2.0])
    assert certificate.verdict is Verdict.NOT_PSD
    assert certificate.margin < 0


@pytest.mark.parametrize(
    "H",
    [families.q_johnson(2, 4, 2), families.hamming(3, 3), families.octahedron(), families.johnson(6, 3)],
    ids=["J2(4,2)", "H(3,3)", "octahedron", "J(6,3)"],
)
def test_gram_and_bochner_agree(H):
    for k in range(-10, 11):
        x = Fraction(k, 10)
        bochner = gibbs_check_finite(H, x)
        gram = gram_psd_check(gram_matrix(H, lambda i: x ** i, H.diameter), x=x)
        assert bochner.verdict == gram.verdict, x


def test_gram_float_check(hamming33):
    M = gram_matrix(hamming33, lambda i: (-0.6) ** i, 3)
    assert M.dtype == np.float64
    certificate = gram_psd_check(M, x=-0.6)
    assert certificate.verdict is Verdict.NOT_PSD
    assert certificate.witness["eigenvalue"] < 0
    assert len(certificate.witness["vector"]) == 4


def test_gram_exact_witness(hamming33):
    x = Fraction(-3, 5)
    certificate = gram_psd_check(gram_matrix(hamming33, lambda i: x ** i, 3), x=x)
    assert certificate.verdict is Verdict.NOT_PSD
    assert sympy.Rational(certificate.witness["minor"]) < 0


@pytest.mark.parametrize("n", [2, 4, 8, 12])
def test_truncated_region_contains_gamma_region(gamma33, n):
    region = truncated_region(gamma33, n)
    assert region.claim == "outer"
    assert region.covers(-0.5, 1.0, tolerance=1e-6)


def test_truncated_region_shrinks(gamma33):
    left_ends = [truncated_region(gamma33, n).intervals[0][0] for n in range(1, 13)]
    for earlier, later in zip(left_ends, left_ends[1:]):
        assert earlier <= later + 1e-8


def test_truncated_region_of_a_finite_hypergroup_matches(octahedron):
    region = truncated_region(octahedron, 2)
    lo, hi = _single_interval(region)
    assert lo == pytest.approx(math.sqrt(3) - 2, abs=1e-7)


def test_truncated_region_level_checks(octahedron, gamma33):
    with pytest.raises(BadParam):
        truncated_region(octahedron, 3)
    with pytest.raises(BadParam):
        truncated_region(gamma33, -1)


def test_exp_transform_without_time():
    np.testing.assert_allclose(exp_transform(0.5, 0.0, 3), np.ones(4))


def test_exp_transform_series():
    x, t = 0.6, 0.8
    ks = np.arange(5)
    expected = np.exp(t * (x ** ks - 1) / (1 - x))
    np.testing.assert_allclose(exp_transform(x, t, 4), expected, rtol=1e-12)


def test_schur_transform_stays_positive_and_approaches_reference(hamming33):
    t, D = 1.0, 3
    deviations = {}
    for n in (10, 100):
        certificate = schur_exp_stability(hamming33, 1 - 1 / n, t)
        assert certificate.is_psd
        assert certificate.method == "schur"
        deviations[n] = certificate.deviation
        assert certificate.deviation < t * D ** 2 * math.exp(-t) / n
    assert deviations[100] < deviations[10] / 5


def test_schur_transform_parameter_checks(j2, hamming33):
    with pytest.raises(BadParam):
        schur_exp_stability(hamming33, 1.0, 1.0)
    with pytest.raises(BadParam):
        schur_exp_stability(hamming33, 0.5, -1.0)
    with pytest.raises(BadParam):
        schur_exp_stability(j2, 0.9, 1.0)


def test_region_serialisation_round_trip():
    region = PositivityRegion.from_intervals([(-0.25, 0.5)], [1.0], claim="inner")
    assert PositivityRegion.from_dict(region.to_dict()) == region
    assert "claim" in region.to_dict()
    assert str(region) == "[-0.25, 0.5] U {1}"


def test_region_normalisation():
    region = PositivityRegion.from_intervals([(0.2, 0.4), (-2.0, 0.1), (0.1 + 1e-10, 0.15)], [0.3, 0.9])
    assert region.intervals == ((-1.0, 0.15), (0.2, 0.4))
    assert region.isolated_points == (0.9,)


def test_hausdorff_distance():
    a = PositivityRegion.from_intervals([(0.0, 1.0)])
    b = PositivityRegion.from_intervals([(0.0, 0.5)], [1.0])
    assert a.hausdorff_distance(b) == pytest.approx(0.25)
    assert b.hausdorff_distance(a) == pytest.approx(0.25)
    with pytest.raises(BadParam):
        a.hausdorff_distance(PositivityRegion())
