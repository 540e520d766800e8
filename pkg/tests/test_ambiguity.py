import cmath
import random

import numpy as np
import pytest

from drcss.ambiguity import (
    LengthMismatchError,
    NonPositiveBoundError,
    NotApplicableError,
    RegionOutOfRangeError,
    ShapeMismatchError,
    af_surface,
    bound_eq2,
    bound_lemma1,
    cross_af,
    eq2_zx_minimum,
    metrics,
    optimality_factor,
    set_af,
)
from drcss.constructions import construct_t1
from drcss.finite_field import ExtensionTower, make_field


def random_unimodular(rng, n):
    return [cmath.exp(2j * cmath.pi * rng.random()) for _ in range(n)]


def corr_oracle(a, b, tau):
    """Independent shift-and-sum aperiodic correlation, pure python."""
    n = len(a)
    if abs(tau) >= n:
        return 0j
    if tau >= 0:
        return sum(a[i] * b[i + tau].conjugate() for i in range(n - tau))
    return sum(a[i] * b[i + tau].conjugate() for i in range(-tau, n))


def test_cross_af_zero_delay_values():
    ones = np.ones(5)
    assert cross_af(ones, ones, 0, 0) == pytest.approx(5.0)
    for v in range(1, 5):
        assert abs(cross_af(ones, ones, 0, v)) < 1e-12  # full geometric sum


def test_cross_af_three_term_sum():
    ones = np.ones(5)
    xi = cmath.exp(2j * cmath.pi / 5)
    expected = 1 + xi + xi**2
    assert cross_af(ones, ones, 2, 1) == pytest.approx(expected)


def test_cross_af_out_of_range_and_mismatch():
    ones = np.ones(4)
    assert cross_af(ones, ones, 4, 0) == 0
    assert cross_af(ones, ones, -4, 2) == 0
    with pytest.raises(LengthMismatchError):
        cross_af(np.ones(4), np.ones(5), 0, 0)


def test_cross_af_negative_delay_matches_direct_sum():
    rng = random.Random(1)
    a = random_unimodular(rng, 7)
    b = random_unimodular(rng, 7)
    for tau in range(-6, 0):
        for v in (-3, 0, 2):
            direct = sum(
                a[i] * b[i + tau].conjugate() * cmath.exp(2j * cmath.pi * i * v / 7)
                for i in range(-tau, 7)
            )
            assert cross_af(a, b, tau, v) == pytest.approx(direct, abs=1e-12)


def test_cross_af_bounded_and_exact_at_origin():
    rng = random.Random(2)
    for _ in range(25):
        n = rng.randrange(2, 20)
        a = random_unimodular(rng, n)
        assert cross_af(a, a, 0, 0) == pytest.approx(n, abs=1e-12)
        for tau in range(-n + 1, n):
            for v in range(-n + 1, n):
                assert abs(cross_af(a, a, tau, v)) <= n + 1e-9


def test_cross_af_agrees_with_correlation_oracle():
    rng = random.Random(20260810)
    for _ in range(200):
        n = rng.randrange(2, 33)
        a = random_unimodular(rng, n)
        b = random_unimodular(rng, n)
        for tau in range(-n + 1, n):
            want = corr_oracle(a, b, tau)
            got = cross_af(a, b, tau, 0)
            assert abs(got - want) <= 1e-10 * max(1.0, abs(want))


def test_set_af_reference_values(reference_sets):
    t1 = reference_sets["T1"]
    c1 = t1.matrices[1]
    assert set_af(c1, c1, 0, 0) == pytest.approx(25.0, abs=1e-9)
    for v in range(1, 5):
        assert abs(set_af(c1, c1, 0, v)) < 1e-9 * 25
    # wrap-around coincidence pair: indices 0 and 5 at delay q - 1
    value = set_af(t1.matrices[0], t1.matrices[5], 4, 0)
    assert abs(value) == pytest.approx(5.0, abs=1e-9)
    with pytest.raises(ShapeMismatchError):
        set_af(t1.matrices[0], reference_sets["T2"].matrices[0], 0, 0)


def test_af_surface_matches_pointwise_evaluation(reference_sets):
    t2 = reference_sets["T2"]
    a, b = t2.matrices[0], t2.matrices[3]
    surface = af_surface(a, b)
    n = t2.N
    assert surface.kind == "cross" and surface.ids == (0, 3)
    for tau in range(-n + 1, n):
        for v in range(-n + 1, n):
            assert surface.value(tau, v) == pytest.approx(set_af(a, b, tau, v), abs=1e-10)
    assert surface.value(n, 0) == 0
    auto = af_surface(a)
    assert auto.kind == "auto"
    assert auto.value(0, 0) == pytest.approx(t2.M * t2.N, abs=1e-9)


def test_af_surface_csv_shape(reference_sets):
    surface = af_surface(reference_sets["T5"].matrices[0])
    lines = surface.to_csv().strip().splitlines()
    assert lines[0] == "tau,v,re,im,mag"
    assert len(lines) == 1 + 7 * 7
    assert lines[1].startswith("-3,-3,")


def test_metrics_reference_set(reference_sets):
    report = metrics(reference_sets["T1"])
    assert report.region == (5, 5)
    assert report.theta_max == pytest.approx(5.0, abs=1e-6 * 25)
    assert report.theta_max == max(report.theta_a, report.theta_c)
    mags = [m for m, _ in report.magnitude_histogram]
    assert all(min(abs(m), abs(m - 5.0)) < 1e-6 * 25 for m in mags)
    assert report.bound_eq2 == pytest.approx(3.6352, abs=5e-4)
    assert report.rho == pytest.approx(1.3754, abs=5e-4)
    assert report.bound_lemma1 is not None
    parsed = __import__("json").loads(report.to_json())
    assert parsed["theta_max"] == report.theta_max
    assert parsed["construction"] == "T1"


def test_metrics_region_handling(reference_sets):
    t1 = reference_sets["T1"]
    with pytest.raises(RegionOutOfRangeError):
        metrics(t1, region=(0, 5))
    with pytest.raises(RegionOutOfRangeError):
        metrics(t1, region=(5, 6))
    small = metrics(t1, region=(2, 2))
    assert small.theta_max <= metrics(t1).theta_max + 1e-9


def test_auto_af_zero_doppler_column(reference_sets):
    # at tau = 0 every auto surface vanishes for all nonzero Doppler bins
    for cid in ("T1", "T3", "T4"):
        sset = reference_sets[cid]
        for mat in sset.matrices:
            for v in range(1, sset.N):
                assert abs(set_af(mat, mat, 0, v)) < 1e-9 * sset.M * sset.N


def test_bound_eq2_reference_values():
    assert bound_eq2(6, 5, 5, 5) == pytest.approx(3.6352, abs=5e-4)
    assert bound_eq2(6, 5, 4, 4) == pytest.approx(3.0756, abs=5e-4)
    assert bound_eq2(4, 5, 6, 6) == pytest.approx(3.7668, abs=5e-4)
    assert bound_eq2(4, 4, 5, 5) == pytest.approx(3.1100, abs=5e-4)
    assert bound_eq2(4, 4, 4, 4) == pytest.approx(2.6005, abs=5e-4)


def test_bounds_match_high_precision_oracle():
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 50
    k, m, n, zx, zy = 6, 5, 5, 5, 5
    exact1 = (
        mp.mpf(m * n)
        / mp.sqrt(zy)
        * mp.sqrt((mp.mpf(k * zx * zy) / (m * (n + zx - 1)) - 1) / (k * zx - 1))
    )
    assert bound_lemma1(k, m, n, zx, zy) == pytest.approx(float(exact1), rel=1e-12)
    exact2 = mp.sqrt(m * n * (1 - 2 * mp.sqrt(mp.mpf(m) / (3 * k * zy))))
    assert bound_eq2(k, m, n, zy) == pytest.approx(float(exact2), rel=1e-12)


def test_bound_lemma1_edge_cases():
    # K*Zx*Zy = M*(N + Zx - 1) makes the numerator vanish
    assert bound_lemma1(3, 1, 3, 1, 1) == pytest.approx(0.0, abs=1e-15)
    with pytest.raises(NotApplicableError):
        bound_lemma1(1, 5, 5, 1, 1)  # negative radicand
    with pytest.raises(NotApplicableError):
        bound_lemma1(1, 1, 5, 1, 1)  # K*Zx <= 1
    with pytest.raises(RegionOutOfRangeError):
        bound_lemma1(6, 5, 5, 0, 5)


def test_bound_eq2_side_condition():
    with pytest.raises(NotApplicableError):
        bound_eq2(3, 5, 5, 5)  # K*Zy = 15 = 3M
    with pytest.raises(RegionOutOfRangeError):
        bound_eq2(6, 5, 5, 9)
    assert eq2_zx_minimum(6, 5, 5, 5) == pytest.approx(5 * (15 / 30) ** 0.5)


def test_optimality_factor():
    assert optimality_factor(5.0, 3.635228600820615) == pytest.approx(1.3754, abs=5e-4)
    assert optimality_factor(7.0, 7.0) == 1.0
    with pytest.raises(NonPositiveBoundError):
        optimality_factor(5.0, 0.0)


def test_metrics_off_peak_classes_prime_power():
    # q = 8 exercises a genuinely non-prime field through the full pipeline
    tower = ExtensionTower(make_field(2, 3))
    sset = construct_t1(tower)
    report = metrics(sset)
    tol = 1e-6 * sset.M * sset.N
    assert report.theta_max == pytest.approx(8.0, abs=tol)
    for mag, _count in report.magnitude_histogram:
        assert min(abs(mag), abs(mag - 8.0)) < tol
