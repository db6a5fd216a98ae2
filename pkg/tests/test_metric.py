"""Geometry tests: horizons, surface gravities, ergoregion, coordinate profiles.

Expected horizon values come from an independent bisection oracle on
Delta_r, written before the module and frozen here.
"""

import numpy as np
import pytest

from kdsqnm.errors import NoHorizonRegion, SlackViolated
from kdsqnm.metric import (
    delta_r_eval,
    delta_theta_eval,
    derive_params,
    ergo_extent,
    kerr_star_profile,
)


def delta_r_direct(M0, Lambda, a, r):
    """Independent evaluation: (r^2+a^2)(1 - Lambda r^2/3) - 2 M0 r."""
    return (r * r + a * a) * (1.0 - Lambda * r * r / 3.0) - 2.0 * M0 * r


def bisect_root(f, lo, hi, iters=200):
    """Plain bisection oracle, bracket shrunk to ~1e-12 relative."""
    flo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
        if hi - lo < 1e-15 * max(1.0, abs(hi)):
            break
    return 0.5 * (lo + hi)


# Oracle horizons for M0=0.1, Lambda=3, a=0: positive roots of r - r^3 - 0.2
# (Delta_r = r * (r - r^3 - 0.2) there), located by bisection.
SDS_R_MINUS = bisect_root(lambda r: r - r**3 - 0.2, 0.15, 0.3)
SDS_R_PLUS = bisect_root(lambda r: -(r - r**3 - 0.2), 0.7, 1.0)


def test_sds_horizons_match_bisection_oracle():
    p = derive_params(0.1, 3.0, 0.0)
    assert p.r_minus == pytest.approx(SDS_R_MINUS, abs=1e-12)
    assert p.r_plus == pytest.approx(SDS_R_PLUS, abs=1e-12)
    # Delta_r > 0 strictly between the horizons
    rr = np.linspace(p.r_minus + 1e-9, p.r_plus - 1e-9, 1000)
    assert np.all(delta_r_eval(p, rr)[0] > 0)


def test_no_horizon_region_when_mass_too_large():
    # 9 * Lambda * M0^2 = 9 * 3 * 0.04 = 1.08 >= 1
    with pytest.raises(NoHorizonRegion):
        derive_params(0.2, 3.0, 0.0)


def test_alpha_zero_without_rotation():
    p = derive_params(0.1, 3.0, 0.0)
    assert p.alpha == 0.0
    p = derive_params(0.1, 3.0, 0.01)
    assert p.alpha == 3.0 * 0.01 * 0.01 / 3.0  # same association as the module


def test_delta_r_point_value():
    p = derive_params(0.1, 3.0, 0.0)
    val, _ = delta_r_eval(p, 0.5)
    assert val == pytest.approx(0.5**2 * (1 - 0.25) - 0.1, abs=1e-15)  # 0.0875


def test_root_residual_and_derivative_signs():
    for a in (0.0, 0.01, 0.05):
        p = derive_params(0.1, 3.0, a)
        for rh in (p.r_minus, p.r_plus):
            val, _ = delta_r_eval(p, rh)
            assert abs(val) < 1e-12 * max(1.0, p.M0**2)
        assert p.A_minus > 0 and p.A_plus > 0
        _, d_minus = delta_r_eval(p, p.r_minus)
        _, d_plus = delta_r_eval(p, p.r_plus)
        assert d_minus == pytest.approx(p.A_minus)
        assert d_plus == pytest.approx(-p.A_plus)


def test_surface_gravity_vs_finite_differences():
    p = derive_params(0.1, 3.0, 0.02)
    h = 1e-6
    for rh, A, sign in ((p.r_minus, p.A_minus, 1.0), (p.r_plus, p.A_plus, -1.0)):
        fd = (delta_r_eval(p, rh + h)[0] - delta_r_eval(p, rh - h)[0]) / (2 * h)
        assert sign * fd == pytest.approx(A, rel=1e-8)


def test_horizon_gap_shrinks_with_mass():
    gaps = []
    for M0 in (0.05, 0.08, 0.11, 0.14, 0.17):
        p = derive_params(M0, 3.0, 0.0)
        gaps.append(p.r_plus - p.r_minus)
    assert all(g2 < g1 for g1, g2 in zip(gaps, gaps[1:]))


def test_ergo_extent_empty_without_rotation():
    p = derive_params(0.1, 3.0, 0.0)
    for theta, intervals in ergo_extent(p, n_theta=7):
        assert intervals == []


def test_ergo_extent_two_intervals_on_equator():
    p = derive_params(0.1, 3.0, 0.02)
    report = dict(
        (round(theta, 12), intervals) for theta, intervals in ergo_extent(p, n_theta=5)
    )
    equator = report[round(np.pi / 2, 12)]
    assert len(equator) == 2
    (lo1, hi1), (lo2, hi2) = equator
    assert lo1 == pytest.approx(p.r_minus, abs=1e-9)
    assert hi2 == pytest.approx(p.r_plus, abs=1e-9)
    assert hi1 < lo2  # disjoint, hugging the two horizons
    # axis: empty
    assert report[0.0] == []
    assert report[round(np.pi, 12)] == []


def test_ergo_width_scales_like_a_squared():
    for a in (0.005, 0.01, 0.02):
        p = derive_params(0.1, 3.0, a)
        for theta, intervals in ergo_extent(p, n_theta=5):
            for lo, hi in intervals:
                assert hi - lo < 10.0 * a * a


def test_ergo_interval_boundary_matches_symbol_sign_oracle():
    # dense-grid oracle: scan the ellipticity condition directly
    p = derive_params(0.1, 3.0, 0.02)
    theta = np.pi / 2
    thr = p.a**2 * delta_theta_eval(p, theta) * np.sin(theta) ** 2
    rr = np.linspace(p.r_minus, p.r_plus, 200001)
    bad = delta_r_eval(p, rr)[0] < thr
    # oracle edges: first/last grid points of each run
    edges = np.flatnonzero(np.diff(bad.astype(int)))
    (_, intervals), = [t for t in ergo_extent(p, n_theta=3) if abs(t[0] - theta) < 1e-9]
    dr = rr[1] - rr[0]
    assert len(edges) == 2 * len(intervals) - 2  # outermost ends are the horizons
    computed = sorted([intervals[0][1], intervals[1][0]])
    for edge_idx, r_edge in zip(edges, computed):
        assert abs(rr[edge_idx] - r_edge) < 2 * dr


def test_kerr_star_profile_bullets():
    p = derive_params(0.1, 3.0, 0.01)
    delta = 0.1 * (p.r_plus - p.r_minus)
    prof = kerr_star_profile(p, delta)
    rr = prof.r_grid
    one_a = 1.0 + p.alpha

    # bullet 1: both profiles vanish on K_r
    sel = (rr >= p.r_minus + delta) & (rr <= p.r_plus - delta)
    assert np.all(prof.F_t_prime[sel] == 0.0)
    assert np.all(prof.F_phi_prime[sel] == 0.0)

    # bullet 2: the singular parts cancel approaching each horizon
    dval = delta_r_eval(p, rr)[0]
    near_plus = rr > p.r_plus - 0.25 * delta
    resid_t = prof.F_t_prime[near_plus] - one_a * (rr[near_plus] ** 2 + p.a**2) / dval[near_plus]
    resid_phi = prof.F_phi_prime[near_plus] - one_a * p.a / dval[near_plus]
    assert np.max(np.abs(resid_t)) < 1.0  # bounded, while 1/Delta_r ~ 1e9 here
    assert np.max(np.abs(resid_phi)) < 1e-9
    near_minus = rr < p.r_minus + 0.25 * delta
    resid_t = prof.F_t_prime[near_minus] + one_a * (rr[near_minus] ** 2 + p.a**2) / dval[near_minus]
    assert np.max(np.abs(resid_t)) < 1.0

    # bullet 3: positive slack, recomputed independently on a fresh grid
    assert prof.C_slack > 0
    slack = (
        one_a**2 * (rr**2 + p.a**2) ** 2 / dval
        - dval * prof.F_t_prime**2
        - one_a**2 * p.a**2
    )
    assert np.min(slack) == pytest.approx(prof.C_slack)


def test_kerr_star_profile_sds_slack_positive():
    p = derive_params(0.1, 3.0, 0.0)
    prof = kerr_star_profile(p, 0.2 * (p.r_plus - p.r_minus))
    assert prof.C_slack > 0


def test_kerr_star_profile_rejects_bad_margin():
    p = derive_params(0.1, 3.0, 0.0)
    with pytest.raises(ValueError):
        kerr_star_profile(p, 0.6 * (p.r_plus - p.r_minus))


def test_invalid_scalar_parameters():
    for bad in ((0.0, 3.0, 0.0), (-1.0, 3.0, 0.0), (0.1, 0.0, 0.0), (0.1, 3.0, -0.1)):
        with pytest.raises(ValueError):
            derive_params(*bad)
    with pytest.raises(ValueError):
        derive_params(0.1, 3.0, 0.0, m_field=-1.0)
