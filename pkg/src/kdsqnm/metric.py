"""Kerr-de Sitter background geometry.

The stationary region sits between the event horizon r_minus and the
cosmological horizon r_plus, the two positive simple roots of the quartic

    Delta_r(r) = (r^2 + a^2)(1 - Lambda r^2 / 3) - 2 M0 r

with Delta_r > 0 in between.  This module validates parameters, computes
horizons and the surface-gravity constants A_pm = -/+ Delta_r'(r_pm) > 0,
locates the region where the stationary wave operator loses ellipticity
(the ergoregion), and builds the coordinate profiles F_t, F_phi used to
extend fields smoothly across the horizons.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateHorizon, NoHorizonRegion, SlackViolated

__all__ = [
    "BlackHoleParams",
    "KerrStarProfile",
    "derive_params",
    "delta_r_eval",
    "delta_theta_eval",
    "ergo_extent",
    "kerr_star_profile",
]

# Roots closer than this (relative to r_plus) make a surface gravity vanish
# and break every downstream expansion.
DEGENERATE_ROOT_RTOL = 1e-6


@dataclass(frozen=True)
class BlackHoleParams:
    """Validated physical parameters plus derived horizon data.

    Attributes
    ----------
    M0 : float
        Black hole mass (length units, > 0).
    Lambda : float
        Cosmological constant (> 0).
    a : float
        Angular momentum per unit mass (same units as M0, >= 0).
    m_field : float
        Klein-Gordon field mass (>= 0; 0 gives the pure wave equation).
    alpha : float
        Derived constant Lambda * a**2 / 3.
    r_minus, r_plus : float
        Event and cosmological horizon radii, 0 < r_minus < r_plus.
    A_minus, A_plus : float
        Surface-gravity constants -/+ Delta_r'(r_pm), both > 0.
    delta_r_coeffs : ndarray
        Quartic coefficients of Delta_r, highest power first.
    delta_r_roots : ndarray
        All four roots of Delta_r (complex dtype, sorted by real part).
    """

    M0: float
    Lambda: float
    a: float
    m_field: float
    alpha: float
    r_minus: float
    r_plus: float
    A_minus: float
    A_plus: float
    delta_r_coeffs: np.ndarray = field(repr=False)
    delta_r_roots: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class KerrStarProfile:
    """Sampled derivative profiles F_t', F_phi' of the horizon-regular
    time and angle shifts, vanishing on the middle region
    K_r = [r_minus + delta_r_margin, r_plus - delta_r_margin].

    ``C_slack`` is the verified positive lower bound of

        (1+alpha)^2 (r^2+a^2)^2 / Delta_r - Delta_r F_t'(r)^2 - (1+alpha)^2 a^2

    on the sampling grid ``r_grid``.
    """

    delta_r_margin: float
    r_grid: np.ndarray = field(repr=False)
    F_t_prime: np.ndarray = field(repr=False)
    F_phi_prime: np.ndarray = field(repr=False)
    C_slack: float


def _delta_r_coeffs(M0: float, Lambda: float, a: float) -> np.ndarray:
    # (r^2+a^2)(1 - Lambda r^2/3) - 2 M0 r, highest power first
    alpha = Lambda * a * a / 3.0
    return np.array([-Lambda / 3.0, 0.0, 1.0 - alpha, -2.0 * M0, a * a])


def delta_r_eval(params: BlackHoleParams, r):
    """Evaluate Delta_r and its r-derivative exactly.

    Parameters
    ----------
    params : BlackHoleParams
    r : float or ndarray
        Radius; evaluation outside (r_minus, r_plus) is permitted.

    Returns
    -------
    (value, derivative) : tuple of float or ndarray
    """
    c = params.delta_r_coeffs
    val = ((c[0] * r + c[1]) * r + c[2]) * r * r + c[3] * r + c[4]
    der = ((4.0 * c[0] * r + 3.0 * c[1]) * r + 2.0 * c[2]) * r + c[3]
    return val, der


def delta_theta_eval(params: BlackHoleParams, theta):
    """Delta_theta = 1 + alpha * cos(theta)^2."""
    return 1.0 + params.alpha * np.cos(theta) ** 2


def _polish_root(c: np.ndarray, z: complex, iters: int = 40) -> complex:
    """Newton-polish a root of the quartic with coefficients c."""
    dc = np.polyder(c)
    for _ in range(iters):
        f = np.polyval(c, z)
        df = np.polyval(dc, z)
        if df == 0:
            break
        step = f / df
        z = z - step
        if abs(step) < 1e-16 * max(1.0, abs(z)):
            break
    return z


def derive_params(M0: float, Lambda: float, a: float, m_field: float = 0.0) -> BlackHoleParams:
    """Validate parameters and derive horizons and surface gravities.

    The quartic roots come from the companion matrix (``numpy.roots``)
    polished by Newton; (r_minus, r_plus) is the unique adjacent pair of
    positive roots with Delta_r > 0 between them.

    Raises
    ------
    NoHorizonRegion
        If no such pair exists (e.g. a = 0 with 9*Lambda*M0^2 >= 1).
    DegenerateHorizon
        If a selected root lies within 1e-6 * r_plus of another root.
    """
    if M0 <= 0:
        raise ValueError("M0 must be positive")
    if Lambda <= 0:
        raise ValueError("Lambda must be positive")
    if a < 0:
        raise ValueError("a must be non-negative")
    if m_field < 0:
        raise ValueError("m_field must be non-negative")

    coeffs = _delta_r_coeffs(M0, Lambda, a)
    roots = np.array([_polish_root(coeffs, z) for z in np.roots(coeffs)])
    roots = roots[np.argsort(roots.real)]

    scale = max(1.0, float(np.max(np.abs(roots))))
    real_mask = np.abs(roots.imag) < 1e-9 * scale
    real_roots = np.sort(roots[real_mask].real)

    # unique adjacent pair of positive roots with Delta_r > 0 between them
    pair = None
    for lo, hi in zip(real_roots[:-1], real_roots[1:]):
        if lo <= 0:
            continue
        mid = 0.5 * (lo + hi)
        if np.polyval(coeffs, mid) > 0:
            if pair is not None:
                raise NoHorizonRegion(
                    "multiple positive Delta_r > 0 intervals; parameters outside "
                    "the supported (slowly rotating) regime"
                )
            pair = (lo, hi)
    if pair is None:
        raise NoHorizonRegion(
            f"no interval (r_minus, r_plus) with Delta_r > 0 for "
            f"M0={M0}, Lambda={Lambda}, a={a}"
        )
    r_minus, r_plus = pair

    for rh in pair:
        others = roots[np.abs(roots - rh) > 0]
        gap = np.min(np.abs(roots - rh)[np.abs(roots - rh) > 0]) if len(others) else np.inf
        if gap < DEGENERATE_ROOT_RTOL * r_plus:
            raise DegenerateHorizon(
                f"root at r={rh:.6g} within {gap:.3g} of another root"
            )

    dcoeffs = np.polyder(coeffs)
    A_minus = float(np.polyval(dcoeffs, r_minus))
    A_plus = float(-np.polyval(dcoeffs, r_plus))
    if A_minus <= 0 or A_plus <= 0:
        raise DegenerateHorizon("surface gravity not positive after root selection")

    return BlackHoleParams(
        M0=float(M0),
        Lambda=float(Lambda),
        a=float(a),
        m_field=float(m_field),
        alpha=Lambda * a * a / 3.0,
        r_minus=float(r_minus),
        r_plus=float(r_plus),
        A_minus=A_minus,
        A_plus=A_plus,
        delta_r_coeffs=coeffs,
        delta_r_roots=roots,
    )


def ergo_extent(params: BlackHoleParams, n_theta: int = 9, n_r: int = 2048):
    """Radial intervals where the stationary operator is not elliptic.

    The principal symbol loses ellipticity where the rotational term
    dominates:  Delta_r(r) < a^2 * Delta_theta(theta) * sin(theta)^2.
    For a = 0 the set is empty at every theta.

    Returns
    -------
    list of (theta, intervals)
        ``intervals`` is a list of (r_lo, r_hi) pairs inside (r_minus, r_plus).
    """
    out = []
    thetas = np.linspace(0.0, np.pi, n_theta)
    r_lo, r_hi = params.r_minus, params.r_plus
    inset = (r_hi - r_lo) * 1e-12  # stay inside the open interval
    rr = np.linspace(r_lo + inset, r_hi - inset, n_r)
    dval, _ = delta_r_eval(params, rr)
    for theta in thetas:
        thr = params.a ** 2 * delta_theta_eval(params, theta) * np.sin(theta) ** 2
        if thr <= 0.0:
            out.append((float(theta), []))
            continue
        inside = dval < thr  # includes both endpoints where Delta_r = 0
        intervals = []
        i = 0
        while i < n_r:
            if inside[i]:
                j = i
                while j + 1 < n_r and inside[j + 1]:
                    j += 1
                lo = rr[i] if i == 0 else _bisect_threshold(params, rr[i - 1], rr[i], thr)
                hi = rr[j] if j == n_r - 1 else _bisect_threshold(params, rr[j], rr[j + 1], thr)
                intervals.append((float(lo), float(hi)))
                i = j + 1
            else:
                i += 1
        out.append((float(theta), intervals))
    return out


def _bisect_threshold(params, r_a, r_b, thr, iters=60):
    """Bisect Delta_r(r) = thr between r_a and r_b."""
    fa = delta_r_eval(params, r_a)[0] - thr
    for _ in range(iters):
        mid = 0.5 * (r_a + r_b)
        fm = delta_r_eval(params, mid)[0] - thr
        if (fm > 0) == (fa > 0):
            r_a, fa = mid, fm
        else:
            r_b = mid
    return 0.5 * (r_a + r_b)


def _smoothstep(u):
    """Quintic smoothstep: 0 -> 1 on [0, 1] with two vanishing derivatives."""
    u = np.clip(u, 0.0, 1.0)
    return u ** 3 * (10.0 - 15.0 * u + 6.0 * u ** 2)


def kerr_star_profile(params: BlackHoleParams, delta_r: float, n_grid: int = 4001) -> KerrStarProfile:
    """Build horizon-regular coordinate-shift profiles.

    F_t' and F_phi' vanish identically on K_r = [r_minus + delta_r,
    r_plus - delta_r], equal -/+ (1+alpha)(r^2+a^2)/Delta_r and
    -/+ (1+alpha) a / Delta_r near r_minus / r_plus up to bounded smooth
    corrections, and satisfy the timelike-slack inequality with margin
    ``C_slack`` > 0.

    Raises
    ------
    SlackViolated
        If the inequality has no positive margin on the sampling grid
        (delta_r too small for the given a).
    """
    r_m, r_p = params.r_minus, params.r_plus
    if not (0.0 < delta_r < 0.5 * (r_p - r_m)):
        raise ValueError("delta_r must lie in (0, (r_plus - r_minus)/2)")

    one_a = 1.0 + params.alpha
    # Constant correction keeping the slack positive where the blend saturates;
    # any c > (1+alpha) a^2 / (2 (r_minus^2 + a^2)) works for small Delta_r.
    c_t = max(one_a * params.a ** 2 / (r_m ** 2 + params.a ** 2), 0.05)

    # avoid the exact horizons where 1/Delta_r blows up
    eps = (r_p - r_m) * 1e-9
    rr = np.linspace(r_m + eps, r_p - eps, n_grid)
    dval, _ = delta_r_eval(params, rr)

    B = np.zeros_like(rr)
    left_lo, left_hi = r_m + 0.5 * delta_r, r_m + delta_r
    right_lo, right_hi = r_p - delta_r, r_p - 0.5 * delta_r
    B[rr <= left_lo] = -1.0
    sel = (rr > left_lo) & (rr < left_hi)
    B[sel] = -1.0 + _smoothstep((rr[sel] - left_lo) / (0.5 * delta_r))
    sel = (rr > right_lo) & (rr < right_hi)
    B[sel] = _smoothstep((rr[sel] - right_lo) / (0.5 * delta_r))
    B[rr >= right_hi] = 1.0

    F_t_prime = B * (one_a * (rr ** 2 + params.a ** 2) / dval - c_t)
    F_phi_prime = B * (one_a * params.a / dval)

    slack = (
        one_a ** 2 * (rr ** 2 + params.a ** 2) ** 2 / dval
        - dval * F_t_prime ** 2
        - one_a ** 2 * params.a ** 2
    )
    C_slack = float(np.min(slack))
    if C_slack <= 0.0:
        raise SlackViolated(
            f"slack minimum {C_slack:.3g} <= 0 for delta_r={delta_r}, a={params.a}"
        )
    return KerrStarProfile(
        delta_r_margin=float(delta_r),
        r_grid=rr,
        F_t_prime=F_t_prime,
        F_phi_prime=F_phi_prime,
        C_slack=C_slack,
    )
