"""Truncated power-series arithmetic on 1-D complex coefficient arrays.

Coefficients are ascending: c[j] multiplies z**j.  All operations return
arrays of the requested truncation length, zero-padded as needed.  Used to
invert the boundary coordinate series and assemble potential coefficients.
"""

from __future__ import annotations

import numpy as np

__all__ = ["ps_trunc", "ps_mul", "ps_diff", "ps_exp", "ps_reciprocal", "ps_compose", "ps_revert"]


def ps_trunc(a, n: int) -> np.ndarray:
    """Truncate/zero-pad a coefficient array to length n."""
    a = np.asarray(a, dtype=complex)
    if len(a) >= n:
        return a[:n].copy()
    out = np.zeros(n, dtype=complex)
    out[: len(a)] = a
    return out


def ps_mul(a, b, n: int) -> np.ndarray:
    """Cauchy product truncated to n coefficients."""
    a = np.asarray(a, dtype=complex)[:n]
    b = np.asarray(b, dtype=complex)[:n]
    return ps_trunc(np.convolve(a, b), n)


def ps_diff(a) -> np.ndarray:
    """Formal derivative."""
    a = np.asarray(a, dtype=complex)
    if len(a) <= 1:
        return np.zeros(1, dtype=complex)
    return a[1:] * np.arange(1, len(a))


def ps_exp(a, n: int) -> np.ndarray:
    """exp of a power series (any constant term), via b' = a' b."""
    a = ps_trunc(a, n)
    b = np.zeros(n, dtype=complex)
    b[0] = np.exp(a[0])
    for k in range(1, n):
        # k*b_k = sum_{j=1..k} j*a_j*b_{k-j}
        j = np.arange(1, k + 1)
        b[k] = np.sum(j * a[j] * b[k - j]) / k
    return b


def ps_reciprocal(a, n: int) -> np.ndarray:
    """1 / series, requires a[0] != 0."""
    a = ps_trunc(a, n)
    if a[0] == 0:
        raise ZeroDivisionError("series has zero constant term")
    b = np.zeros(n, dtype=complex)
    b[0] = 1.0 / a[0]
    for k in range(1, n):
        b[k] = -np.sum(a[1 : k + 1] * b[k - 1 :: -1][: k]) / a[0]
    return b


def ps_compose(outer, inner, n: int) -> np.ndarray:
    """outer(inner(z)) truncated to n terms; requires inner[0] == 0."""
    outer = ps_trunc(outer, n)
    inner = ps_trunc(inner, n)
    if inner[0] != 0:
        raise ValueError("composition requires inner constant term 0")
    acc = np.zeros(n, dtype=complex)
    for c in outer[::-1]:  # Horner
        acc = ps_mul(acc, inner, n)
        acc[0] += c
    return acc


def ps_revert(phi, n: int) -> np.ndarray:
    """Invert w = xi * phi(xi) (phi[0] != 0) as a series xi(w).

    Newton iteration on the formal series, doubling the attained order
    each step.  Returns xi coefficients of length n (xi[0] = 0).
    """
    phi = ps_trunc(phi, n)
    if phi[0] == 0:
        raise ValueError("reversion requires phi(0) != 0")
    dphi = ps_trunc(ps_diff(phi), n)
    w = np.zeros(n, dtype=complex)
    if n > 1:
        w[1] = 1.0
    xi = np.zeros(n, dtype=complex)
    if n > 1:
        xi[1] = 1.0 / phi[0]
    m = 2
    while m < n or m == 2:
        m = min(2 * m, n)
        phi_xi = ps_compose(phi, xi, m)
        dphi_xi = ps_compose(dphi, xi, m)
        resid = ps_mul(xi, phi_xi, m) - ps_trunc(w, m)
        deriv = phi_xi + ps_mul(xi, dphi_xi, m)
        xi = ps_trunc(xi, m) - ps_mul(resid, ps_reciprocal(deriv, m), m)
        if m >= n:
            break
    return ps_trunc(xi, n)
