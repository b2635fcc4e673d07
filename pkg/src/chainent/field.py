"""Smeared vacuum propagators of the (1+1)-D scalar field and their negativity.

The field and its conjugate momentum are averaged over windows of length L
(normalized by 1/sqrt(L)), giving the window-smeared propagators

    D_phi(r) = (1/(pi L)) Int dk  sin^2(kL/2) cos(kr) / (k^2 sqrt(k^2+m^2)),
    D_pi(r)  = (1/(pi L)) Int dk  sqrt(k^2+m^2) sin^2(kL/2) cos(kr) / k^2,

over the whole real line, with r the distance between window centers.  The
equal-time commutator of a smeared pair on the same window is [Phi_L, Pi_L]
= i (the one-dimensional contact term integrated over the window, divided by
L), so the vacuum uncertainty product is 1/4 exactly as for the chain
blocks.  D_phi converges absolutely for every r.  D_pi converges only conditionally:
writing sin^2(kL/2) cos(kr) = (1/4)[2cos(kr) - cos(k(r+L)) - cos(k(r-L))],
the large-k integrand is a sum of cos-oscillations/k terms -- except at
r = 0 and r = L, where one frequency degenerates to zero and the integral
diverges logarithmically (sharp windows do not regularize the momentum
variance).  Those two separations return signed infinity; the entanglement
measure is evaluated only for non-overlapping windows r > L, where every
quantity it consumes is finite and epsilon comes out 0 throughout.

Numerical scheme (both propagators): the body [0, K] is integrated on the
cancellation-free sin^2 form by composite Gauss-Legendre panels sized to the
fastest oscillation; the tail [K, inf) uses the three-cosine split with
cosine-integral asymptotics, expanding sqrt(k^2+m^2)^{+-1} about k to three
terms.  K starts at max(100/L, 100/max(r-L, L)) (plus a K >> m guard) and is
doubled until two successive evaluations agree within tolerance.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_legendre, sici

from .entanglement import (CollectiveCovariance, EntanglementResult,
                           negativity)
from .errors import DomainError, QuadratureError

DEFAULT_QUAD_TOL = 1e-10

_GL_NODES, _GL_WEIGHTS = roots_legendre(16)
_MAX_DOUBLINGS = 16


@dataclass(frozen=True)
class FieldRegionSpec:
    """Two smeared field regions: mass, window length and center separation."""

    mass: float
    length: float
    separation: float

    def __post_init__(self):
        if not self.mass > 0.0:
            raise DomainError(
                f"mass must be positive (the massless window-averaged field "
                f"is infrared-divergent), got {self.mass}")
        if not self.length > 0.0:
            raise DomainError(
                f"window length must be positive (smearing is what removes "
                f"the contact divergence), got {self.length}")
        if not self.separation >= 0.0:
            raise DomainError(f"separation must be >= 0, got {self.separation}")


def _panel_quad(f, lo: float, hi: float, panels: int) -> float:
    """Composite 16-point Gauss-Legendre over equal panels, vectorized."""
    edges = np.linspace(lo, hi, panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    k = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
    vals = f(k).reshape(panels, -1)
    return float((vals @ _GL_WEIGHTS) @ half)


def _tail_cos_moments(a: float, big_k: float, n_max: int) -> dict:
    """J_n = Int_K^inf cos(a k) / k^n dk for n = 1..n_max (a > 0).

    Built from Si/Ci by the integration-by-parts recursion; exact, so the
    conditionally convergent n = 1 case is handled analytically.
    """
    si, ci = sici(a * big_k)
    j = {1: -float(ci)}
    s = {1: math.pi / 2.0 - float(si)}
    sin_ak = math.sin(a * big_k)
    cos_ak = math.cos(a * big_k)
    for n in range(2, n_max + 1):
        s[n] = sin_ak / ((n - 1) * big_k ** (n - 1)) + a / (n - 1) * j[n - 1]
        j[n] = cos_ak / ((n - 1) * big_k ** (n - 1)) - a / (n - 1) * s[n - 1]
    return j


def _tail_component_phi(a: float, big_k: float, mass: float) -> float:
    """Int_K^inf cos(ak) k^-2 (k^2+m^2)^(-1/2) dk, expanded about 1/k^3."""
    m2 = mass * mass
    if a == 0.0:
        # exact antiderivative -sqrt(k^2+m^2)/(m^2 k)
        return math.sqrt(big_k * big_k + m2) / (m2 * big_k) - 1.0 / m2
    j = _tail_cos_moments(a, big_k, 7)
    return j[3] - 0.5 * m2 * j[5] + 0.375 * m2 * m2 * j[7]


def _tail_component_pi(a: float, big_k: float, mass: float) -> float:
    """Int_K^inf cos(ak) k^-2 (k^2+m^2)^(+1/2) dk; diverges for a = 0."""
    if a == 0.0:
        raise QuadratureError(
            "zero-frequency tail component of the momentum propagator is "
            "logarithmically divergent")
    m2 = mass * mass
    j = _tail_cos_moments(a, big_k, 5)
    return j[1] + 0.5 * m2 * j[3] - 0.125 * m2 * m2 * j[5]


def _smeared_propagator(mass: float, length: float, r: float, nu_power: int,
                        tol: float) -> float:
    """Common driver; nu_power = -1 for the field, +1 for the momentum."""
    tail_component = (_tail_component_phi if nu_power < 0
                      else _tail_component_pi)

    def body_integrand(k):
        # sin^2(kL/2)/k^2 written via sinc to stay smooth through k = 0
        smear = (length * length / 4.0) * np.sinc(k * (length / (2.0 * np.pi))) ** 2
        return smear * np.cos(k * r) * (k * k + mass * mass) ** (0.5 * nu_power)

    prefactor = 2.0 / (np.pi * length)
    big_k = max(100.0 / length, 100.0 / max(r - length, length), 20.0 * mass)
    freq = r + length + 1.0
    body_tol = 0.25 * tol / prefactor
    previous = None
    for _ in range(_MAX_DOUBLINGS):
        body = _refined_panel_quad(body_integrand, big_k, freq, body_tol,
                                   mass, length, r)
        tail = 0.25 * (2.0 * tail_component(r, big_k, mass)
                       - tail_component(r + length, big_k, mass)
                       - tail_component(abs(r - length), big_k, mass))
        value = prefactor * (body + tail)
        if previous is not None and abs(value - previous) <= 0.5 * tol:
            return value
        previous = value
        big_k *= 2.0
    raise QuadratureError(
        f"tail estimate did not stabilize to tol={tol} within "
        f"{_MAX_DOUBLINGS} cutoff doublings (m={mass}, L={length}, r={r})")


def _refined_panel_quad(f, big_k: float, freq: float, tol: float,
                        mass: float, length: float, r: float) -> float:
    # panels sized to the fastest oscillation, then doubled to convergence
    # (small masses put a sharp 1/sqrt(k^2+m^2) feature near k = 0)
    panels = max(64, int(math.ceil(big_k * freq / math.pi)))
    value = _panel_quad(f, 0.0, big_k, panels)
    for _ in range(_MAX_DOUBLINGS):
        panels *= 2
        fine = _panel_quad(f, 0.0, big_k, panels)
        if abs(fine - value) <= tol:
            return fine
        value = fine
    raise QuadratureError(
        f"panel quadrature on [0, {big_k}] did not converge "
        f"(m={mass}, L={length}, r={r})")


def d_phi(spec: FieldRegionSpec, at: float,
          tol: float = DEFAULT_QUAD_TOL) -> float:
    """Smeared field propagator D_phi at center distance `at`.

    Finite for every separation; even in `at`.
    """
    return _smeared_propagator(spec.mass, spec.length, abs(float(at)), -1, tol)


def d_pi(spec: FieldRegionSpec, at: float,
         tol: float = DEFAULT_QUAD_TOL) -> float:
    """Smeared momentum propagator D_pi at center distance `at`; even in `at`.

    Returns +inf at `at` = 0 and -inf at `at` = L: there the oscillatory
    decomposition acquires a zero-frequency component and the integral
    diverges logarithmically (with slope +1/(pi L) resp. -1/(2 pi L) per
    unit log-cutoff), so no finite value exists.
    """
    r = abs(float(at))
    if r == 0.0:
        return math.inf
    if r == spec.length:
        return -math.inf
    return _smeared_propagator(spec.mass, spec.length, r, +1, tol)


def field_covariance(spec: FieldRegionSpec,
                     tol: float = DEFAULT_QUAD_TOL) -> CollectiveCovariance:
    """Collective covariance of the two windows at the spec's separation."""
    return CollectiveCovariance(
        g_diag=d_phi(spec, 0.0, tol=tol),
        h_diag=d_pi(spec, 0.0, tol=tol),
        g_cross=d_phi(spec, spec.separation, tol=tol),
        h_cross=d_pi(spec, spec.separation, tol=tol))


def field_negativity(spec: FieldRegionSpec,
                     tol: float = DEFAULT_QUAD_TOL) -> EntanglementResult:
    """Entanglement degree between the two smeared regions.

    Requires non-overlapping windows, separation > length.  The collective
    commutator is unit-normalized exactly as for the chain blocks, so the
    same vacuum product 1/4 applies.
    """
    if not spec.separation > spec.length:
        raise DomainError(
            f"entanglement evaluation needs non-overlapping windows "
            f"(separation > length), got r={spec.separation}, L={spec.length}")
    return negativity(field_covariance(spec, tol=tol))


def periodic_field_negativity(mass: float, length: float, gap: float,
                              windows: int,
                              tol: float = DEFAULT_QUAD_TOL) -> EntanglementResult:
    """Negativity for blocks made of `windows` alternating windows per party.

    Windows of length `length` alternate A, B, A, B, ... with `gap` > 0
    between consecutive windows; party covariances sum the pairwise
    single-window propagators over window-center distances (normalization
    1/sqrt(windows * length) per collective operator keeps the commutator at
    i, so the vacuum product stays 1/4).
    """
    if windows < 1 or windows != int(windows):
        raise DomainError(f"windows must be a positive integer, got {windows}")
    if not gap > 0.0:
        raise DomainError(
            f"window gap must be positive to keep regions disjoint, got {gap}")
    windows = int(windows)
    spec = FieldRegionSpec(mass=mass, length=length, separation=gap + length)
    period = length + gap
    centers_a = np.arange(0, 2 * windows, 2) * period
    centers_b = np.arange(1, 2 * windows, 2) * period

    phi_cache, pi_cache = {}, {}

    def pair_sum(cache, prop, xs, ys):
        total = 0.0
        for cx in xs:
            for cy in ys:
                dist = round(abs(cx - cy), 12)
                if dist not in cache:
                    cache[dist] = prop(spec, dist, tol=tol)
                total += cache[dist]
        return total / windows

    cov = CollectiveCovariance(
        g_diag=pair_sum(phi_cache, d_phi, centers_a, centers_a),
        h_diag=pair_sum(pi_cache, d_pi, centers_a, centers_a),
        g_cross=pair_sum(phi_cache, d_phi, centers_a, centers_b),
        h_cross=pair_sum(pi_cache, d_pi, centers_a, centers_b))
    return negativity(cov)
