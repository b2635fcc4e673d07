"""Ground-state two-point correlations of the nearest-neighbor oscillator chain.

The infinite-chain position and momentum correlations at integer lag l have
hypergeometric closed forms; the finite chain of N sites admits an exact
spectral sum over the N normal modes.  The closed forms are the production
path, the finite-N sums serve as an independent validation oracle.

Units: the dimensionless chain Hamiltonian, so the single uncoupled
oscillator has <q^2> = <p^2> = 1/2.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import ConvergenceError, DomainError

DEFAULT_SERIES_TOL = 1e-14
DEFAULT_MAX_TERMS = 10**6
DEFAULT_ORACLE_N = 2**22

# chunk size for the per-lag direct spectral sums, bounds temporary memory
_SUM_CHUNK = 1 << 20


@dataclass(frozen=True)
class Coupling:
    """Dimensionless nearest-neighbor coupling, restricted to 0 < alpha < 1.

    `z` and `mu` are the derived quantities entering the closed-form
    correlations: z = (1 - sqrt(1 - alpha^2))/alpha and mu = 1/sqrt(1 + z^2).
    """

    alpha: float

    def __post_init__(self):
        a = self.alpha
        if not (isinstance(a, (int, float)) and math.isfinite(a)):
            raise DomainError(f"coupling must be a finite real, got {a!r}")
        if not 0.0 < a < 1.0:
            raise DomainError(f"coupling must satisfy 0 < alpha < 1, got {a}")

    @property
    def z(self) -> float:
        # algebraically (1 - sqrt(1 - a^2))/a, written to avoid cancellation
        a = self.alpha
        return a / (1.0 + math.sqrt((1.0 - a) * (1.0 + a)))

    @property
    def mu(self) -> float:
        z = self.z
        return 1.0 / math.sqrt(1.0 + z * z)


def as_coupling(alpha) -> Coupling:
    """Coerce a float (or pass through a Coupling) with domain validation."""
    if isinstance(alpha, Coupling):
        return alpha
    return Coupling(float(alpha))


def reduced_coupling(alpha) -> tuple[float, float]:
    """Return (z, mu) for a coupling alpha in (0, 1)."""
    c = as_coupling(alpha)
    return c.z, c.mu


def dispersion(theta, alpha):
    """Mode frequency sqrt(1 - alpha*cos(theta)); accepts scalars or arrays."""
    a = as_coupling(alpha).alpha
    return np.sqrt(1.0 - a * np.cos(theta))


def hyp2f1(a: float, b: float, c: float, x: float,
           tol: float = DEFAULT_SERIES_TOL,
           max_terms: int = DEFAULT_MAX_TERMS) -> float:
    """Gauss hypergeometric function 2F1(a, b; c; x) by direct series.

    Sums the Gauss series to absolute tolerance `tol`, stopping once two
    consecutive terms fall below it.  Only |x| < 1 is supported; `c` must not
    be a non-positive integer.

    Raises
    ------
    DomainError
        if x or c is outside the supported domain.
    ConvergenceError
        if the series needs more than `max_terms` terms, i.e. x is too close
        to 1 for the requested tolerance.
    """
    if not abs(x) < 1.0:
        raise DomainError(f"series evaluation requires |x| < 1, got x={x}")
    if c <= 0.0 and c == int(c):
        raise DomainError(f"c must not be a non-positive integer, got c={c}")
    value, converged = kernels.hyp2f1_series(float(a), float(b), float(c),
                                             float(x), float(tol),
                                             int(max_terms))
    if not converged:
        raise ConvergenceError(
            f"2F1 series did not reach tol={tol} within {max_terms} terms "
            f"(a={a}, b={b}, c={c}, x={x}); x is too close to 1")
    return value


def _signed_lgamma(t: float) -> tuple[float, float]:
    """(log|Gamma(t)|, sign of Gamma(t)); Gamma's poles raise ValueError."""
    if t > 0.0:
        return math.lgamma(t), 1.0
    if t == int(t):
        raise ValueError(f"Gamma pole at non-positive integer {t}")
    # Gamma alternates sign on the intervals (-k-1, -k)
    sign = 1.0 if math.floor(t) % 2 == 0 else -1.0
    return math.lgamma(t), sign


def _gen_binom(x: float, y: float) -> float:
    """Generalized binomial coefficient C(x, y) via the log-gamma function."""
    la, sa = _signed_lgamma(x + 1.0)
    lb, sb = _signed_lgamma(y + 1.0)
    lc, sc = _signed_lgamma(x - y + 1.0)
    return sa * sb * sc * math.exp(la - lb - lc)


def _check_lag(l) -> int:
    if l != int(l) or l < 0:
        raise DomainError(f"lag must be a non-negative integer, got {l}")
    return int(l)


def g_infinite(l, alpha, tol: float = DEFAULT_SERIES_TOL,
               max_terms: int = DEFAULT_MAX_TERMS) -> float:
    """Position-position correlation <q_i q_{i+l}> of the infinite chain."""
    l = _check_lag(l)
    c = as_coupling(alpha)
    z = c.z
    f = hyp2f1(0.5, l + 0.5, l + 1.0, z * z, tol=tol, max_terms=max_terms)
    return z**l / (2.0 * c.mu) * _gen_binom(l - 0.5, l) * f


def h_infinite(l, alpha, tol: float = DEFAULT_SERIES_TOL,
               max_terms: int = DEFAULT_MAX_TERMS) -> float:
    """Momentum-momentum correlation <p_i p_{i+l}> of the infinite chain.

    Negative for every lag l >= 1 at any admissible coupling.
    """
    l = _check_lag(l)
    c = as_coupling(alpha)
    z = c.z
    f = hyp2f1(-0.5, l - 0.5, l + 1.0, z * z, tol=tol, max_terms=max_terms)
    return c.mu * z**l / 2.0 * _gen_binom(l - 1.5, l) * f


def _finite_sum(l: int, alpha: float, n_sites: int, power: float) -> float:
    # (2N)^-1 sum_k nu(theta_k)^power cos(l theta_k), chunked over k
    total = 0.0
    for start in range(0, n_sites, _SUM_CHUNK):
        k = np.arange(start, min(start + _SUM_CHUNK, n_sites), dtype=np.float64)
        theta = (2.0 * np.pi / n_sites) * k
        nu_pow = (1.0 - alpha * np.cos(theta)) ** (0.5 * power)
        total += float(nu_pow @ np.cos(l * theta))
    return total / (2.0 * n_sites)


def _check_finite_args(l, alpha, n_sites) -> tuple[int, float, int]:
    l = int(l)
    n_sites = int(n_sites)
    if n_sites < 2:
        raise DomainError(f"finite chain needs N >= 2 sites, got {n_sites}")
    if not 0 <= l < n_sites:
        raise DomainError(f"lag must satisfy 0 <= l < N, got l={l}, N={n_sites}")
    return l, as_coupling(alpha).alpha, n_sites


def g_finite(l, alpha, n_sites) -> float:
    """Exact <q_i q_{i+l}> of the closed N-site chain by direct mode summation."""
    l, a, n_sites = _check_finite_args(l, alpha, n_sites)
    return _finite_sum(l, a, n_sites, -1.0)


def h_finite(l, alpha, n_sites) -> float:
    """Exact <p_i p_{i+l}> of the closed N-site chain by direct mode summation."""
    l, a, n_sites = _check_finite_args(l, alpha, n_sites)
    return _finite_sum(l, a, n_sites, +1.0)


@dataclass(frozen=True)
class CorrelationTable:
    """Correlations g_0..g_{l_max} and h_0..h_{l_max} for one coupling.

    Immutable after construction; safe to share across workers.
    """

    alpha: Coupling
    g: np.ndarray = field(repr=False)
    h: np.ndarray = field(repr=False)

    def __post_init__(self):
        g = np.asarray(self.g, dtype=np.float64)
        h = np.asarray(self.h, dtype=np.float64)
        if g.shape != h.shape or g.ndim != 1 or g.size == 0:
            raise DomainError("g and h must be equal-length 1-D arrays")
        g.setflags(write=False)
        h.setflags(write=False)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "h", h)

    @property
    def l_max(self) -> int:
        return self.g.size - 1


def correlation_table(alpha, l_max: int, tol: float = DEFAULT_SERIES_TOL,
                      max_terms: int = DEFAULT_MAX_TERMS) -> CorrelationTable:
    """Tabulate the infinite-chain correlations up to lag `l_max`."""
    if l_max < 0:
        raise DomainError(f"l_max must be >= 0, got {l_max}")
    c = as_coupling(alpha)
    g = np.array([g_infinite(l, c, tol=tol, max_terms=max_terms)
                  for l in range(l_max + 1)])
    h = np.array([h_infinite(l, c, tol=tol, max_terms=max_terms)
                  for l in range(l_max + 1)])
    return CorrelationTable(alpha=c, g=g, h=h)


def finite_correlation_table(alpha, n_sites: int = DEFAULT_ORACLE_N,
                             l_max: int = 100,
                             method: str = "fft") -> CorrelationTable:
    """Tabulate the exact N-site correlations up to lag `l_max`.

    `method="fft"` evaluates the spectral sums for all lags at once via a
    real FFT (the identical sum, reassociated); `method="direct"` uses the
    kernel's one-pass Chebyshev-recurrence summation.  Both are validation
    paths, independent of the hypergeometric production route.
    """
    c = as_coupling(alpha)
    n_sites = int(n_sites)
    if n_sites < 2:
        raise DomainError(f"finite chain needs N >= 2 sites, got {n_sites}")
    if not 0 <= l_max < n_sites:
        raise DomainError(f"l_max must satisfy 0 <= l_max < N, got {l_max}")
    theta = (2.0 * np.pi / n_sites) * np.arange(n_sites, dtype=np.float64)
    nu = np.sqrt(1.0 - c.alpha * np.cos(theta))
    if method == "fft":
        g = np.fft.rfft(1.0 / nu).real[: l_max + 1] / (2.0 * n_sites)
        h = np.fft.rfft(nu).real[: l_max + 1] / (2.0 * n_sites)
    elif method == "direct":
        g = kernels.cosine_lag_sums(1.0 / nu, l_max) / (2.0 * n_sites)
        h = kernels.cosine_lag_sums(nu, l_max) / (2.0 * n_sites)
    else:
        raise DomainError(f"unknown method {method!r}, expected 'fft' or 'direct'")
    return CorrelationTable(alpha=c, g=np.ascontiguousarray(g),
                            h=np.ascontiguousarray(h))
