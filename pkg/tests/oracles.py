"""Independent oracles used by the test suite.

Everything here deliberately avoids the code paths under test: the field
oracle integrates with mpmath (body quadrature plus oscillatory-series
acceleration for the tails, no cosine-integral asymptotics), covariances are
enumerated pair by pair, and small finite chains are summed term by term
with math.fsum.

Run ``python -m tests.oracles`` (from the repository root, with mpmath
installed) to regenerate the constants frozen in ``tests/_frozen.py``.
"""

import math

import numpy as np


def field_propagator_oracle(mass, length, r, kind, dps=30):
    """High-precision smeared propagator, independent of the production path.

    Body [0, K0] via mpmath Gauss-Legendre quadrature on the sin^2 form;
    tail via the three-cosine split, each component summed between its own
    oscillation periods with mpmath.quadosc (series acceleration), keeping
    the exact sqrt(k^2+m^2) weight throughout.
    """
    import mpmath as mp

    old_dps = mp.mp.dps
    mp.mp.dps = dps
    try:
        mass = mp.mpf(mass)
        length = mp.mpf(length)
        r = mp.mpf(r)
        power = mp.mpf(-1) if kind == "phi" else mp.mpf(1)

        def weight(k):
            return (k * k + mass * mass) ** (power / 2) / (k * k)

        k0 = mp.mpf(40) / length + 40

        def body_integrand(k):
            if k == 0:
                return (length * length / 4) * mass ** power
            s = mp.sin(k * length / 2)
            return s * s * mp.cos(k * r) * weight(k)

        body = mp.quad(body_integrand, [0, k0], maxdegree=12)

        tail = mp.mpf(0)
        for coeff, freq in ((2, r), (-1, r + length), (-1, abs(r - length))):
            if freq == 0:
                if kind == "pi":
                    raise ValueError(
                        f"zero-frequency tail component at r={float(r)}: the "
                        f"momentum propagator diverges at r = 0 and r = L")
                part = mp.quad(weight, [k0, mp.inf])
            else:
                part = mp.quadosc(lambda k, a=freq: mp.cos(a * k) * weight(k),
                                  [k0, mp.inf], period=2 * mp.pi / freq)
            tail += mp.mpf(coeff) / 4 * part
        return float(2 / (mp.pi * length) * (body + tail))
    finally:
        mp.mp.dps = old_dps


def momentum_variance_partial(mass, length, big_k, points=400_000):
    """Truncated D_pi(0) integral on [0, big_k] by plain Simpson summation.

    Used to confirm the logarithmic divergence: successive doublings of
    big_k must raise the value by ln(2)/(pi*L).
    """
    k = np.linspace(0.0, big_k, 2 * points + 1)
    smear = (length * length / 4.0) * np.sinc(k * (length / (2.0 * np.pi))) ** 2
    f = smear * np.sqrt(k * k + mass * mass)
    h = k[1] - k[0]
    simpson = (f[0] + f[-1] + 4.0 * f[1:-1:2].sum() + 2.0 * f[2:-1:2].sum()) * h / 3.0
    return 2.0 / (np.pi * length) * simpson


def covariance_by_enumeration(table, indices_a, indices_b):
    """The four covariance scalars by explicit O(n^2) pair summation."""
    n = len(indices_a)

    def double_sum(values, xs, ys):
        return math.fsum(values[abs(i - j)] for i in xs for j in ys) / n

    return (double_sum(table.g, indices_a, indices_a),
            double_sum(table.h, indices_a, indices_a),
            double_sum(table.g, indices_a, indices_b),
            double_sum(table.h, indices_a, indices_b))


def finite_correlation_fsum(l, alpha, n_sites, power):
    """Term-by-term finite-chain spectral sum with math.fsum (small N only)."""
    terms = []
    for k in range(n_sites):
        theta = 2.0 * math.pi * k / n_sites
        nu = math.sqrt(1.0 - alpha * math.cos(theta))
        terms.append(nu ** power * math.cos(l * theta))
    return math.fsum(terms) / (2.0 * n_sites)


FIELD_ORACLE_POINTS = (
    ("phi", 1.0, 1.0, 0.0),
    ("phi", 1.0, 1.0, 2.0),
    ("pi", 1.0, 1.0, 2.0),
    ("pi", 1.0, 1.0, 0.5),
    ("phi", 0.1, 2.0, 4.0),
    ("pi", 0.1, 2.0, 4.0),
    ("phi", 10.0, 0.5, 1.0),
    ("pi", 10.0, 0.5, 1.0),
    ("phi", 1.0, 2.0, 2.2),
    ("pi", 1.0, 2.0, 2.2),
)


def _regenerate():
    lines = ["# Generated by `python -m tests.oracles`; do not edit by hand.",
             "", "FIELD_ORACLE = {"]
    for kind, mass, length, r in FIELD_ORACLE_POINTS:
        value = field_propagator_oracle(mass, length, r, kind)
        lines.append(f"    ({kind!r}, {mass!r}, {length!r}, {r!r}): {value!r},")
        print(lines[-1])
    lines.append("}")
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    print(_regenerate())
