"""Regenerate the embedded Daubechies scaling-filter tables.

Computes extremal-phase Daubechies filters (db1 .. db20) by spectral
factorization of the half-band product filter at 60-digit precision,
then emits them as a Python module with 17-significant-digit literals
(enough to round-trip IEEE-754 doubles).

Usage:
    python tools/make_daubechies_tables.py > src/waveot/_db_tables.py
"""

import sys

import mpmath as mp

mp.mp.dps = 60

MAX_P = 20


def binomial_power_poly(p):
    """Coefficients of (1 + z)^p, ascending order."""
    coeffs = [mp.binomial(p, k) for k in range(p + 1)]
    return coeffs


def poly_mul(a, b):
    out = [mp.mpf(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def daubechies_filter(p):
    """Scaling filter g for the Daubechies wavelet with p vanishing moments.

    Normalized so sum(g) = sqrt(2); extremal phase (all spectral-factor
    roots inside the unit circle), which front-loads the filter energy.
    """
    if p == 1:
        r = mp.mpf(1) / mp.sqrt(2)
        return [r, r]

    # Half-band remainder P(y) = sum_{k<p} C(p-1+k, k) y^k, y = sin^2(w/2).
    P = [mp.binomial(p - 1 + k, k) for k in range(p)]

    # mp.polyroots wants descending coefficients.
    yroots = mp.polyroots([P[k] for k in range(p - 1, -1, -1)],
                          maxsteps=200, extraprec=200)

    # Each root y maps to a quadratic z^2 - (2 - 4y) z + 1 with root pair
    # (z, 1/z); keep the root inside the unit circle (minimum phase).
    zroots = []
    for y in yroots:
        b = 2 - 4 * y
        disc = mp.sqrt(b * b - 4)
        z1 = (b + disc) / 2
        z2 = (b - disc) / 2
        zroots.append(z1 if abs(z1) < 1 else z2)

    # L(z) = prod (z - z_i), ascending coefficients.
    L = [mp.mpf(1)]
    for z in zroots:
        L = poly_mul(L, [-z, mp.mpf(1)])

    g = poly_mul(binomial_power_poly(p), L)
    g = [c.real for c in g]

    total = sum(g)
    g = [c * mp.sqrt(2) / total for c in g]

    # Canonical extremal-phase orientation puts the energy peak early.
    if abs(g[1]) < abs(g[-2]):
        g = g[::-1]
    return g


def check(g, p):
    L = len(g)
    assert L == 2 * p, (p, L)
    assert abs(sum(g) - mp.sqrt(2)) < mp.mpf(10) ** -40, p
    for m in range(1, p):
        dot = sum(g[k] * g[k + 2 * m] for k in range(L - 2 * m))
        assert abs(dot) < mp.mpf(10) ** -40, (p, m, dot)
    norm = sum(c * c for c in g)
    assert abs(norm - 1) < mp.mpf(10) ** -40, (p, norm)


def main():
    out = sys.stdout
    out.write('"""Daubechies scaling-filter tables (db1 .. db20).\n\n')
    out.write("Generated by tools/make_daubechies_tables.py via 60-digit\n")
    out.write("spectral factorization; do not edit by hand.\n")
    out.write('"""\n\n')
    out.write("DB_SCALING_FILTERS = {\n")
    for p in range(1, MAX_P + 1):
        g = daubechies_filter(p)
        check(g, p)
        out.write(f"    {p}: (\n")
        for c in g:
            out.write(f"        {mp.nstr(c, 17, strip_zeros=False)},\n")
        out.write("    ),\n")
    out.write("}\n")


if __name__ == "__main__":
    main()
