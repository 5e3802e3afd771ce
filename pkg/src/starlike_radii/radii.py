"""Radius equations and their smallest roots in (0, 1).

For each (region, class) pair there is an explicit equation whose smallest
root in (0, 1) is the sought radius: a polynomial of degree at most 8, except
for the (starlike, h2) pair whose equation is rational-transcendental in form.
Every radius is computed twice: from the explicit equation (sign-scan plus
bisection plus a Newton polish) and from the generic condition
``disc_bound = delta`` (or the refined h2 condition) by independent bisection;
the discrepancy between the two is reported on every result.

Two pairs need special handling:

* (parabolic, h2): the explicit polynomial encodes the refined condition
  "refined lower bound = disc bound" rather than ``disc_bound = 1/2``; the
  generic cross-check uses that refined condition and the discrepancy is
  reported rather than asserted.
* (nephroid, h3): the explicit polynomial is only well-formed at q = 2 (it
  matches the cardioid one with q substituted), so the generic path is
  authoritative for this cell and the polynomial is kept for cross-checking.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .bounds import JUSTIFIED_R_MAX, R_MAX, ClassParams, disc_bound, refined_h2_lower
from .errors import DomainError, NoRoot
from .regions import E, SIN1, SQRT2, Region, RegionKind

#: Sign-scan resolution before bisection, and its refinement cap.
SCAN_N = 4096
SCAN_N_MAX = 65536

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial, coefficients in ascending powers."""

    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(float(c) for c in self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0.0:
            coeffs = coeffs[:-1]
        if not coeffs or all(c == 0.0 for c in coeffs):
            raise ValueError("polynomial must have a nonzero coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        if isinstance(x, np.ndarray):
            return np.polynomial.polynomial.polyval(x, self.coeffs)
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        if self.degree == 0:
            return Polynomial((0.0, 0.0))  # trims to the zero guard below
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0) or (0.0,))


@dataclass(frozen=True)
class TranscendentalEquation:
    """An evaluable equation that is not a polynomial (accepts numpy arrays)."""

    fn: Callable
    label: str

    def __call__(self, x):
        return self.fn(x)


# ---------------------------------------------------------------------------
# explicit radius equations (coefficients ascending in r)


def _starlike_h1(d, s, q, a):
    return [
        a - 1,
        a * (d + s + q),
        10 + 2 * a + d * s + a * d * s + (1 + a) * (d + s) * q,
        (10 + a) * (s + q) + d * (10 + a + (2 + a) * s * q),
        8 * (3 + s * q + d * (s + q)),
        -(-12 + a) * (s + q) - d * (-12 + a + (-4 + a) * s * q),
        14 + 3 * s * q + 3 * d * (s + q) - a * (2 + s * q + d * (s + q)),
        -(-2 + a) * (d + s + q),
        1 - a,
    ]


def _starlike_h3(l, q, a):
    return [
        a - 1,
        a * (l + q),
        7 + a + (1 + a) * l * q,
        6 * (l + q),
        9 + 3 * l * q - a * (1 + l * q),
        -(-2 + a) * (l + q),
        1 - a,
    ]


def _lemniscate_h1(d, s, q):
    c = SQRT2
    return [
        1 - c,
        -(-2 + c) * (d + s + q),
        -2 * (-7 + c) - (-3 + c) * (s * q + d * (s + q)),
        -(-12 + c) * (s + q) - d * (-12 + c + (-4 + c) * s * q),
        8 * (3 + s * q + d * (s + q)),
        (10 + c) * (s + q) + d * (10 + c + (2 + c) * s * q),
        2 * (5 + c) + (1 + c) * (s * q + d * (s + q)),
        c * (d + s + q),
        -1 + c,
    ]


def _lemniscate_h2(m, n, q):
    c = SQRT2
    return [
        1 - c,
        -(-2 + c) * (m + n + q),
        11 - c - (-3 + c) * (n * q + m * (n + q)),
        8 * (m + q) - n * (-12 + c + (-4 + c) * m * q),
        11 + c + (3 + c) * m * q + 8 * n * (m + q),
        (10 + c) * n + (2 + c) * q + (2 + c) * m * (1 + n * q),
        (1 + c) * (1 + n * (m + q)),
        c * n,
    ]


def _lemniscate_h3(l, q):
    c = SQRT2
    return [
        1 - c,
        -(-2 + c) * (l + q),
        9 - c - (-3 + c) * l * q,
        6 * (l + q),
        7 + c + (1 + c) * l * q,
        c * (l + q),
        -1 + c,
    ]


def _parabolic_h1(d, s, q):
    return [
        -1,
        d + s + q,
        22 + 3 * s * q + 3 * d * (s + q),
        21 * (s + q) + d * (21 + 5 * s * q),
        16 * (3 + s * q + d * (s + q)),
        23 * (s + q) + d * (23 + 7 * s * q),
        26 + 5 * s * q + 5 * d * (s + q),
        3 * (d + s + q),
        1,
    ]


def _parabolic_h2(m, n, q):
    # refined condition: lower bound on Re(zf'/f) meets the disc bound
    return [
        -1,
        m + q,
        18 + 4 * m * n + 3 * m * q + 4 * n * q,
        17 * m + 36 * n + 17 * q + 8 * m * n * q,
        40 + 28 * m * n + 12 * m * q + 28 * n * q,
        19 * m + 40 * n + 19 * q + 12 * m * n * q,
        22 + 8 * m * n + 5 * m * q + 8 * n * q,
        3 * m + 4 * n + 3 * q,
        1,
    ]


def _parabolic_h3(l, q):
    return [-1, l + q, 3 * (5 + l * q), 12 * (l + q), 17 + 5 * l * q, 3 * (l + q), 1]


def _exponential_h1(d, s, q):
    return [
        1 - E,
        d + q + s,
        2 + 10 * E + d * q + d * E * q + (1 + E) * (d + q) * s,
        q + s + 10 * E * (q + s) + d * (1 + q * s + 2 * E * (5 + q * s)),
        8 * E * (3 + q * s + d * (q + s)),
        (-1 + 12 * E) * (q + s) + d * (-1 - q * s + 4 * E * (3 + q * s)),
        -2 + 14 * E - d * q + 3 * d * E * q + (-1 + 3 * E) * (d + q) * s,
        (-1 + 2 * E) * (d + q + s),
        -1 + E,
    ]


def _exponential_h2(m, n, q):
    return [
        1 - E,
        m + n + q,
        1 + 9 * E + (1 + E) * (n * q + m * (n + q)),
        8 * E * (m + q) + n * (1 + m * q + 2 * E * (5 + m * q)),
        -1 - m * q + E * (13 + 8 * m * n + 5 * m * q + 8 * n * q),
        -n - q + 4 * E * (3 * n + q) + m * (-1 + 4 * E) * (1 + n * q),
        (-1 + 3 * E) * (1 + n * (m + q)),
        n * (-1 + 2 * E),
    ]


def _exponential_h3(l, q):
    return [
        1 - E,
        l + q,
        1 + 7 * E + (1 + E) * l * q,
        6 * E * (l + q),
        -1 + 9 * E + (-1 + 3 * E) * l * q,
        (-1 + 2 * E) * (l + q),
        -1 + E,
    ]


def _cardioid_h1(d, s, q):
    return [
        -2,
        d + q + s,
        4 * (8 + q * s + d * (q + s)),
        31 * (q + s) + d * (31 + 7 * q * s),
        24 * (3 + q * s + d * (q + s)),
        35 * (q + s) + d * (35 + 11 * q * s),
        8 * (5 + q * s + d * (q + s)),
        5 * (d + q + s),
        2,
    ]


def _cardioid_h2(m, n, q):
    return [
        -2,
        m + n + q,
        4 * (7 + n * q + m * (n + q)),
        31 * n + 24 * q + m * (24 + 7 * n * q),
        38 + 24 * m * n + 24 * n * q + 14 * m * q,
        35 * n + 11 * q + 11 * m * (1 + n * q),
        8 * (1 + n * (m + q)),
        5 * n,
    ]


def _cardioid_h3(l, q):
    return [-2, l + q, 22 + 4 * l * q, 18 * (l + q), 26 + 8 * l * q, 5 * (l + q), 2]


def _sine_h1(d, s, q):
    c = SIN1
    return [
        -c,
        -(d + q + s) * (-1 + c),
        -2 * (-6 + c) - (q * s + d * (q + s)) * (c - 2),
        11 * (q + s) + d * (11 + 3 * q * s) - (d + q + s + d * q * s) * c,
        8 * (3 + q * s + d * (q + s)),
        (q + s) * (11 + c) + d * (11 + c + q * s * (3 + c)),
        (q * s + d * (q + s)) * (2 + c) + 2 * (6 + c),
        (d + q + s) * (1 + c),
        c,
    ]


def _sine_h2(m, n, q):
    c = SIN1
    return [
        -c,
        -(m + n + q) * (c - 1),
        10 - (n * q + m * (n + q)) * (-2 + c) - c,
        8 * m + 11 * n + 8 * q + 3 * m * n * q - n * (1 + m * q) * c,
        12 + 8 * n * q + c + m * (8 * n + q * (4 + c)),
        q * (3 + c) + m * (1 + n * q) * (3 + c) + n * (11 + c),
        (1 + n * (m + q)) * (2 + c),
        n * (1 + c),
    ]


def _sine_h3(l, q):
    c = SIN1
    return [
        -c,
        -(l + q) * (c - 1),
        8 - l * q * (-2 + c) - c,
        6 * (l + q),
        8 + c + l * q * (2 + c),
        (l + q) * (1 + c),
        c,
    ]


def _lune_h1(d, s, q):
    c = SQRT2
    return [
        c - 2,
        (c - 1) * (d + q + s),
        2 * (4 + c) + c * (q * s + d * (q + s)),
        (9 + c) * (q + s) + d * (9 + c + (1 + c) * q * s),
        8 * (3 + q * s + d * (q + s)),
        -(-13 + c) * (q + s) - d * (-13 + c + (-5 + c) * q * s),
        -2 * (-8 + c) - (-4 + c) * (q * s + d * (q + s)),
        -(-3 + c) * (d + q + s),
        2 - c,
    ]


def _lune_h2(m, n, q):
    c = SQRT2
    return [
        c - 2,
        (c - 1) * (m + n + q),
        8 + c + c * (n * q + m * (n + q)),
        8 * (m + q) + n * (9 + c + (1 + c) * m * q),
        14 - c + 6 * m * q - c * m * q + 8 * n * (m + q),
        -(-5 + c) * (m + q) - n * (-13 + c + (-5 + c) * m * q),
        -(-4 + c) * (1 + n * (m + q)),
        -(c - 3) * n,
    ]


def _lune_h3(l, q):
    c = SQRT2
    return [
        c - 2,
        (c - 1) * (l + q),
        6 + c + c * l * q,
        6 * (l + q),
        10 - c - (-4 + c) * l * q,
        -(-3 + c) * (l + q),
        2 - c,
    ]


def _rational_h1(d, s, q):
    c = SQRT2
    return [
        2 * c - 3,
        2 * (c - 1) * (d + q + s),
        6 + 4 * c + (2 * c - 1) * (q * s + d * (q + s)),
        2 * ((4 + c) * (q + s) + d * (4 + c + c * q * s)),
        8 * (3 + q * s + d * (q + s)),
        -2 * ((-7 + c) * (q + s) + d * (-7 + c + (-3 + c) * q * s)),
        18 - 4 * c + (5 - 2 * c) * (q * s + d * (q + s)),
        -2 * ((-2 + c) * (d + q + s)),
        3 - 2 * c,
    ]


def _rational_h2(m, n, q):
    c = SQRT2
    return [
        2 * c - 3,
        2 * (c - 1) * (m + n + q),
        7 + 2 * c + (2 * c - 1) * (n * q + m * (n + q)),
        8 * (m + q) + 2 * n * (4 + c + c * m * q),
        15 - 2 * c + 7 * m * q - 2 * c * m * q + 8 * n * (m + q),
        -2 * ((-7 + c) * n + (-3 + c) * q + (-3 + c) * m * (1 + n * q)),
        (5 - 2 * c) * (1 + n * (m + q)),
        -2 * (-2 + c) * n,
    ]


def _rational_h3(l, q):
    c = SQRT2
    return [
        2 * c - 3,
        2 * (c - 1) * (l + q),
        5 + 2 * c + (-1 + 2 * c) * l * q,
        6 * (l + q),
        11 - 2 * c + (5 - 2 * c) * l * q,
        -2 * (-2 + c) * (l + q),
        3 - 2 * c,
    ]


def _nephroid_h3_printed(l):
    # well-formed only with the q = 2 substitution baked in
    return [-2, 2 + l, 22 + 8 * l, 18 * (2 + l), 26 + 16 * l, 5 * (2 + l), 2]


def _sigmoid_h1(d, s, q):
    return [
        1 - E,
        2 * (d + q + s),
        2 * (7 + 5 * E) + (3 + E) * (q * s + d * (q + s)),
        2 * (6 + 5 * E) * (q + s) + 2 * d * (6 + 5 * E + (2 + E) * q * s),
        8 * (1 + E) * (3 + q * s + d * (q + s)),
        2 * ((5 + 6 * E) * (q + s) + d * (5 + q * s + 2 * E * (3 + q * s))),
        2 * (5 + 7 * E) + (1 + 3 * E) * (q * s + d * (q + s)),
        2 * E * (d + q + s),
        -1 + E,
    ]


def _sigmoid_h2(m, n, q):
    return [
        1 - E,
        2 * (m + n + q),
        11 + 9 * E + (3 + E) * (n * q + m * (n + q)),
        2 * (4 * (1 + E) * m + (6 + 5 * E) * n + 4 * (1 + E) * q + (2 + E) * m * n * q),
        11 + 8 * m * n + 3 * m * q + 8 * n * q + E * (13 + 8 * m * n + 5 * m * q + 8 * n * q),
        2 * ((5 + 6 * E) * n + q + 2 * E * q + (1 + 2 * E) * m * (1 + n * q)),
        (1 + 3 * E) * (1 + n * (m + q)),
        2 * E * n,
    ]


def _sigmoid_h3(l, q):
    return [
        1 - E,
        2 * (l + q),
        9 + 7 * E + (3 + E) * l * q,
        6 * (1 + E) * (l + q),
        7 + l * q + 3 * E * (3 + l * q),
        2 * E * (l + q),
        -1 + E,
    ]


_H1_BUILDERS = {
    RegionKind.LEMNISCATE: _lemniscate_h1,
    RegionKind.PARABOLIC: _parabolic_h1,
    RegionKind.EXPONENTIAL: _exponential_h1,
    RegionKind.CARDIOID: _cardioid_h1,
    RegionKind.SINE: _sine_h1,
    RegionKind.LUNE: _lune_h1,
    RegionKind.RATIONAL: _rational_h1,
    RegionKind.NEPHROID: _cardioid_h1,  # same printed polynomial
    RegionKind.SIGMOID: _sigmoid_h1,
}

_H2_BUILDERS = {
    RegionKind.LEMNISCATE: _lemniscate_h2,
    RegionKind.PARABOLIC: _parabolic_h2,
    RegionKind.EXPONENTIAL: _exponential_h2,
    RegionKind.CARDIOID: _cardioid_h2,
    RegionKind.SINE: _sine_h2,
    RegionKind.LUNE: _lune_h2,
    RegionKind.RATIONAL: _rational_h2,
    RegionKind.NEPHROID: _cardioid_h2,
    RegionKind.SIGMOID: _sigmoid_h2,
}

_H3_BUILDERS = {
    RegionKind.LEMNISCATE: _lemniscate_h3,
    RegionKind.PARABOLIC: _parabolic_h3,
    RegionKind.EXPONENTIAL: _exponential_h3,
    RegionKind.CARDIOID: _cardioid_h3,
    RegionKind.SINE: _sine_h3,
    RegionKind.LUNE: _lune_h3,
    RegionKind.RATIONAL: _rational_h3,
    RegionKind.SIGMOID: _sigmoid_h3,
}


def _starlike_h2_equation(params: ClassParams, alpha: float) -> TranscendentalEquation:
    m, n, q = params.m, params.n, params.q

    def fn(r):
        return (
            -4.0 / (1.0 - r * r)
            - 1.0 / (1.0 + n * r)
            + (2.0 + 2.0 * n * r) / (1.0 + 2.0 * n * r + r * r)
            + (2.0 + m * r) / (1.0 + r * (m + r))
            + (2.0 + q * r) / (1.0 + r * (q + r))
            - alpha
        )

    return TranscendentalEquation(fn, f"starlike-h2(alpha={alpha:g})")


def theorem_equation(reg: Region, params: ClassParams) -> Polynomial | TranscendentalEquation:
    """The explicit radius equation for this (region, class) pair."""
    kind = reg.kind
    if kind is RegionKind.STARLIKE:
        a = reg.alpha
        if params.kind == "h1":
            return Polynomial(tuple(_starlike_h1(params.d, params.s, params.q, a)))
        if params.kind == "h2":
            return _starlike_h2_equation(params, a)
        return Polynomial(tuple(_starlike_h3(params.l, params.q, a)))
    if params.kind == "h1":
        return Polynomial(tuple(_H1_BUILDERS[kind](params.d, params.s, params.q)))
    if params.kind == "h2":
        return Polynomial(tuple(_H2_BUILDERS[kind](params.m, params.n, params.q)))
    if kind is RegionKind.NEPHROID:
        return Polynomial(tuple(_nephroid_h3_printed(params.l)))
    return Polynomial(tuple(_H3_BUILDERS[kind](params.l, params.q)))


def is_refined_h2_pair(reg: Region, params: ClassParams) -> bool:
    """True for the two cells whose equation rests on the refined h2 bound."""
    return params.kind == "h2" and reg.kind in (RegionKind.STARLIKE, RegionKind.PARABOLIC)


def generic_condition(reg: Region, params: ClassParams) -> Callable:
    """The defining condition solved independently of the explicit equation.

    Returns g with g(radius) = 0: ``disc_bound - delta`` for disc-method
    cells, ``refined_h2_lower - alpha`` for (starlike, h2), and
    ``refined_h2_lower - disc_bound`` for (parabolic, h2).
    """
    if params.kind == "h2" and reg.kind is RegionKind.STARLIKE:
        alpha = reg.alpha
        return lambda r: refined_h2_lower(params, r) - alpha
    if params.kind == "h2" and reg.kind is RegionKind.PARABOLIC:
        return lambda r: refined_h2_lower(params, r) - disc_bound(params, r)
    delta = reg.delta
    return lambda r: disc_bound(params, r) - delta


# ---------------------------------------------------------------------------
# root finding


def _bisect(fn, lo: float, hi: float, flo: float, width: float = 1e-15) -> float:
    """Plain bisection on a bracketing interval, down to `width`."""
    for _ in range(200):
        if hi - lo <= width:
            break
        mid = 0.5 * (lo + hi)
        fm = fn(mid)
        if fm == 0.0:
            return mid
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def smallest_root(
    eq: Polynomial | TranscendentalEquation,
    interval: tuple[float, float] = (0.0, 1.0),
    tol: float = DEFAULT_TOL,
) -> float:
    """Smallest root of ``eq`` in the open interval, to absolute tolerance tol.

    Sign-scans 4096 uniform subintervals, bisects the first sign change, and
    polishes polynomials with a few Newton steps.  The scan is refined by
    factors of 4 (up to 65536) before NoRoot is raised.
    """
    lo, hi = interval
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise DomainError(f"bad interval {interval!r}")
    hi = min(hi, R_MAX)
    n = SCAN_N
    while True:
        grid = np.linspace(lo, hi, n + 1)
        vals = np.asarray(eq(grid), dtype=float)
        if not np.all(np.isfinite(vals)):
            raise DomainError("equation not finite on the scan grid")
        zeros = np.nonzero(vals == 0.0)[0]
        change = np.nonzero(vals[:-1] * vals[1:] < 0.0)[0]
        first_zero = int(zeros[0]) if zeros.size and grid[zeros[0]] > lo else None
        first_change = int(change[0]) if change.size else None
        if first_zero is not None and (first_change is None or first_zero <= first_change):
            root = float(grid[first_zero])
            break
        if first_change is not None:
            i = first_change
            root = _bisect(eq, float(grid[i]), float(grid[i + 1]), float(vals[i]), width=min(tol, 1e-15))
            break
        if n >= SCAN_N_MAX:
            raise NoRoot(f"no sign change in ({lo}, {hi}) at scan resolution {n}")
        n *= 4
    if isinstance(eq, Polynomial):
        root = _newton_polish(eq, root, lo, hi)
    return root


def _newton_polish(poly: Polynomial, x: float, lo: float, hi: float) -> float:
    dp = poly.derivative()
    for _ in range(4):
        f = poly(x)
        if f == 0.0:
            return x
        g = dp(x)
        if g == 0.0:
            return x
        step = f / g
        nxt = x - step
        if not (lo <= nxt <= hi) or not math.isfinite(nxt):
            return x
        x = nxt
        if abs(step) < 1e-18:
            break
    return x


def solve_generic(g: Callable, lo: float = 1e-12, hi: float = R_MAX) -> float:
    """Independent bisection of the generic condition (monotone in r)."""
    flo, fhi = float(g(lo)), float(g(hi))
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo < 0.0) == (fhi < 0.0):
        raise NoRoot("generic condition does not change sign in (0, 1)")
    return _bisect(g, lo, hi, flo)


# ---------------------------------------------------------------------------
# radius results

# Sharpness wording of the source results: all parts sharp except the h2 parts
# of the parabolic, exponential, cardioid, lune and rational regions.
_NOT_SHARP_H2 = frozenset(
    {
        RegionKind.PARABOLIC,
        RegionKind.EXPONENTIAL,
        RegionKind.CARDIOID,
        RegionKind.LUNE,
        RegionKind.RATIONAL,
    }
)


def sharp_claimed(reg: Region, params: ClassParams) -> bool:
    return not (params.kind == "h2" and reg.kind in _NOT_SHARP_H2)


@dataclass(frozen=True)
class RadiusResult:
    region: Region
    params: ClassParams
    radius: float
    method: str  # "polynomial-root" | "transcendental-bisection" | "generic-bisection"
    residual: float
    cross_check_discrepancy: float
    sharp_claimed: bool
    justified_flag: bool


def compute_radius(reg: Region, params: ClassParams, tol: float = DEFAULT_TOL) -> RadiusResult:
    """Radius for one (region, class-parameters) cell, with cross-check.

    The reported radius solves the explicit equation except for
    (nephroid, h3), where the generic path is authoritative.
    """
    if not (1e-14 <= tol <= 1e-6):
        raise DomainError(f"tol must lie in [1e-14, 1e-6] (got {tol!r})")
    eq = theorem_equation(reg, params)
    g = generic_condition(reg, params)
    generic_root = solve_generic(g)
    if params.kind == "h3" and reg.kind is RegionKind.NEPHROID:
        radius = generic_root
        method = "generic-bisection"
        residual = abs(float(g(radius)))
        cross = abs(radius - smallest_root(eq, (0.0, 1.0), tol))
    else:
        radius = smallest_root(eq, (0.0, 1.0), tol)
        method = "polynomial-root" if isinstance(eq, Polynomial) else "transcendental-bisection"
        residual = abs(float(eq(radius)))
        cross = abs(radius - generic_root)
    if not (0.0 < radius < 1.0):
        raise NoRoot(f"computed radius {radius!r} outside (0, 1)")
    justified = radius < JUSTIFIED_R_MAX if is_refined_h2_pair(reg, params) else True
    return RadiusResult(
        region=reg,
        params=params,
        radius=radius,
        method=method,
        residual=residual,
        cross_check_discrepancy=cross,
        sharp_claimed=sharp_claimed(reg, params),
        justified_flag=justified,
    )


@dataclass(frozen=True)
class TableEntry:
    region: Region
    params: ClassParams
    result: RadiusResult | None
    error: str | None = None


def _table_cell(reg: Region, params: ClassParams, tol: float) -> TableEntry:
    try:
        return TableEntry(reg, params, compute_radius(reg, params, tol))
    except Exception as exc:  # recorded in-row; the sweep continues
        return TableEntry(reg, params, None, f"{type(exc).__name__}: {exc}")


def radius_table(
    regions: Sequence[Region],
    classes: Sequence[ClassParams],
    tol: float = DEFAULT_TOL,
) -> list[TableEntry]:
    """compute_radius over the Cartesian product, region-major order.

    RADII_THREADS > 1 enables a bounded thread pool; output order is the grid
    order regardless of completion order.
    """
    if not regions or not classes:
        raise ValueError("regions and classes must be nonempty")
    cells = [(reg, p) for reg in regions for p in classes]
    workers = int(os.environ.get("RADII_THREADS", "1") or "1")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda c: _table_cell(c[0], c[1], tol), cells))
    return [_table_cell(reg, p, tol) for reg, p in cells]
