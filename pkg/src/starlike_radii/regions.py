"""The ten target regions for the image of zf'(z)/f(z).

Each region is an open subset of the plane containing w = 1.  Eight of them
have closed-form membership inequalities; the sine and rational regions are
defined only as images of the unit disc under their generating maps, so
membership there is decided by the winding number of a sampled boundary
polyline (refined on demand near the boundary).

``inclusion_radius`` returns the radius of the largest disc centered at a
point C of the real axis that the region is known to contain, per the
classical inclusion lemmas; each formula is only valid on a stated window
of centers.
"""

from __future__ import annotations

import cmath
import csv
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import IO, Iterable

import numpy as np

from .errors import NoBoundaryOnRay, OutOfWindow, TooCloseToBoundary

SQRT2 = math.sqrt(2.0)
SIN1 = math.sin(1.0)
E = math.e
RATIONAL_K = SQRT2 + 1.0

#: Collar half-width inside which winding verdicts are declared unreliable.
BOUNDARY_COLLAR = 1e-9

#: Polyline sizes: default sampling and the refinement cap.
POLYLINE_N = 4096
POLYLINE_N_MAX = 65536

#: Radial bisection tolerance for implicit boundary points.
RAY_TOL = 1e-12

# Rays from the center 1 stay inside any of the bounded regions only out to
# |w - 1| = 2 (cardioid right vertex); 4.0 is a safe outside bracket.
_RAY_HI = 4.0


class RegionKind(str, Enum):
    STARLIKE = "starlike"
    LEMNISCATE = "lemniscate"
    PARABOLIC = "parabolic"
    EXPONENTIAL = "exponential"
    CARDIOID = "cardioid"
    SINE = "sine"
    LUNE = "lune"
    RATIONAL = "rational"
    NEPHROID = "nephroid"
    SIGMOID = "sigmoid"


#: Kinds whose membership test is a winding-number test over a boundary polyline.
WINDING_KINDS = frozenset({RegionKind.SINE, RegionKind.RATIONAL})


@dataclass(frozen=True)
class Region:
    """A target region; ``alpha`` is required exactly for the starlike kind."""

    kind: RegionKind
    alpha: float | None = None

    def __post_init__(self) -> None:
        if self.kind is RegionKind.STARLIKE:
            if self.alpha is None:
                raise ValueError("starlike region requires an order alpha")
            if not (0.0 <= self.alpha < 1.0):
                raise ValueError(f"alpha must lie in [0, 1) (got {self.alpha!r})")
        elif self.alpha is not None:
            raise ValueError(f"{self.kind.value} region takes no alpha")

    @property
    def delta(self) -> float:
        """Half-width of the largest disc centered at 1 inside the region."""
        return _DELTAS[self.kind] if self.kind is not RegionKind.STARLIKE else 1.0 - self.alpha

    @property
    def membership_method(self) -> str:
        return "winding-number" if self.kind in WINDING_KINDS else "closed-form"

    def __str__(self) -> str:
        if self.kind is RegionKind.STARLIKE:
            return f"starlike({self.alpha:g})"
        return self.kind.value


_DELTAS = {
    RegionKind.LEMNISCATE: SQRT2 - 1.0,
    RegionKind.PARABOLIC: 0.5,
    RegionKind.EXPONENTIAL: 1.0 - 1.0 / E,
    RegionKind.CARDIOID: 2.0 / 3.0,
    RegionKind.SINE: SIN1,
    RegionKind.LUNE: 2.0 - SQRT2,
    RegionKind.RATIONAL: 3.0 - 2.0 * SQRT2,
    RegionKind.NEPHROID: 2.0 / 3.0,
    RegionKind.SIGMOID: (E - 1.0) / (E + 1.0),
}

# Validity windows (lo, hi, lo_closed, hi_closed) for the inclusion lemmas.
_WINDOWS = {
    RegionKind.LEMNISCATE: (2.0 * SQRT2 / 3.0, SQRT2, False, False),
    RegionKind.PARABOLIC: (0.5, 1.5, False, False),
    RegionKind.EXPONENTIAL: (1.0 / E, (E + 1.0 / E) / 2.0, True, True),
    RegionKind.CARDIOID: (1.0 / 3.0, 5.0 / 3.0, False, True),
    RegionKind.SINE: (1.0 - SIN1, 1.0 + SIN1, True, True),
    RegionKind.LUNE: (SQRT2 - 1.0, SQRT2 + 1.0, False, True),
    RegionKind.RATIONAL: (2.0 * (SQRT2 - 1.0), SQRT2, False, True),
    RegionKind.NEPHROID: (1.0, 5.0 / 3.0, True, False),
    RegionKind.SIGMOID: (2.0 / (1.0 + E), 2.0 * E / (1.0 + E), False, False),
}


def starlike(alpha: float) -> Region:
    return Region(RegionKind.STARLIKE, alpha)


def region(name: str | RegionKind, alpha: float | None = None) -> Region:
    kind = RegionKind(name)
    if kind is RegionKind.STARLIKE:
        return Region(kind, alpha)
    return Region(kind)


def all_regions(alpha: float = 0.0) -> list[Region]:
    """All ten regions, with the given order for the starlike one."""
    return [starlike(alpha)] + [Region(k) for k in RegionKind if k is not RegionKind.STARLIKE]


def _require_finite(w: complex) -> complex:
    w = complex(w)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise ValueError("membership requires a finite point")
    return w


def contains(reg: Region, w: complex) -> bool:
    """Open-region membership; boundary points test False.

    The lemniscate and lune inequalities admit a mirror component around -1;
    membership here means the component containing 1 (Re w > 0).  For the
    exponential and sigmoid regions, points whose logarithm argument falls on
    the branch cut (-inf, 0] are outside.
    """
    w = _require_finite(w)
    k = reg.kind
    if k is RegionKind.STARLIKE:
        return w.real > reg.alpha
    if k is RegionKind.LEMNISCATE:
        return w.real > 0.0 and abs(w * w - 1.0) < 1.0
    if k is RegionKind.PARABOLIC:
        return w.real > abs(w - 1.0)
    if k is RegionKind.EXPONENTIAL:
        if w.real <= 0.0:
            return False
        return abs(cmath.log(w)) < 1.0
    if k is RegionKind.CARDIOID:
        u, v = w.real, w.imag
        rr = 9.0 * u * u + 9.0 * v * v
        return (rr - 18.0 * u + 5.0) ** 2 - 16.0 * (rr - 6.0 * u + 1.0) < 0.0
    if k is RegionKind.LUNE:
        return w.real > 0.0 and abs(w * w - 1.0) < 2.0 * abs(w)
    if k is RegionKind.NEPHROID:
        u, v = w.real, w.imag
        return ((u - 1.0) ** 2 + v * v - 4.0 / 9.0) ** 3 - 4.0 * v * v / 3.0 < 0.0
    if k is RegionKind.SIGMOID:
        if w == 2.0:
            return False
        t = w / (2.0 - w)
        if t.imag == 0.0 and t.real <= 0.0:
            return False
        return abs(cmath.log(t)) < 1.0
    # sine / rational: winding test with on-demand polyline refinement
    return _winding_contains(k, w)


def inclusion_radius(reg: Region, center: float) -> float:
    """Radius of the largest disc about ``center`` certified inside the region.

    Raises OutOfWindow when the underlying inclusion formula does not apply
    at this center.
    """
    k = reg.kind
    if k is RegionKind.STARLIKE:
        if center <= reg.alpha:
            raise OutOfWindow(f"starlike inclusion needs center > alpha (got {center!r})")
        return center - reg.alpha
    lo, hi, lo_closed, hi_closed = _WINDOWS[k]
    ok_lo = center >= lo if lo_closed else center > lo
    ok_hi = center <= hi if hi_closed else center < hi
    if not (ok_lo and ok_hi):
        bra = "[" if lo_closed else "("
        ket = "]" if hi_closed else ")"
        raise OutOfWindow(f"{k.value} inclusion valid for C in {bra}{lo:.6g}, {hi:.6g}{ket} (got {center!r})")
    if k is RegionKind.LEMNISCATE:
        return SQRT2 - center
    if k is RegionKind.PARABOLIC:
        return center - 0.5
    if k is RegionKind.EXPONENTIAL:
        return center - 1.0 / E
    if k is RegionKind.CARDIOID:
        return (3.0 * center - 1.0) / 3.0
    if k is RegionKind.SINE:
        return SIN1 - abs(center - 1.0)
    if k is RegionKind.LUNE:
        return 1.0 - abs(SQRT2 - center)
    if k is RegionKind.RATIONAL:
        return center - 2.0 * (SQRT2 - 1.0)
    if k is RegionKind.NEPHROID:
        return 5.0 / 3.0 - center
    return (E - 1.0) / (E + 1.0) - abs(center - 1.0)  # sigmoid


# ---------------------------------------------------------------------------
# boundary parameterization


def _rational_map(z):
    """Generating map of the rational region, 1 + z(k+z)/(k(k-z)), k = 1+sqrt(2)."""
    k = RATIONAL_K
    return 1.0 + z * (k + z) / (k * (k - z))


def _outside_margin(kind: RegionKind, w):
    """Sign function: negative inside the region, positive outside (vectorized).

    Only defined for the closed-form kinds.  The lemniscate and lune margins
    include the half-plane term so the inside set is the component around 1.
    """
    u, v = np.real(w), np.imag(w)
    if kind is RegionKind.LEMNISCATE:
        return np.maximum(np.abs(w * w - 1.0) - 1.0, -u)
    if kind is RegionKind.PARABOLIC:
        return np.abs(w - 1.0) - u
    if kind is RegionKind.EXPONENTIAL:
        with np.errstate(divide="ignore", invalid="ignore"):
            val = np.abs(np.log(w + 0j)) - 1.0
        return np.where(np.isfinite(val), val, np.inf)
    if kind is RegionKind.CARDIOID:
        rr = 9.0 * u * u + 9.0 * v * v
        return (rr - 18.0 * u + 5.0) ** 2 - 16.0 * (rr - 6.0 * u + 1.0)
    if kind is RegionKind.LUNE:
        return np.maximum(np.abs(w * w - 1.0) - 2.0 * np.abs(w), -u)
    if kind is RegionKind.NEPHROID:
        return ((u - 1.0) ** 2 + v * v - 4.0 / 9.0) ** 3 - 4.0 * v * v / 3.0
    if kind is RegionKind.SIGMOID:
        with np.errstate(divide="ignore", invalid="ignore"):
            val = np.abs(np.log(w / (2.0 - w) + 0j)) - 1.0
        return np.where(np.isfinite(val), val, np.inf)
    raise ValueError(f"no closed-form margin for {kind}")


def _ray_lengths(kind: RegionKind, thetas: np.ndarray) -> np.ndarray:
    """Distance from 1 to the boundary along each ray direction (bisection).

    All ten regions are starlike with respect to 1, so the intersection is
    unique; the bracket [0, 4] always straddles it for the bounded kinds.
    """
    e = np.exp(1j * np.asarray(thetas, dtype=float))
    lo = np.zeros(e.shape)
    hi = np.full(e.shape, _RAY_HI)
    # 64 halvings take the bracket width below RAY_TOL
    for _ in range(64):
        mid = 0.5 * (lo + hi)
        inside = _outside_margin(kind, 1.0 + mid * e) < 0.0
        lo = np.where(inside, mid, lo)
        hi = np.where(inside, hi, mid)
    return 0.5 * (lo + hi)


def boundary_point(reg: Region, theta: float) -> complex:
    """A point of the region boundary in direction ``theta``.

    Sine and rational boundaries are the curve parameterizations themselves
    (1 + sin(e^{i theta}) and the rational map of e^{i theta}); for the other
    kinds the point is the unique boundary crossing of the ray from 1 in
    direction theta, resolved by bisection.
    """
    if not math.isfinite(theta):
        raise ValueError("theta must be finite")
    k = reg.kind
    if k is RegionKind.SINE:
        return 1.0 + cmath.sin(cmath.exp(1j * theta))
    if k is RegionKind.RATIONAL:
        return complex(_rational_map(cmath.exp(1j * theta)))
    if k is RegionKind.STARLIKE:
        if math.cos(theta) >= 0.0:
            raise NoBoundaryOnRay("the half-plane is unbounded along this ray")
        t = (reg.alpha - 1.0) / math.cos(theta)
        return complex(1.0 + t * cmath.exp(1j * theta))
    t = float(_ray_lengths(k, np.array([theta]))[0])
    return complex(1.0 + t * cmath.exp(1j * theta))


def boundary_thetas(reg: Region, n: int) -> np.ndarray:
    """Parameter grid used for boundary export: uniform on [0, 2pi) for the
    closed curves, uniform inside (pi/2, 3pi/2) for the starlike half-plane."""
    if n < 1:
        raise ValueError("need at least one point")
    if reg.kind is RegionKind.STARLIKE:
        return math.pi / 2.0 + math.pi * (np.arange(n) + 0.5) / n
    return 2.0 * math.pi * np.arange(n) / n


@lru_cache(maxsize=64)
def _cached_polyline(kind: RegionKind, n: int) -> np.ndarray:
    """Closed boundary polyline (n+1 vertices, last == first) for bounded kinds."""
    thetas = 2.0 * math.pi * np.arange(n) / n
    if kind is RegionKind.SINE:
        pts = 1.0 + np.sin(np.exp(1j * thetas))
    elif kind is RegionKind.RATIONAL:
        pts = _rational_map(np.exp(1j * thetas))
    else:
        pts = 1.0 + _ray_lengths(kind, thetas) * np.exp(1j * thetas)
    return np.append(pts, pts[0])


def boundary_polyline(reg: Region, n: int = POLYLINE_N) -> np.ndarray:
    """Closed polyline of ``n`` boundary samples (n+1 vertices)."""
    if reg.kind is RegionKind.STARLIKE:
        raise NoBoundaryOnRay("the half-plane boundary is not a closed curve")
    return _cached_polyline(reg.kind, n)


# ---------------------------------------------------------------------------
# winding-number membership


def _winding_numbers(vertices: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Winding numbers of a closed polyline about each query point."""
    x0, y0 = vertices[:-1].real, vertices[:-1].imag
    x1, y1 = vertices[1:].real, vertices[1:].imag
    pts = np.atleast_1d(points)
    out = np.zeros(pts.shape, dtype=int)
    chunk = max(1, 4_000_000 // max(1, x0.size))
    for i in range(0, pts.size, chunk):
        px = pts[i : i + chunk].real[:, None]
        py = pts[i : i + chunk].imag[:, None]
        cross = (x1 - x0) * (py - y0) - (y1 - y0) * (px - x0)
        up = (y0 <= py) & (y1 > py) & (cross > 0.0)
        down = (y1 <= py) & (y0 > py) & (cross < 0.0)
        out[i : i + chunk] = up.sum(axis=1) - down.sum(axis=1)
    return out


def _segment_distances(vertices: np.ndarray, point: complex) -> float:
    """Minimum distance from a point to a closed polyline."""
    p0 = vertices[:-1]
    d = vertices[1:] - p0
    dd = (d * d.conjugate()).real
    t = ((point - p0) * d.conjugate()).real / np.where(dd > 0.0, dd, 1.0)
    proj = p0 + np.clip(t, 0.0, 1.0) * d
    return float(np.min(np.abs(point - proj)))


def _reliable_gap(n: int) -> float:
    # conservative bound on polyline-vs-curve sag for the sine/rational curves
    return 50.0 * (2.0 * math.pi / n) ** 2


def _winding_contains(kind: RegionKind, w: complex) -> bool:
    n = POLYLINE_N
    while True:
        poly = _cached_polyline(kind, n)
        dist = _segment_distances(poly, w)
        if dist < BOUNDARY_COLLAR:
            return False  # boundary collar: open-region membership is False
        if dist >= _reliable_gap(n) or n >= POLYLINE_N_MAX:
            return abs(int(_winding_numbers(poly, np.array([w]))[0])) == 1
        n *= 4


def _segment_distances_batch(vertices: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Minimum distance from each point to a closed polyline."""
    p0 = vertices[:-1]
    d = vertices[1:] - p0
    dd = (d * d.conjugate()).real
    dd = np.where(dd > 0.0, dd, 1.0)
    out = np.empty(points.shape)
    chunk = max(1, 2_000_000 // max(1, p0.size))
    for i in range(0, points.size, chunk):
        pts = points[i : i + chunk][:, None]
        t = ((pts - p0) * d.conjugate()).real / dd
        proj = p0 + np.clip(t, 0.0, 1.0) * d
        out[i : i + chunk] = np.min(np.abs(pts - proj), axis=1)
    return out


def contains_batch(reg: Region, points: np.ndarray) -> np.ndarray:
    """Vectorized ``contains`` over an array of points (same semantics)."""
    pts = np.asarray(points, dtype=complex)
    if not np.all(np.isfinite(pts)):
        raise ValueError("membership requires finite points")
    k = reg.kind
    if k is RegionKind.STARLIKE:
        return pts.real > reg.alpha
    if k not in WINDING_KINDS:
        return np.asarray(_outside_margin(k, pts) < 0.0)
    n = POLYLINE_N
    while True:
        poly = _cached_polyline(k, n)
        dist = _segment_distances_batch(poly, pts)
        needs_more = (dist >= BOUNDARY_COLLAR) & (dist < _reliable_gap(n))
        if not np.any(needs_more) or n >= POLYLINE_N_MAX:
            break
        n *= 4
    inside = np.abs(_winding_numbers(poly, pts)) == 1
    inside[dist < BOUNDARY_COLLAR] = False
    return inside


def winding_membership(boundary_samples: Iterable[complex], w: complex) -> bool:
    """True iff the winding number of the closed sample polyline about w is +-1.

    Raises TooCloseToBoundary when w is within 1e-9 of a segment, where the
    verdict would be unreliable at the polyline's resolution.
    """
    w = _require_finite(w)
    verts = np.asarray(list(boundary_samples), dtype=complex)
    if verts.size < 4:
        raise ValueError("boundary polyline needs at least 4 samples")
    if verts[0] != verts[-1]:
        verts = np.append(verts, verts[0])
    if _segment_distances(verts, w) < BOUNDARY_COLLAR:
        raise TooCloseToBoundary(f"point within {BOUNDARY_COLLAR} of the boundary polyline")
    return abs(int(_winding_numbers(verts, np.array([w]))[0])) == 1


# ---------------------------------------------------------------------------
# distances


def _golden_min(f, lo: float, hi: float, iters: int = 80) -> tuple[float, float]:
    inv = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c, d = b - inv * (b - a), a + inv * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - inv * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def boundary_distance(reg: Region, w: complex) -> float:
    """Distance from w to the region boundary.

    For the curve-parameterized kinds (sine, rational) this is the minimal
    distance to the sampled curve, refined locally; for ray-resolved kinds it
    is the radial gap along the ray from 1 through w, which vanishes exactly
    on the boundary.
    """
    w = _require_finite(w)
    k = reg.kind
    if k is RegionKind.STARLIKE:
        return abs(w.real - reg.alpha)
    if k in WINDING_KINDS:
        n = 8192
        thetas = 2.0 * math.pi * np.arange(n) / n
        pts = _cached_polyline(k, n)[:-1]
        i = int(np.argmin(np.abs(pts - w)))
        width = 2.0 * math.pi / n

        if k is RegionKind.SINE:
            curve = lambda t: abs(1.0 + cmath.sin(cmath.exp(1j * t)) - w)
        else:
            curve = lambda t: abs(_rational_map(cmath.exp(1j * t)) - w)
        _, dist = _golden_min(curve, thetas[i] - 2.0 * width, thetas[i] + 2.0 * width)
        return min(dist, float(np.abs(pts[i] - w)))
    if w == 1.0:
        # center: distance equals the minimal ray length
        return min_center_distance(reg)[1]
    theta = cmath.phase(w - 1.0)
    t = float(_ray_lengths(k, np.array([theta]))[0])
    return abs(abs(w - 1.0) - t)


def min_center_distance(reg: Region, n: int = POLYLINE_N) -> tuple[float, float]:
    """(theta, distance) of the boundary point nearest to the center 1."""
    k = reg.kind
    if k is RegionKind.STARLIKE:
        return math.pi, 1.0 - reg.alpha
    pts = _cached_polyline(k, n)[:-1]
    dists = np.abs(pts - 1.0)
    i = int(np.argmin(dists))
    width = 2.0 * math.pi / n
    th0 = 2.0 * math.pi * i / n
    if k in WINDING_KINDS:
        if k is RegionKind.SINE:
            f = lambda t: abs(cmath.sin(cmath.exp(1j * t)))
        else:
            f = lambda t: abs(_rational_map(cmath.exp(1j * t)) - 1.0)
    else:
        f = lambda t: float(_ray_lengths(k, np.array([t]))[0])
    theta, dist = _golden_min(f, th0 - 2.0 * width, th0 + 2.0 * width)
    return theta % (2.0 * math.pi), min(dist, float(dists[i]))


# ---------------------------------------------------------------------------
# export


def write_boundary_csv(reg: Region, n_points: int, out: IO[str]) -> int:
    """Write `theta,re,im` rows (17 significant digits); returns the row count."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["theta", "re", "im"])
    for theta in boundary_thetas(reg, n_points):
        w = boundary_point(reg, float(theta))
        writer.writerow([f"{theta:.17g}", f"{w.real:.17g}", f"{w.imag:.17g}"])
    return n_points
