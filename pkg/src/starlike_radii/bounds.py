"""Coefficient bounds for Caratheodory-type functions and the derived disc bounds.

The three source classes are parameterized by a fixed second coefficient:

* ``h1``: f = z + 6b z^2 + ..., factoring as f = z p h k with h, k, p of
  positive real part; derived parameters d = |6b-4c|, s = |4c-q|.
* ``h2``: f = z + 5b z^2 + ..., with the middle ratio of real part > 1/2;
  derived parameters m = |5b-3c|, n = |3c-q|.
* ``h3``: f = z + 4b z^2 + ..., f/(zp) of positive real part; derived
  parameter l = |4b-q|.

``disc_bound`` gives the radius of the disc centered at 1 that contains the
image of |z| = r under zf'(z)/f(z); ``refined_h2_lower`` gives the sharper
lower bound for Re(zf'/f) available in class h2.  All bound functions accept
a float or a numpy array for ``r``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InfeasibleParams, WrongVariant

# Bounds blow up at r = 1; evaluation is capped just below.
R_MAX = 1.0 - 1e-9

# The h2 refined lower bound is certified (small-branch selection) for r < 1/3.
JUSTIFIED_R_MAX = 1.0 / 3.0


def _check_r(r, upper: float = R_MAX) -> None:
    arr = np.asarray(r, dtype=float)
    if arr.size == 0:
        raise DomainError("r must be a nonempty scalar or array")
    if not np.all(np.isfinite(arr)):
        raise DomainError("r must be finite")
    if np.any(arr <= 0.0) or np.any(arr > upper):
        raise DomainError(f"r must lie in (0, {upper:.10g}]")


def _check_unit(name: str, value: float) -> None:
    if not (0.0 <= value <= 1.0):
        raise InfeasibleParams(f"{name} must lie in [0, 1] (got {value!r})")


@dataclass(frozen=True)
class ClassParams:
    """Raw inputs (b, c, q) of one source class plus its derived parameters.

    Construct through :meth:`h1`, :meth:`h2`, :meth:`h3` (or the
    ``*_from_derived`` helpers, which pick the canonical sign-nonnegative
    representative).  Admissibility is enforced at construction:
    b, c in [0, 1], q in [0, 2], and the derived-parameter caps d, s, m, l <= 2,
    n <= 1.
    """

    kind: str
    b: float
    q: float
    c: float | None = None
    d: float = field(init=False, default=0.0)
    s: float = field(init=False, default=0.0)
    m: float = field(init=False, default=0.0)
    n: float = field(init=False, default=0.0)
    l: float = field(init=False, default=0.0)

    def __post_init__(self) -> None:
        if self.kind not in ("h1", "h2", "h3"):
            raise InfeasibleParams(f"unknown class kind {self.kind!r}")
        _check_unit("b", self.b)
        if not (0.0 <= self.q <= 2.0):
            raise InfeasibleParams(f"q must lie in [0, 2] (got {self.q!r})")
        if self.kind == "h3":
            if self.c is not None:
                raise InfeasibleParams("class h3 takes no c parameter")
            l = abs(4.0 * self.b - self.q)
            if l > 2.0:
                raise InfeasibleParams(f"l=|4b-q| must be <= 2 (got {l:.6g})")
            object.__setattr__(self, "l", l)
            return
        if self.c is None:
            raise InfeasibleParams(f"class {self.kind} requires a c parameter")
        _check_unit("c", self.c)
        if self.kind == "h1":
            d = abs(6.0 * self.b - 4.0 * self.c)
            s = abs(4.0 * self.c - self.q)
            if d > 2.0:
                raise InfeasibleParams(f"d=|6b-4c| must be <= 2 (got {d:.6g})")
            if s > 2.0:
                raise InfeasibleParams(f"s=|4c-q| must be <= 2 (got {s:.6g})")
            object.__setattr__(self, "d", d)
            object.__setattr__(self, "s", s)
        else:
            m = abs(5.0 * self.b - 3.0 * self.c)
            n = abs(3.0 * self.c - self.q)
            if n > 1.0:
                raise InfeasibleParams(f"n=|3c-q| must be <= 1 (got {n:.6g})")
            if m > 2.0:
                raise InfeasibleParams(f"m=|5b-3c| must be <= 2 (got {m:.6g})")
            object.__setattr__(self, "m", m)
            object.__setattr__(self, "n", n)

    @classmethod
    def h1(cls, b: float, c: float, q: float) -> "ClassParams":
        return cls("h1", b, q, c)

    @classmethod
    def h2(cls, b: float, c: float, q: float) -> "ClassParams":
        return cls("h2", b, q, c)

    @classmethod
    def h3(cls, b: float, q: float) -> "ClassParams":
        return cls("h3", b, q)

    @classmethod
    def h1_from_derived(cls, d: float, s: float, q: float) -> "ClassParams":
        """h1 params with 6b-4c = d >= 0 and 4c-q = s >= 0."""
        c = (q + s) / 4.0
        return cls("h1", (d + 4.0 * c) / 6.0, q, c)

    @classmethod
    def h2_from_derived(cls, m: float, n: float, q: float) -> "ClassParams":
        """h2 params with 5b-3c = m >= 0 and 3c-q = n >= 0."""
        c = (q + n) / 3.0
        return cls("h2", (m + 3.0 * c) / 5.0, q, c)

    @classmethod
    def h3_from_derived(cls, l: float, q: float) -> "ClassParams":
        """h3 params with 4b-q = l >= 0."""
        return cls("h3", (l + q) / 4.0, q)

    def derived(self) -> dict[str, float]:
        """The derived parameters defined for this variant."""
        if self.kind == "h1":
            return {"d": self.d, "s": self.s}
        if self.kind == "h2":
            return {"m": self.m, "n": self.n}
        return {"l": self.l}

    def signed_derived(self) -> tuple[float, ...]:
        """Signed coefficient differences, as used by the extremal functions."""
        if self.kind == "h1":
            return (6.0 * self.b - 4.0 * self.c, 4.0 * self.c - self.q)
        if self.kind == "h2":
            return (5.0 * self.b - 3.0 * self.c, 3.0 * self.c - self.q)
        return (4.0 * self.b - self.q,)

    def __str__(self) -> str:
        if self.kind == "h3":
            return f"h3(b={self.b:g}, q={self.q:g})"
        return f"{self.kind}(b={self.b:g}, c={self.c:g}, q={self.q:g})"


def mccarty_upper(b: float, alpha: float, r):
    """Upper bound for |zp'(z)/p(z)| over |z| = r, p of real part > alpha with
    second coefficient 2b(1-alpha).

    Value: 2(1-a) r / (1-r^2) * (b r^2 + 2r + b) / ((1-2a) r^2 + 2b(1-a) r + 1).
    """
    _check_unit("b", b)
    if not (0.0 <= alpha < 1.0):
        raise DomainError(f"alpha must lie in [0, 1) (got {alpha!r})")
    _check_r(r)
    num = b * r * r + 2.0 * r + b
    den = (1.0 - 2.0 * alpha) * r * r + 2.0 * b * (1.0 - alpha) * r + 1.0
    return 2.0 * (1.0 - alpha) * r / (1.0 - r * r) * num / den


@dataclass(frozen=True)
class LowerBoundBranch:
    """Result of the two-branch lower bound for Re(zp'/p)."""

    c_b: float
    d_b: float
    r_b: float
    r_alpha: float
    value: float
    branch: str  # "small" when r_alpha <= r_b, else "large"


def _cb_db(b: float, alpha: float, r: float) -> tuple[float, float]:
    den = (1.0 + 2.0 * b * r + r * r) * (1.0 - r * r)
    c_b = ((1.0 + b * r) ** 2 - (2.0 * alpha - 1.0) * (b + r) ** 2 * r * r) / den
    d_b = 2.0 * (1.0 - alpha) * (b + r) * (1.0 + b * r) * r / den
    return c_b, d_b


def mccarty_lower(b: float, alpha: float, r: float) -> LowerBoundBranch:
    """Two-branch lower bound for Re(zp'(z)/p(z)) over |z| = r.

    Branch selection compares R_alpha = sqrt(alpha C_1) with R_b = C_b - D_b;
    ties take the small branch.
    """
    _check_unit("b", b)
    if not (0.0 <= alpha < 1.0):
        raise DomainError(f"alpha must lie in [0, 1) (got {alpha!r})")
    _check_r(r)
    c_b, d_b = _cb_db(b, alpha, r)
    c_1 = (1.0 - (2.0 * alpha - 1.0) * r * r) / (1.0 - r * r)
    r_b = c_b - d_b
    r_alpha = math.sqrt(alpha * c_1)
    if r_alpha <= r_b:
        num = b * r * r + 2.0 * r + b
        den = (1.0 + 2.0 * alpha * b * r + (2.0 * alpha - 1.0) * r * r) * (r * r + 2.0 * b * r + 1.0)
        value = -2.0 * (1.0 - alpha) * r * num / den
        branch = "small"
    else:
        value = (2.0 * math.sqrt(alpha * c_1) - c_1 - alpha) / (1.0 - alpha)
        branch = "large"
    return LowerBoundBranch(c_b, d_b, r_b, r_alpha, value, branch)


def lemma2_condition(b: float, r):
    """Small-branch selection certificate at alpha = 1/2, in closed form.

    Equals (C_b - D_b)^2 - C_1/2 and is positive on b in [0,1], r in (0, 1/3),
    which pins the lower bound used by ``refined_h2_lower`` to its small branch.
    """
    _check_unit("b", b)
    _check_r(r, upper=JUSTIFIED_R_MAX - 1e-15)
    num = -1.0 + 4.0 * r * r + 2.0 * b * b * r * r + 8.0 * b * r**3 + r**4 + 2.0 * b * b * r**4
    den = 2.0 * (r - 1.0) * (1.0 + r) * (1.0 + 2.0 * b * r + r * r) ** 2
    return num / den


def _term4(p: float, r):
    # (p r^2 + 4 r + p) / (r^2 + p r + 1)
    return (p * r * r + 4.0 * r + p) / (r * r + p * r + 1.0)


def disc_bound(params: ClassParams, r):
    """Radius M(r) of the disc |w - 1| <= M(r) containing the image of |z| = r
    under zf'/f, for f in the class described by ``params``."""
    _check_r(r)
    lead = r / (1.0 - r * r)
    if params.kind == "h1":
        return lead * (_term4(params.d, r) + _term4(params.s, r) + _term4(params.q, r))
    if params.kind == "h2":
        n = params.n
        mid = (n * r * r + 2.0 * r + n) / (n * r + 1.0)
        return lead * (_term4(params.m, r) + mid + _term4(params.q, r))
    return lead * (_term4(params.l, r) + _term4(params.q, r))


def refined_h2_lower(params: ClassParams, r):
    """Sharper lower bound for Re(zf'/f) in class h2.

    Uses the two-branch lower bound for the middle factor instead of its
    modulus bound; certified by ``lemma2_condition`` for r < 1/3
    (``JUSTIFIED_R_MAX``) and still evaluable beyond.
    """
    if params.kind != "h2":
        raise WrongVariant(f"refined_h2_lower requires class h2 (got {params.kind})")
    _check_r(r)
    m, n, q = params.m, params.n, params.q
    lead = r / (1.0 - r * r)
    middle = r * (n + 2.0 * r + n * r * r) / ((1.0 + n * r) * (1.0 + 2.0 * n * r + r * r))
    return 1.0 - lead * (_term4(m, r) + _term4(q, r)) - middle
