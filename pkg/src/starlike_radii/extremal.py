"""Extremal functions of the three classes and their logarithmic derivatives.

Every extremal function here has the shape f(z) = z * prod_i (1 + a_i z + b_i z^2)^{e_i},
so zf'(z)/f(z) = 1 + sum_i e_i z (a_i + 2 b_i z) / (1 + a_i z + b_i z^2) evaluates
exactly as a rational expression, with poles confined to zeros of the
negative-exponent factors (all on or outside the unit circle for admissible
parameters).

At z = -r on the real axis the "small" extremals (f1, f2, f3) attain
1 + disc_bound(r) and the "capital" ones (F1, F3) attain 1 - disc_bound(r),
provided the signed coefficient differences are nonnegative; F2 attains the
refined h2 lower bound at z = +r.  These are the witnesses behind every
sharpness claim.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .bounds import ClassParams
from .errors import DomainError, InvalidExtremal, NearPole
from .regions import Region, RegionKind, boundary_distance

POLE_TOL = 1e-12

#: Tolerance on the h2 constraint 3c - q = 1 required by the F2 witness.
F2_CONSTRAINT_TOL = 1e-9


class ExtremalKind(Enum):
    f1 = "f1"
    g1 = "g1"
    p1 = "p1"
    F1 = "F1"
    f2 = "f2"
    g2 = "g2"
    F2 = "F2"
    G2 = "G2"
    f3 = "f3"
    F3 = "F3"


@dataclass(frozen=True)
class FactoredFunction:
    """f(z) = z * prod (1 + alpha_i z + beta_i z^2)^{e_i}."""

    factors: tuple[tuple[float, float, int], ...]

    def evaluate(self, z: complex) -> complex:
        out = complex(z)
        for a, b, e in self.factors:
            out *= (1.0 + a * z + b * z * z) ** e
        return out

    def log_derivative(self, z: complex) -> complex:
        """zf'(z)/f(z), exact rational evaluation; z must lie in the open disc."""
        z = complex(z)
        if abs(z) >= 1.0:
            raise DomainError("log_derivative requires |z| < 1")
        total = 1.0 + 0.0j
        for a, b, e in self.factors:
            den = 1.0 + a * z + b * z * z
            if e < 0 and abs(den) < POLE_TOL:
                raise NearPole(f"factor (1 + {a:g} z + {b:g} z^2) vanishes near z = {z}")
            total += e * z * (a + 2.0 * b * z) / den
        return total


def log_derivative(f: FactoredFunction, z: complex) -> complex:
    return f.log_derivative(z)


_CLASS_OF_KIND = {
    ExtremalKind.f1: "h1",
    ExtremalKind.g1: "h1",
    ExtremalKind.F1: "h1",
    ExtremalKind.f2: "h2",
    ExtremalKind.g2: "h2",
    ExtremalKind.F2: "h2",
    ExtremalKind.G2: "h2",
    ExtremalKind.f3: "h3",
    ExtremalKind.F3: "h3",
}


def build_extremal(kind: ExtremalKind, params: ClassParams) -> FactoredFunction:
    """The named extremal function at these parameters.

    p1 is lifted to z*p1(z) so that it fits the normalized factored form; its
    log-derivative is then 1 + z p1'/p1.  Construction fails (InvalidExtremal)
    when the extremality side conditions do not hold: the small/capital pairs
    need the signed differences (6b-4c, 4c-q), (5b-3c, 3c-q) or (4b-q) to be
    nonnegative.
    """
    want = _CLASS_OF_KIND.get(kind)
    if want is not None and params.kind != want:
        raise InvalidExtremal(f"{kind.value} belongs to class {want}, got {params.kind}")
    q = params.q
    if kind is ExtremalKind.p1:
        return FactoredFunction(((-q, 1.0, 1), (0.0, -1.0, -1)))
    signed = params.signed_derived()
    if params.kind == "h1":
        u, v = signed
        if kind in (ExtremalKind.f1, ExtremalKind.F1) and (u < 0.0 or v < 0.0):
            raise InvalidExtremal("f1/F1 require b >= 2c/3 and c >= q/4")
        if kind is ExtremalKind.g1:
            return FactoredFunction(((-q, 1.0, 1), (-v, 1.0, 1), (0.0, -1.0, -2)))
        if kind is ExtremalKind.f1:
            return FactoredFunction(((-q, 1.0, 1), (-v, 1.0, 1), (-u, 1.0, 1), (0.0, -1.0, -3)))
        return FactoredFunction(((0.0, -1.0, 3), (-q, 1.0, -1), (-v, 1.0, -1), (-u, 1.0, -1)))
    if params.kind == "h2":
        u, v = signed
        if kind is ExtremalKind.f2 and (u < 0.0 or v < 0.0):
            raise InvalidExtremal("f2 requires b >= 3c/5 and c >= q/3")
        if kind is ExtremalKind.g2:
            return FactoredFunction(((-q, 1.0, 1), (-v, 0.0, 1), (0.0, -1.0, -2)))
        if kind is ExtremalKind.f2:
            return FactoredFunction(((-q, 1.0, 1), (-v, 0.0, 1), (-u, 1.0, 1), (0.0, -1.0, -3)))
        if kind is ExtremalKind.F2:
            return FactoredFunction(((v, 0.0, 1), (0.0, -1.0, 2), (u, 1.0, -1), (2.0 * v, 1.0, -1), (q, 1.0, -1)))
        return FactoredFunction(((0.0, -1.0, 1), (q, 1.0, -1), (v, 0.0, -1)))  # G2
    (u,) = signed
    if u < 0.0:
        raise InvalidExtremal("f3/F3 require b >= q/4")
    if kind is ExtremalKind.f3:
        return FactoredFunction(((-q, 1.0, 1), (-u, 1.0, 1), (0.0, -1.0, -2)))
    return FactoredFunction(((0.0, -1.0, 2), (-q, 1.0, -1), (-u, 1.0, -1)))


# witness per (region kind, class kind) for the parts claimed sharp, and the
# sign of the real evaluation point (z = sign * rho)
_WITNESS: dict[tuple[RegionKind, str], tuple[ExtremalKind, int]] = {
    (RegionKind.STARLIKE, "h1"): (ExtremalKind.F1, -1),
    (RegionKind.STARLIKE, "h2"): (ExtremalKind.F2, +1),
    (RegionKind.STARLIKE, "h3"): (ExtremalKind.F3, -1),
    (RegionKind.LEMNISCATE, "h1"): (ExtremalKind.f1, -1),
    (RegionKind.LEMNISCATE, "h2"): (ExtremalKind.f2, -1),
    (RegionKind.LEMNISCATE, "h3"): (ExtremalKind.f3, -1),
    (RegionKind.PARABOLIC, "h1"): (ExtremalKind.F1, -1),
    (RegionKind.PARABOLIC, "h3"): (ExtremalKind.F3, -1),
    (RegionKind.EXPONENTIAL, "h1"): (ExtremalKind.F1, -1),
    (RegionKind.EXPONENTIAL, "h3"): (ExtremalKind.F3, -1),
    (RegionKind.CARDIOID, "h1"): (ExtremalKind.F1, -1),
    (RegionKind.CARDIOID, "h3"): (ExtremalKind.F3, -1),
    (RegionKind.SINE, "h1"): (ExtremalKind.f1, -1),
    (RegionKind.SINE, "h2"): (ExtremalKind.f2, -1),
    (RegionKind.SINE, "h3"): (ExtremalKind.f3, -1),
    (RegionKind.LUNE, "h1"): (ExtremalKind.F1, -1),
    (RegionKind.LUNE, "h3"): (ExtremalKind.F3, -1),
    (RegionKind.RATIONAL, "h1"): (ExtremalKind.F1, -1),
    (RegionKind.RATIONAL, "h3"): (ExtremalKind.F3, -1),
    (RegionKind.NEPHROID, "h1"): (ExtremalKind.f1, -1),
    (RegionKind.NEPHROID, "h2"): (ExtremalKind.f2, -1),
    (RegionKind.NEPHROID, "h3"): (ExtremalKind.f3, -1),
    (RegionKind.SIGMOID, "h1"): (ExtremalKind.f1, -1),
    (RegionKind.SIGMOID, "h2"): (ExtremalKind.f2, -1),
    (RegionKind.SIGMOID, "h3"): (ExtremalKind.F3, -1),
}


def sharpness_witness(reg: Region, params: ClassParams) -> tuple[ExtremalKind, int] | None:
    """(extremal kind, evaluation sign) for a part claimed sharp, else None."""
    return _WITNESS.get((reg.kind, params.kind))


def sign_conditions_hold(reg: Region, params: ClassParams) -> bool:
    """Whether the equality display behind the sharpness claim applies here.

    The signed differences must be nonnegative; the (starlike, h2) witness
    additionally pins 3c - q = 1.
    """
    signed = params.signed_derived()
    if any(v < 0.0 for v in signed):
        return False
    if params.kind == "h2" and reg.kind is RegionKind.STARLIKE:
        return abs(signed[1] - 1.0) <= F2_CONSTRAINT_TOL
    return True


def sharpness_residual(reg: Region, kind: ExtremalKind, params: ClassParams, rho: float) -> float:
    """Distance from the witness image point to the region boundary at z = +-rho.

    Zero (to solver precision) exactly when rho is the sharp radius for this
    part; the witness kind must be the tabled one for the part.
    """
    if not (0.0 < rho < 1.0):
        raise DomainError(f"rho must lie in (0, 1) (got {rho!r})")
    witness = sharpness_witness(reg, params)
    if witness is None:
        raise InvalidExtremal(f"no sharpness construction for ({reg}, {params.kind})")
    tabled_kind, sign = witness
    if kind is not tabled_kind:
        raise InvalidExtremal(f"({reg}, {params.kind}) uses witness {tabled_kind.value}, got {kind.value}")
    if not sign_conditions_hold(reg, params):
        raise InvalidExtremal("sign conditions for the sharpness display fail at these parameters")
    f = build_extremal(kind, params)
    w = f.log_derivative(sign * rho)
    k = reg.kind
    if k is RegionKind.STARLIKE:
        return abs(w.real - reg.alpha)
    if k is RegionKind.LEMNISCATE:
        return abs(abs(w * w - 1.0) - 1.0)
    if k is RegionKind.PARABOLIC:
        return abs(w.real - abs(w - 1.0))
    if k is RegionKind.EXPONENTIAL:
        return abs(abs(cmath.log(w)) - 1.0)
    if k is RegionKind.LUNE:
        return abs(abs(w * w - 1.0) - 2.0 * abs(w))
    if k is RegionKind.SIGMOID:
        return abs(abs(cmath.log(w / (2.0 - w))) - 1.0)
    # cardioid, sine, nephroid, rational: distance to the boundary curve
    return boundary_distance(reg, w)
