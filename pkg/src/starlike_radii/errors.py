"""Exception types shared across the package."""


class StarlikeRadiiError(Exception):
    """Base class for all package errors."""


class DomainError(StarlikeRadiiError):
    """An argument lies outside the mathematical domain of a bound or equation."""


class InfeasibleParams(StarlikeRadiiError):
    """Class parameters violate an admissibility invariant (e.g. n=|3c-q| > 1)."""


class WrongVariant(StarlikeRadiiError):
    """An operation specific to one class variant was called with another."""


class OutOfWindow(StarlikeRadiiError):
    """Disc-inclusion formula queried outside its validity window for the center."""


class NoRoot(StarlikeRadiiError):
    """No sign change found in the search interval after full grid refinement."""


class NoBoundaryOnRay(StarlikeRadiiError):
    """The region is unbounded along the requested ray direction."""


class TooCloseToBoundary(StarlikeRadiiError):
    """Query point is too close to the boundary polyline for a reliable verdict."""


class NearPole(StarlikeRadiiError):
    """Evaluation point is within tolerance of a pole of a factored function."""


class InvalidExtremal(StarlikeRadiiError):
    """Extremal-function construction is not valid at the given parameters."""
