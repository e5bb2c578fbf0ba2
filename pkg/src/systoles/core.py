"""Surfaces, points of Teichmüller space, scalars and the log charts.

A point of the Teichmüller space of the once-punctured torus or of the
four-punctured sphere is stored by its global coordinates ``(alpha, beta)``,
both strictly positive.  Coordinates are either exact rationals
(:class:`fractions.Fraction`) or finite floats; the two are never mixed
inside one point.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import DomainError, UnsupportedSurface

Scalar = Union[Fraction, float]

#: Global tolerance for deciding equality of floating point trace values.
EPS = 1e-9

SQRT3 = math.sqrt(3.0)


class SurfaceKind(enum.Enum):
    OncePuncturedTorus = "s11"
    FourPuncturedSphere = "s04"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace(",", "").replace("_", "")
        aliases = {
            "s11": cls.OncePuncturedTorus,
            "11": cls.OncePuncturedTorus,
            "torus": cls.OncePuncturedTorus,
            "oncepuncturedtorus": cls.OncePuncturedTorus,
            "s04": cls.FourPuncturedSphere,
            "04": cls.FourPuncturedSphere,
            "sphere": cls.FourPuncturedSphere,
            "fourpuncturedsphere": cls.FourPuncturedSphere,
        }
        try:
            return aliases[key]
        except KeyError:
            raise UnsupportedSurface(f"unknown surface {name!r}") from None

    @property
    def markoff_shift(self) -> int:
        """Constant subtracted in the flip recursion ``w = x*y - z - shift``."""
        return 0 if self is SurfaceKind.OncePuncturedTorus else 8


S11 = SurfaceKind.OncePuncturedTorus
S04 = SurfaceKind.FourPuncturedSphere


def is_exact(x) -> bool:
    return isinstance(x, Fraction)


def as_scalar(x, exact=None) -> Scalar:
    """Coerce ``x`` to a :data:`Scalar`.

    Integers and rationals become ``Fraction``; floats stay floats unless
    ``exact`` is true, in which case they are converted without rounding.
    Strings such as ``"7/3"`` or ``"0.75"`` are parsed; a string without a
    decimal point or exponent is exact.
    """
    if isinstance(x, bool):
        raise DomainError("booleans are not coordinates")
    if isinstance(x, str):
        s = x.strip()
        if exact or not any(ch in s for ch in ".eE") or s.lower() in ("inf", "nan"):
            try:
                return Fraction(s)
            except (ValueError, ZeroDivisionError) as exc:
                raise DomainError(f"cannot parse scalar {x!r}") from exc
        return as_scalar(float(s))
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x)
    xf = float(x)
    if not math.isfinite(xf):
        raise DomainError(f"non-finite scalar {x!r}")
    if exact:
        return Fraction(xf)
    return xf


def scalars_equal(a: Scalar, b: Scalar, eps: float = EPS) -> bool:
    """Exact equality for rationals, relative ``eps`` equality otherwise."""
    if is_exact(a) and is_exact(b):
        return a == b
    a, b = float(a), float(b)
    return abs(a - b) <= eps * max(1.0, abs(a), abs(b))


def log_scalar(x: Scalar) -> float:
    # log(num) - log(den) keeps log(1/x) == -log(x) bit for bit
    if is_exact(x):
        return math.log(x.numerator) - math.log(x.denominator)
    return math.log(x)


@dataclass(frozen=True)
class TeichPoint:
    surface: SurfaceKind
    alpha: Scalar
    beta: Scalar

    @property
    def exact(self) -> bool:
        return is_exact(self.alpha)

    def as_float(self) -> "TeichPoint":
        return TeichPoint(self.surface, float(self.alpha), float(self.beta))

    def coords(self):
        return self.alpha, self.beta

    def __str__(self):
        return f"{self.surface.value}({self.alpha}, {self.beta})"


@dataclass(frozen=True)
class LogPoint:
    surface: SurfaceKind
    A: float
    B: float


def make_point(surface, alpha, beta, exact=None) -> TeichPoint:
    """Validated constructor; raises :class:`DomainError` off the positive quadrant."""
    surface = SurfaceKind.parse(surface)
    a = as_scalar(alpha, exact)
    b = as_scalar(beta, exact)
    if is_exact(a) != is_exact(b):
        a, b = float(a), float(b)
    if not (a > 0 and b > 0):
        raise DomainError(f"coordinates must be positive, got ({alpha}, {beta})")
    return TeichPoint(surface, a, b)


def _point_unchecked(surface, alpha, beta) -> TeichPoint:
    if not (alpha > 0 and beta > 0):
        raise DomainError(f"positivity lost: ({alpha}, {beta})")
    if not is_exact(alpha) and not (math.isfinite(alpha) and math.isfinite(beta)):
        raise DomainError(f"non-finite coordinates ({alpha}, {beta})")
    return TeichPoint(surface, alpha, beta)


def to_log(p: TeichPoint) -> LogPoint:
    """Chart to the plane.

    Torus: ``(A, B) = (-log(alpha*beta), sqrt(3)*log(alpha/beta))``.
    Sphere: ``(A, B) = (log alpha, log beta)``.
    """
    la, lb = log_scalar(p.alpha), log_scalar(p.beta)
    if p.surface is S11:
        return LogPoint(p.surface, 0.0 - (la + lb), SQRT3 * (la - lb))
    return LogPoint(p.surface, la, lb)


def from_log(q: LogPoint) -> TeichPoint:
    A, B = float(q.A), float(q.B)
    if not (math.isfinite(A) and math.isfinite(B)):
        raise DomainError("log coordinates must be finite")
    if q.surface is S11:
        la = 0.5 * (-A + B / SQRT3)
        lb = 0.5 * (-A - B / SQRT3)
    else:
        la, lb = A, B
    try:
        return _point_unchecked(q.surface, math.exp(la), math.exp(lb))
    except OverflowError as exc:
        raise DomainError("log coordinates out of range") from exc


def log_point(surface, A, B) -> LogPoint:
    return LogPoint(SurfaceKind.parse(surface), float(A), float(B))
