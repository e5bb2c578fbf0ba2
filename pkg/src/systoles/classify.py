"""Systole and 2-systole classification.

Two independent routes are provided.  :func:`classify` counts ties among
the shortest curves produced by best-first enumeration of the region tree.
:func:`gamma_position` and :func:`delta_membership` instead move the point
to its fundamental region with the mapping class group action and read the
answer off the base triple and its three flips.

Exact rational points are decided exactly.  Float points use the relative
tolerance :data:`~systoles.core.EPS`; a gap between two relevant trace
values that is larger than ``EPS`` but not larger than ``10 * EPS`` raises
:class:`~systoles.errors.ToleranceAmbiguity`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from . import curvetree
from .core import EPS, S04, S11, Scalar, SurfaceKind, TeichPoint, make_point
from .errors import ToleranceAmbiguity
from .mcg import reduce_to_fundamental
from .rep import base_traces, geodesic_length


class GammaPosition(enum.Enum):
    Vertex = "Vertex"
    EdgeInterior = "EdgeInterior"
    OffTree = "OffTree"


_BY_COUNT = {3: GammaPosition.Vertex, 2: GammaPosition.EdgeInterior, 1: GammaPosition.OffTree}


@dataclass(frozen=True)
class Classification:
    point: TeichPoint
    systole_count: int
    systole_value: Scalar
    systole_regions: tuple
    two_systole_count: int
    two_systole_value: Scalar
    two_systole_regions: tuple
    gamma: GammaPosition
    in_delta0: bool
    in_delta1: bool
    systole_length: float
    two_systole_length: float

    @property
    def backend(self):
        return "exact" if self.point.exact else "float"


class _Comparator:
    """Equality of trace values with the ambiguity check for floats."""

    def __init__(self, exact, eps=EPS):
        self.exact = exact
        self.eps = eps

    def equal(self, a, b):
        if self.exact:
            return a == b
        gap = abs(a - b) / max(1.0, abs(a), abs(b))
        if self.eps < gap <= 10 * self.eps:
            raise ToleranceAmbiguity(
                f"trace values {a!r} and {b!r} differ by {gap:.3g} (relative); "
                "retry with exact rational coordinates")
        return gap <= self.eps


def _groups(p, cmp, wanted=2):
    """First ``wanted`` tie groups of curves, each known to be complete."""
    k = 8
    while True:
        curves = curvetree.enumerate(p, k)
        groups = []
        for c in curves:
            if groups and cmp.equal(groups[-1][0].value, c.value):
                groups[-1].append(c)
            else:
                groups.append([c])
        # the last group may still grow; we need `wanted` groups before it
        if len(groups) > wanted:
            return groups[:wanted]
        k *= 2


def classify(p: TeichPoint, eps: float = EPS) -> Classification:
    cmp = _Comparator(p.exact, eps)
    first, second = _groups(p, cmp)
    sys_val, two_val = first[0].value, second[0].value
    n1, n2 = len(first), len(second)
    return Classification(
        point=p,
        systole_count=n1,
        systole_value=sys_val,
        systole_regions=tuple(c.region for c in first),
        two_systole_count=n2,
        two_systole_value=two_val,
        two_systole_regions=tuple(c.region for c in second),
        gamma=_BY_COUNT.get(n1, GammaPosition.Vertex),
        in_delta0=n2 >= 2,
        in_delta1=n2 >= 3,
        systole_length=geodesic_length(sys_val),
        two_systole_length=geodesic_length(two_val),
    )


def _reduced_neighbourhood(p):
    _, q = reduce_to_fundamental(p)
    x, y, z, w = base_traces(q)
    shift = p.surface.markoff_shift
    flips = (y * z - x - shift, x * z - y - shift, w)
    return (x, y, z), flips


def gamma_position(p: TeichPoint, eps: float = EPS) -> GammaPosition:
    """Position of ``p`` relative to the tree of points with tied systoles."""
    cmp = _Comparator(p.exact, eps)
    triple, flips = _reduced_neighbourhood(p)
    a, b, c = sorted(triple)
    ab, bc = cmp.equal(a, b), cmp.equal(b, c)
    if ab and bc:
        return GammaPosition.Vertex
    if ab and all(f > a or cmp.equal(f, a) for f in flips):
        return GammaPosition.EdgeInterior
    return GammaPosition.OffTree


def delta_membership(p: TeichPoint, eps: float = EPS) -> tuple:
    """``(in_delta0, in_delta1)`` from the reduced triple and its flips.

    At the reduced point the 2-systoles are among the base triple and its
    three flips, so counting ties there needs no enumeration.
    """
    cmp = _Comparator(p.exact, eps)
    triple, flips = _reduced_neighbourhood(p)
    lo = min(triple)
    in_delta1 = all(cmp.equal(v, lo) for v in triple)
    rest = sorted(v for v in triple + flips if not cmp.equal(v, lo))
    second = rest[0]
    ties = sum(1 for v in rest if cmp.equal(v, second))
    return ties >= 2, in_delta1


def in_sigma(p: TeichPoint, eps: float = EPS) -> bool:
    """Membership in the base edge: ``x0 = y0 <= z0, w0``."""
    cmp = _Comparator(p.exact, eps)
    x, y, z, w = base_traces(p)
    return cmp.equal(x, y) and all(v > x or cmp.equal(v, x) for v in (z, w))


def _sphere_vprime(tol=1e-12):
    # on the edge beta = 1 between v0 (alpha = 1/2) and v1 (alpha = 2), solve z0 = w0
    def f(a):
        _, _, z, w = base_traces(TeichPoint(S04, a, 1.0))
        return z - w

    lo, hi = 0.5, 2.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    guess = Fraction(root).limit_denominator(1000)
    _, _, z, w = base_traces(TeichPoint(S04, guess, Fraction(1)))
    if z == w:
        return make_point(S04, guess, 1)
    return make_point(S04, root, 1.0)


def special_points(surface) -> dict:
    """``v0`` (three systoles), ``v1 = T v0`` and the ``S``-fixed point ``vprime``."""
    surface = SurfaceKind.parse(surface)
    if surface is S11:
        r = math.sqrt(0.5)
        return {
            "v0": make_point(S11, 1, 1),
            "v1": make_point(S11, Fraction(1, 2), Fraction(1, 2)),
            "vprime": make_point(S11, r, r),
        }
    return {
        "v0": make_point(S04, Fraction(1, 2), 1),
        "v1": make_point(S04, 2, 1),
        "vprime": _sphere_vprime(),
    }
