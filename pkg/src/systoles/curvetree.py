"""The tree of complementary regions and the trace recursion on it.

Regions are addressed by Farey slopes: the base regions are
``X0 = 1/0``, ``Y0 = 0/1``, ``Z0 = 1/1`` and ``W0 = -1/1``, and flipping the
region ``t`` of a triple ``(u, v, t)`` produces the slope ``u ± v`` other
than ``t``.  Every other region is reached from ``Z0`` (positive slopes)
or ``W0`` (negative slopes) by a Stern–Brocot path of ``L``/``R`` steps.

On the torus the slope ``p/q`` is the free homotopy class of the
Christoffel word with ``|p|`` letters ``U`` and ``q`` letters ``V``
(``v`` instead of ``V`` for negative slopes).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, NamedTuple

from . import _kernels_py, kernels
from .core import EPS, S11, Scalar, TeichPoint, is_exact
from .errors import DomainError, UnsupportedSurface
from .mcg import reduction_path
from .rep import base_traces, markoff_residual

#: Relative slack used by float descent and the monotone-frontier check.
FLOAT_SLACK = 1e-12


@dataclass(frozen=True, order=True)
class RegionAddress:
    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if gcd(p, q) != 1:
            raise DomainError(f"slope {p}/{q} is not primitive")
        p, q = _kernels_py.norm_slope(p, q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def parse(cls, text):
        text = str(text).strip()
        names = {"X0": (1, 0), "Y0": (0, 1), "Z0": (1, 1), "W0": (-1, 1)}
        if text.upper() in names:
            return cls(*names[text.upper()])
        num, _, den = text.partition("/")
        return cls(int(num), int(den) if den else 1)

    @property
    def slope(self):
        return (self.p, self.q)

    @property
    def base(self):
        """Base label the region descends from (``X0``, ``Y0``, ``Z0`` or ``W0``)."""
        if self.q == 0:
            return "X0"
        if self.p == 0:
            return "Y0"
        return "Z0" if self.p > 0 else "W0"

    @property
    def path(self) -> str:
        """Stern–Brocot path from the base region (empty for base regions)."""
        if self.q == 0 or self.p == 0:
            return ""
        a, b = abs(self.p), self.q
        steps = []
        while a != b:
            if a < b:
                steps.append("L")
                b -= a
            else:
                steps.append("R")
                a -= b
        return "".join(steps)

    def label(self):
        path = self.path
        return f"{self.base}:{path}" if path else self.base

    def __str__(self):
        return f"{self.p}/{self.q}"


X0 = RegionAddress(1, 0)
Y0 = RegionAddress(0, 1)
Z0 = RegionAddress(1, 1)
W0 = RegionAddress(-1, 1)


class Curve(NamedTuple):
    region: RegionAddress
    value: Scalar


@dataclass(frozen=True)
class Triple:
    """Three pairwise adjacent regions meeting at a vertex of the tree."""

    surface: object
    regions: tuple
    values: tuple

    def entries(self):
        return [Curve(r, v) for r, v in zip(self.regions, self.values)]

    def slopes(self):
        return tuple(r.slope for r in self.regions)

    def markoff_residual(self):
        return markoff_residual(self.surface, *self.values)

    @classmethod
    def _from_raw(cls, surface, vals, slopes):
        return cls(surface, tuple(RegionAddress(*s) for s in slopes), tuple(vals))


def root_triple(p: TeichPoint) -> Triple:
    x, y, z, _ = base_traces(p)
    return Triple(p.surface, (X0, Y0, Z0), (x, y, z))


# Slot permutation of each reduction step, with the slot that is flipped
# (if any).  ``(y, x, flip z)`` is written ((1, 0, 2), 2) and so on.
_STEP_SLOTS = {
    ("S",): ((1, 0, 2), 2),
    ("T",): ((0, 2, 1), 1),
    ("T", "S", "T"): ((2, 1, 0), 0),
    ("S", "T"): ((2, 0, 1), None),
    ("S", "T", "S", "T"): ((1, 2, 0), None),
}


def seed_triple(p: TeichPoint) -> Triple:
    """A triple at ``p`` whose values are read off near the minimum.

    For float points the root values can be far larger than the shortest
    traces, and each flip ``xy - z`` on the way down cancels digits.  Here
    the point itself is moved by the (well conditioned) mapping class
    action and only the slopes are carried along the flips.  Exact points
    use the root triple.
    """
    if p.exact:
        return root_triple(p)
    steps, q = reduction_path(p)
    slopes = (X0.slope, Y0.slope, Z0.slope)
    for step in steps:
        perm, i = _STEP_SLOTS[step]
        if i is not None:
            j, k = (i + 1) % 3, (i + 2) % 3
            slopes = slopes[:i] + (_kernels_py.flip_slope(slopes[j], slopes[k], slopes[i]),) + slopes[i + 1:]
        slopes = tuple(slopes[m] for m in perm)
    x, y, z, _ = base_traces(q)
    return Triple._from_raw(p.surface, (x, y, z), slopes)


def flip(t: Triple, index: int) -> Triple:
    """Replace entry ``index`` by the other region adjacent to the remaining two."""
    vals, slopes = _kernels_py.flip(t.values, t.slopes(), index, t.surface.markoff_shift)
    return Triple._from_raw(t.surface, vals, slopes)


def _exact(values):
    return all(is_exact(v) for v in values)


def descend_to_min(t: Triple) -> Triple:
    shift = t.surface.markoff_shift
    if _exact(t.values):
        vals, slopes, _ = _kernels_py.descend(t.values, t.slopes(), shift)
    else:
        vals, slopes = kernels.descend_float(t.values, t.slopes(), shift, FLOAT_SLACK)
    return Triple._from_raw(t.surface, vals, slopes)


def iter_curves(p: TeichPoint, visit=None) -> Iterator[Curve]:
    """All curves at ``p`` in ascending trace order (lazy, unbounded)."""
    t = seed_triple(p)
    shift = p.surface.markoff_shift
    tol = 0 if p.exact else FLOAT_SLACK
    for v, s in _kernels_py.iter_regions(t.values, t.slopes(), shift, tol, visit=visit):
        yield Curve(RegionAddress(*s), v)


def enumerate(p: TeichPoint, k: int) -> list:
    """The ``k`` shortest curves at ``p`` as ``Curve(region, trace)`` pairs.

    Ties keep their multiplicity as distinct regions and are ordered by
    slope.  Float points run through the compiled kernel when available.
    """
    if k < 1:
        raise DomainError("k must be at least 1")
    t = seed_triple(p)
    shift = p.surface.markoff_shift
    if p.exact:
        raw = _kernels_py.enumerate_values(t.values, t.slopes(), shift, k)
    else:
        raw = kernels.enumerate_float(t.values, t.slopes(), shift, k, FLOAT_SLACK)
    return [Curve(RegionAddress(a, b), v) for v, a, b in raw]


def distinct_values(curves, eps=EPS):
    out = []
    for c in curves:
        if not out or not _same(out[-1], c.value, eps):
            out.append(c.value)
    return out


def _same(a, b, eps):
    if is_exact(a) and is_exact(b):
        return a == b
    return abs(a - b) <= eps * max(1.0, abs(a), abs(b))


def _coeffs(s, u, v):
    """Integers ``(m, n)`` with ``s = m*u + n*v`` (``u, v`` unimodular)."""
    det = u[0] * v[1] - u[1] * v[0]
    m = (s[0] * v[1] - s[1] * v[0]) * det
    n = (u[0] * s[1] - u[1] * s[0]) * det
    return m, n


def triple_containing(p: TeichPoint, region) -> tuple:
    """Walk from the root to a triple containing ``region``.

    Returns ``(triple, index)`` where ``triple.regions[index] == region``.
    """
    region = region if isinstance(region, RegionAddress) else RegionAddress.parse(region)
    t = root_triple(p)
    target = region.slope
    shift = p.surface.markoff_shift
    vals, slopes = t.values, t.slopes()
    while target not in slopes:
        moved = False
        for i in range(3):
            j, k = (i + 1) % 3, (i + 2) % 3
            u, v, w = slopes[j], slopes[k], slopes[i]
            m, n = _coeffs(target, u, v)
            beyond = _kernels_py.flip_slope(u, v, w)
            bm, bn = _coeffs(beyond, u, v)
            # the branch across edge (u, v) away from w holds the vectors
            # whose coefficients share the sign pattern of the flipped region
            if m * n != 0 and (m * n > 0) == (bm * bn > 0):
                vals, slopes = _kernels_py.flip(vals, slopes, i, shift)
                moved = True
                break
        if not moved:
            raise AssertionError(f"could not navigate to {region}")
    out = Triple._from_raw(p.surface, vals, slopes)
    return out, slopes.index(target)


def region_value(p: TeichPoint, region) -> Scalar:
    """Trace value of a single region, computed along its tree path."""
    t, i = triple_containing(p, region)
    return t.values[i]


def christoffel_word(p: int, q: int) -> str:
    """Lower Christoffel word with ``p`` letters ``a`` and ``q`` letters ``b``."""
    if p < 0 or q < 0 or gcd(p, q) != 1:
        raise DomainError(f"need a primitive non-negative slope, got {p}/{q}")
    n = p + q
    out = []
    for i in range(1, n + 1):
        out.append("b" if (i * q) // n != ((i - 1) * q) // n else "a")
    return "".join(out)


def region_word(addr, surface=S11) -> str:
    """Group word in ``U, V`` whose trace is the region's trace on the torus."""
    if surface is not S11:
        raise UnsupportedSurface("region words are only available on the torus")
    addr = addr if isinstance(addr, RegionAddress) else RegionAddress.parse(addr)
    w = christoffel_word(abs(addr.p), addr.q)
    second = "V" if addr.p >= 0 else "v"
    return w.replace("a", "U").replace("b", second)
