"""Lifted holonomy matrices, traces of group words, and geodesic length.

Group words are strings over the generators ``U``, ``V`` (and ``W`` on the
four-punctured sphere); a lowercase letter is the inverse generator.  A
word is read left to right as a matrix product, so ``"Uv"`` evaluates to
``phi @ inverse(psi)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .core import EPS, S04, S11, Scalar, TeichPoint, is_exact
from .errors import DomainError, IllegalLetter, RelationViolation


class Mat2:
    """A 2x2 matrix ``[[a, b], [c, d]]`` over exact or float scalars."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = a, b, c, d

    def __matmul__(self, o):
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def inverse(self):
        det = self.det()
        return Mat2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, o):
        return isinstance(o, Mat2) and self.entries() == o.entries()

    def __repr__(self):
        return f"Mat2([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


IDENTITY = Mat2(1, 0, 0, 1)


class BaseTraces(NamedTuple):
    x0: Scalar
    y0: Scalar
    z0: Scalar
    w0: Scalar


def generator_matrices(p: TeichPoint) -> list:
    """``[phi, psi]`` on the torus, ``[phi, psi, omega]`` on the sphere."""
    al, be = p.alpha, p.beta
    if p.surface is S11:
        phi = Mat2(al, -al, -be * be / al, (1 + be * be) / al)
        psi = Mat2(be, al * al / be, be, (1 + al * al) / be)
        return [phi, psi]
    phi = Mat2(al, -al - 1, al + 1, -al - 2)
    psi = Mat2(-al - 2, -(al + 1) * be, (al + 1) / be, al)
    omega = Mat2(-1, -(al + 1) * (be + 1) / al, 0, -1)
    return [phi, psi, omega]


def letters_for(surface) -> str:
    return "UV" if surface is S11 else "UVW"


def word_matrix(p: TeichPoint, word: str, gens=None) -> Mat2:
    legal = letters_for(p.surface)
    if gens is None:
        gens = generator_matrices(p)
    table = {}
    for letter, m in zip(legal, gens):
        table[letter] = m
        table[letter.lower()] = m.inverse()
    out = IDENTITY
    for ch in word:
        try:
            out = out @ table[ch]
        except KeyError:
            raise IllegalLetter(f"letter {ch!r} is not a generator on {p.surface.value}") from None
    return out


def trace_of_word(p: TeichPoint, word: str) -> Scalar:
    """Absolute trace of the holonomy of ``word``."""
    if not word:
        raise IllegalLetter("trace of the empty word is not a curve trace")
    return abs(word_matrix(p, word).trace())


def _residual_ok(value, target, exact):
    if exact:
        return value == target
    return abs(value - target) <= EPS * max(1.0, abs(target))


@dataclass(frozen=True)
class RelationReport:
    traces: dict
    residuals: dict

    @property
    def max_residual(self):
        return max(abs(r) for r in self.residuals.values())


def check_relations(p: TeichPoint) -> RelationReport:
    """Verify the puncture relations of the lift at ``p``.

    Torus: the commutator ``phi^-1 psi^-1 phi psi`` has trace -2.  Sphere:
    ``phi``, ``psi``, ``omega`` and ``omega psi phi`` all have trace -2.
    """
    gens = generator_matrices(p)
    if p.surface is S11:
        phi, psi = gens
        words = {"commutator": phi.inverse() @ psi.inverse() @ phi @ psi}
    else:
        phi, psi, omega = gens
        words = {"phi": phi, "psi": psi, "omega": omega, "omega_psi_phi": omega @ psi @ phi}
    traces = {k: m.trace() for k, m in words.items()}
    residuals = {k: t + 2 for k, t in traces.items()}
    for k, t in traces.items():
        if not _residual_ok(t, -2, p.exact):
            raise RelationViolation(f"trace of {k} is {t}, expected -2")
    dets = [m.det() for m in gens]
    for m, d in zip("UVW", dets):
        if not _residual_ok(d, 1, p.exact):
            raise RelationViolation(f"det of generator {m} is {d}")
    return RelationReport(traces, residuals)


def char_tuple(p: TeichPoint):
    """Signed character triple.

    Torus: ``(tr U, tr V, tr UV)``.  Sphere: ``(tr UV, tr VW, tr WU)``.
    """
    al, be = p.alpha, p.beta
    if p.surface is S11:
        n = al * al + be * be + 1
        return (n / al, n / be, n / (al * be))
    a1, b1 = al + 1, be + 1
    return (
        2 - a1 * a1 * b1 * b1 / be,
        2 - a1 * a1 * b1 / (al * be),
        2 - a1 * a1 * b1 / al,
    )


def base_traces(p: TeichPoint) -> BaseTraces:
    """Trace values of the four base regions at ``p``.

    ``x0, y0, z0`` are the traces of ``U, V, UV`` (torus) or ``VW, WU, UV``
    (sphere); ``w0`` is the flip of ``z0``.
    """
    t = char_tuple(p)
    if p.surface is S11:
        x, y, z = t
    else:
        z, x, y = (-t[0], -t[1], -t[2])
    w = x * y - z - p.surface.markoff_shift
    return BaseTraces(x, y, z, w)


def markoff_residual(surface, x, y, z):
    """Left-hand side of the surface's Markoff-type identity (zero on curves)."""
    r = x * x + y * y + z * z - x * y * z
    if surface is S04:
        r = r + 8 * (x + y + z) + 28
    return r


def geodesic_length(trace: Scalar) -> float:
    """Length ``2 acosh(trace / 2)`` of the closed geodesic with this trace."""
    if not (trace > 2) or not (is_exact(trace) or math.isfinite(trace)):
        raise DomainError(f"trace {trace} does not belong to a closed geodesic")
    return 2.0 * math.acosh(float(trace) / 2.0)
