"""Brute-force validators independent of the region tree.

* :func:`orbit_values` evaluates ``x0`` on mapping class group translates of
  a point; every curve trace arises this way.
* :func:`christoffel_trace` multiplies holonomy matrices along the
  Christoffel word of a slope (torus).
* :func:`automorphism_trace` pushes a base element of the sphere group
  through the induced free group automorphisms and multiplies matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import S04, S11, TeichPoint
from .curvetree import RegionAddress, region_word
from .errors import DepthExceeded, UnsupportedSurface
from .mcg import McgWord, apply_letter
from .rep import base_traces, trace_of_word

MAX_DEPTH = 12

# Relators of PSL(2, Z) = <S, T | S^2, (ST)^3>; a word containing one of
# these subwords is never the shortest word for its group element.
_NON_GEODESIC = (
    ("S", "T", "S", "T"),
    ("T", "S", "T", "S"),
    ("S", "Tinv", "S", "Tinv"),
    ("Tinv", "S", "Tinv", "S"),
)
_NEXT = {None: ("S", "T", "Tinv"), "S": ("T", "Tinv"), "T": ("S", "T"), "Tinv": ("S", "Tinv")}


def canonical_words(depth):
    """Words of length ``<= depth`` breadth-first, one per reduced spelling.

    Words are freely reduced, never contain ``S S`` and avoid the subwords
    ``(ST)^2``, ``(TS)^2`` and their inverses, which can always be
    shortened using ``(ST)^3 = 1``.  Each group element of word length
    ``<= depth`` therefore appears at least once.
    """
    level = [()]
    yield ()
    for _ in range(depth):
        nxt = []
        for w in level:
            for ch in _NEXT[w[0] if w else None]:
                cand = (ch,) + w
                if cand[:4] in _NON_GEODESIC:
                    continue
                nxt.append(cand)
        level = nxt
        yield from level


def iter_translates(p: TeichPoint, depth):
    """Yield ``(word, g(p))`` for every canonical word, sharing prefixes."""
    level = [((), p)]
    yield (), p
    for _ in range(depth):
        nxt = []
        for w, q in level:
            for ch in _NEXT[w[0] if w else None]:
                cand = (ch,) + w
                if cand[:4] in _NON_GEODESIC:
                    continue
                nxt.append((cand, apply_letter(q, ch)))
        level = nxt
        yield from level


@dataclass
class OrbitSample:
    depth: int
    values: list
    witnesses: dict = field(default_factory=dict)


def orbit_values(p: TeichPoint, depth: int) -> OrbitSample:
    """Distinct values ``x0(g(p))`` over canonical words ``g`` of length ``<= depth``."""
    if depth < 0 or depth > MAX_DEPTH:
        raise DepthExceeded(f"depth must lie in [0, {MAX_DEPTH}], got {depth}")
    witnesses = {}
    for w, q in iter_translates(p, depth):
        v = base_traces(q).x0
        if v not in witnesses:
            witnesses[v] = McgWord(w)
    values = sorted(witnesses)
    return OrbitSample(depth, values, {v: witnesses[v] for v in values})


def christoffel_trace(p: TeichPoint, slope) -> object:
    if p.surface is not S11:
        raise UnsupportedSurface("Christoffel words describe torus curves only")
    if not isinstance(slope, RegionAddress):
        slope = RegionAddress(*slope) if isinstance(slope, tuple) else RegionAddress.parse(slope)
    return trace_of_word(p, region_word(slope))


def _inv(word):
    return word[::-1].swapcase()


def free_reduce(word):
    out = []
    for ch in word:
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def _substitute(word, images):
    full = dict(images)
    for k, v in images.items():
        full[k.lower()] = _inv(v)
    return free_reduce("".join(full[ch] for ch in word))


# Pull-back automorphisms g_*^{-1} of pi_1 of the sphere, u, v, w -> U, V, W.
_SIGMA_PULL = {"U": "U", "V": "V", "W": "uvw"}
_TAU_PULL = {"U": "uvw", "V": "V", "W": "W"}
_TAU_INV_PULL = {"U": "vwu", "V": "V", "W": "W"}

# S = sigma tau^-2: pull back by sigma first, then twice by tau^-1.
_LETTER_PULLS = {
    "S": (_SIGMA_PULL, _TAU_INV_PULL, _TAU_INV_PULL),
    "T": (_TAU_PULL,),
    "Tinv": (_TAU_INV_PULL,),
}

BASE_ELEMENTS = {"vw": "VW", "wu": "WU", "uv": "UV"}


def pull_back(word: str, g) -> str:
    """``g_*^{-1}(word)`` for a mapping class word on the sphere.

    For ``g = g1 g2 ... gk`` the automorphisms of ``g1`` are applied first.
    """
    g = McgWord.parse(g)
    for letter in g.letters:
        for images in _LETTER_PULLS[letter]:
            word = _substitute(word, images)
    return word


def automorphism_trace(p: TeichPoint, mcg_word, base: str = "vw"):
    """Trace of ``g_*^{-1}(base)`` at ``p``; equals the base trace at ``g(p)``."""
    if p.surface is not S04:
        raise UnsupportedSurface("the automorphism oracle covers the four-punctured sphere")
    return trace_of_word(p, pull_back(BASE_ELEMENTS[base], mcg_word))
