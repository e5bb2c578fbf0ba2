"""Figures of the systole tree and the 2-systole set in the log chart.

Geometry is produced as lists of :class:`Polyline` objects, serialized as
SVG 1.1 (inline styles, no scripts) and as a CSV sidecar listing every
vertex.  The SVG is meant for eyes; the CSV and :func:`tree_graph` are what
the tests look at.
"""

from __future__ import annotations

import csv
import io
import math
from typing import NamedTuple

from .core import S11, LogPoint, SurfaceKind, from_log, to_log
from .mcg import McgWord, apply_word
from .oracle import canonical_words

LOG2 = math.log(2.0)
ROUND = 7  # decimals used to identify tree vertices


class Polyline(NamedTuple):
    kind: str  # "edge", "ray"
    word: McgWord
    points: tuple


class Marker(NamedTuple):
    kind: str  # "delta1", "vprime"
    word: McgWord
    point: tuple


def segment_interval(surface):
    """A-range of the base edge on the line ``B = 0``."""
    return (0.0, 2 * LOG2) if surface is S11 else (-LOG2, LOG2)


def _ray_start(surface):
    return 0.0 if surface is S11 else -LOG2


def _vprime_log(surface):
    return (LOG2, 0.0) if surface is S11 else (0.0, 0.0)


def _linspace(a, b, n):
    if n < 2:
        raise ValueError("need at least two samples")
    return [a + (b - a) * i / (n - 1) for i in range(n)]


def _image(surface, g, A, B):
    q = to_log(apply_word(from_log(LogPoint(surface, A, B)), g))
    return (q.A, q.B)


def _key(pt):
    return (round(pt[0], ROUND) + 0.0, round(pt[1], ROUND) + 0.0)


def _words(depth):
    return [McgWord(w) for w in canonical_words(depth)]


def gamma_polylines(surface, depth, samples=16):
    """Images ``g(s)`` of the base edge for canonical words of length ``<= depth``.

    Different words with the same image edge are reported once (first word
    in breadth-first order wins).
    """
    surface = SurfaceKind.parse(surface)
    a0, a1 = segment_interval(surface)
    grid = _linspace(a0, a1, samples)
    out, seen = [], set()
    for g in _words(depth):
        pts = tuple(_image(surface, g, A, 0.0) for A in grid)
        key = frozenset((_key(pts[0]), _key(pts[-1])))
        if key in seen:
            continue
        seen.add(key)
        out.append(Polyline("edge", g, pts))
    return out


_THIRDS = (McgWord(()), McgWord(("S", "T")), McgWord(("S", "T", "S", "T")))


def delta_polylines(surface, depth, samples=16, extent=4.0):
    """Images of the three half-lines through ``v0`` plus ``v'`` and ``v0`` markers.

    Each half-line is cut at log distance ``extent`` before mapping.
    """
    surface = SurfaceKind.parse(surface)
    s = _ray_start(surface)
    grid = _linspace(s, s - extent, samples)
    lines, seen = [], set()
    marks, mseen = [], set()
    for g in _words(depth):
        for r in _THIRDS:
            h = g * r
            pts = tuple(_image(surface, h, A, 0.0) for A in grid)
            key = (_key(pts[0]), _key(pts[1]))
            if key not in seen:
                seen.add(key)
                lines.append(Polyline("ray", h, pts))
        for kind, base in (("delta1", (s, 0.0)), ("vprime", _vprime_log(surface))):
            pt = _image(surface, g, *base)
            if (kind, _key(pt)) not in mseen:
                mseen.add((kind, _key(pt)))
                marks.append(Marker(kind, g, pt))
    return lines, marks


def tree_graph(polylines):
    """Vertex adjacency of the edge polylines, vertices identified after rounding."""
    adj = {}
    for pl in polylines:
        a, b = _key(pl.points[0]), _key(pl.points[-1])
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return adj


def interior_vertices(surface, depth):
    """Keys of ``h(v0)`` for ``|h| <= depth - 2``.

    Its three edges are ``h(s)``, ``hST(s)`` and ``h(ST)^2(s)``, all of word
    length at most ``depth``, so such a vertex has full degree in
    :func:`gamma_polylines` output of that depth.
    """
    surface = SurfaceKind.parse(surface)
    v0 = (segment_interval(surface)[0], 0.0)
    if depth < 2:
        return set()
    return {_key(_image(surface, g, *v0)) for g in _words(depth - 2)}


def is_tree(adj):
    """Connected and ``|E| = |V| - 1``."""
    if not adj:
        return True
    n_edges = sum(len(v) for v in adj.values()) // 2
    start = next(iter(adj))
    seen, stack = {start}, [start]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(adj) and n_edges == len(adj) - 1


# -- serialization ---------------------------------------------------------

_STYLE = {
    "edge": "fill:none;stroke:#1f3a93;stroke-width:0.012",
    "ray": "fill:none;stroke:#b03a2e;stroke-width:0.012",
    "delta1": "fill:#000000;stroke:none",
    "vprime": "fill:#ffffff;stroke:#000000;stroke-width:0.01",
}


def _f(x):
    return f"{x:.6f}"


def render_svg(polylines, markers=(), bounds=(-3.0, 3.0, -3.0, 3.0), title=""):
    xmin, xmax, ymin, ymax = bounds
    w, h = xmax - xmin, ymax - ymin
    if w <= 0 or h <= 0:
        raise ValueError("empty bounds")
    r = 0.01 * max(w, h)
    out = io.StringIO()
    out.write('<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n')
    out.write('<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
              '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">\n')
    out.write(f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="600" '
              f'height="{_f(600 * h / w)}" viewBox="{_f(xmin)} {_f(-ymax)} {_f(w)} {_f(h)}">\n')
    if title:
        out.write(f"<title>{title}</title>\n")
    out.write(f'<defs><clipPath id="frame"><rect x="{_f(xmin)}" y="{_f(-ymax)}" '
              f'width="{_f(w)}" height="{_f(h)}"/></clipPath></defs>\n')
    out.write(f'<rect x="{_f(xmin)}" y="{_f(-ymax)}" width="{_f(w)}" height="{_f(h)}" '
              'style="fill:#ffffff;stroke:none"/>\n')
    out.write('<g clip-path="url(#frame)">\n')
    # y axis flipped so that B grows upwards
    for pl in polylines:
        pts = " ".join(f"{_f(a)},{_f(-b)}" for a, b in pl.points)
        out.write(f'<polyline points="{pts}" style="{_STYLE[pl.kind]}"/>\n')
    for m in markers:
        a, b = m.point
        out.write(f'<circle cx="{_f(a)}" cy="{_f(-b)}" r="{_f(r)}" style="{_STYLE[m.kind]}"/>\n')
    out.write("</g>\n</svg>\n")
    return out.getvalue()


def render_csv(polylines, markers=()):
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["id", "kind", "word", "index", "A", "B"])
    for i, pl in enumerate(polylines):
        for j, (a, b) in enumerate(pl.points):
            wr.writerow([i, pl.kind, str(pl.word), j, f"{a:.17g}", f"{b:.17g}"])
    for i, m in enumerate(markers, start=len(polylines)):
        wr.writerow([i, m.kind, str(m.word), 0, f"{m.point[0]:.17g}", f"{m.point[1]:.17g}"])
    return buf.getvalue()


def figure(surface, which, depth, samples=16, bounds=None):
    """``(polylines, markers, bounds)`` for ``which`` in ``{"gamma", "delta"}``."""
    surface = SurfaceKind.parse(surface)
    if bounds is None:
        bounds = (-4.0, 4.0, -4.0, 4.0)
    if which == "gamma":
        return gamma_polylines(surface, depth, samples), [], bounds
    if which == "delta":
        extent = 2 * max(abs(v) for v in bounds)
        lines, marks = delta_polylines(surface, depth, samples, extent)
        return lines, marks, bounds
    raise ValueError(f"unknown figure {which!r}")
