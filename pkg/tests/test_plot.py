import csv
import io
import math
import xml.etree.ElementTree as ET

import pytest

from systoles import plot
from systoles.core import LogPoint, from_log, to_log
from systoles.mcg import apply_word

LOG2 = math.log(2)


def _approx_pt(a, b, tol=1e-12):
    return abs(a[0] - b[0]) < tol and abs(a[1] - b[1]) < tol


def test_gamma_depth0_torus():
    (pl,) = plot.gamma_polylines("s11", 0, 5)
    assert _approx_pt(pl.points[0], (0, 0)) and _approx_pt(pl.points[-1], (2 * LOG2, 0))
    assert all(b == 0 for _, b in pl.points)


def test_gamma_depth0_sphere():
    (pl,) = plot.gamma_polylines("s04", 0, 5)
    assert _approx_pt(pl.points[0], (-LOG2, 0)) and _approx_pt(pl.points[-1], (LOG2, 0))


def test_delta_depth0_torus():
    lines, marks = plot.delta_polylines("s11", 0, 5, extent=3.0)
    assert len(lines) == 3
    assert all(_approx_pt(pl.points[0], (0, 0)) for pl in lines)
    # the three directions are 120 degrees apart
    angles = sorted(math.atan2(pl.points[-1][1], pl.points[-1][0]) for pl in lines)
    gaps = [b - a for a, b in zip(angles, angles[1:])]
    assert gaps == pytest.approx([2 * math.pi / 3] * 2, abs=1e-9)
    vp = [m for m in marks if m.kind == "vprime"]
    assert len(vp) == 1 and _approx_pt(vp[0].point, (LOG2, 0))


@pytest.mark.parametrize("surface", ["s11", "s04"])
@pytest.mark.parametrize("depth", [2, 4, 6])
def test_gamma_is_a_trivalent_tree(surface, depth):
    adj = plot.tree_graph(plot.gamma_polylines(surface, depth, 4))
    assert plot.is_tree(adj)
    assert max(len(v) for v in adj.values()) <= 3
    for v in plot.interior_vertices(surface, depth):
        assert len(adj[v]) == 3


def test_torus_gamma_rotation_symmetry():
    c, s = math.cos(-2 * math.pi / 3), math.sin(-2 * math.pi / 3)
    verts = [pt for pl in plot.gamma_polylines("s11", 5, 3) for pt in (pl.points[0], pl.points[-1])]
    for a, b in plot.interior_vertices("s11", 5):
        r = (c * a - s * b, s * a + c * b)
        assert min(math.hypot(r[0] - u, r[1] - v) for u, v in verts) < 1e-6


def test_sphere_delta_negation_symmetry():
    lines, marks = plot.delta_polylines("s04", 4, 4, extent=2.0)
    pts = {plot._key(m.point) for m in marks}
    inner = {plot._key(m.point) for m in plot.delta_polylines("s04", 2, 4, extent=2.0)[1]}
    for a, b in inner:
        assert plot._key((-a, -b)) in pts


def test_svg_is_well_formed():
    lines, marks, bounds = plot.figure("s11", "delta", 2, 4)
    svg = plot.render_svg(lines, marks, bounds, title="t")
    root = ET.fromstring(svg.split("\n", 2)[2])
    tags = {el.tag.split("}")[1] for el in root.iter()}
    assert {"polyline", "circle", "clipPath"} <= tags
    assert "script" not in tags


def test_csv_sidecar_lists_every_vertex():
    lines = plot.gamma_polylines("s04", 2, 4)
    rows = list(csv.DictReader(io.StringIO(plot.render_csv(lines))))
    assert len(rows) == 4 * len(lines)
    assert float(rows[0]["A"]) == pytest.approx(lines[0].points[0][0], abs=0)


def test_figure_rejects_unknown():
    with pytest.raises(ValueError):
        plot.figure("s11", "heatmap", 1)


def test_st_is_rotation_on_log_chart():
    c, s = math.cos(-2 * math.pi / 3), math.sin(-2 * math.pi / 3)
    for pl in plot.gamma_polylines("s11", 4, 3):
        for A, B in pl.points:
            q = to_log(apply_word(from_log(LogPoint(plot.S11, A, B)), "S T"))
            assert q.A == pytest.approx(c * A - s * B, abs=1e-9)
            assert q.B == pytest.approx(s * A + c * B, abs=1e-9)
