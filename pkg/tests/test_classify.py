import math
from fractions import Fraction as F

import pytest
from hypothesis import given

from systoles import make_point
from systoles.classify import (
    GammaPosition,
    classify,
    delta_membership,
    gamma_position,
    in_sigma,
    special_points,
)
from systoles.core import to_log
from systoles.errors import ToleranceAmbiguity
from systoles.mcg import apply_word
from systoles.rep import base_traces

from conftest import exact_points, mcg_words

SQ2 = math.sqrt(2)


def test_v0_torus():
    c = classify(make_point("s11", 1, 1))
    assert (c.systole_count, c.systole_value) == (3, 3)
    assert (c.two_systole_count, c.two_systole_value) == (3, 6)
    assert c.gamma is GammaPosition.Vertex and c.in_delta0 and c.in_delta1
    assert c.backend == "exact"


def test_vprime_torus():
    r = 1 / SQ2
    c = classify(make_point("s11", r, r))
    assert c.systole_count == 2 and c.systole_value == pytest.approx(2 * SQ2)
    assert c.two_systole_count == 2 and c.two_systole_value == pytest.approx(4)
    assert c.gamma is GammaPosition.EdgeInterior
    assert c.in_delta0 and not c.in_delta1


def test_generic_torus_point():
    c = classify(make_point("s11", 2, 3))
    assert (c.systole_count, c.systole_value) == (1, F(7, 3))
    assert (c.two_systole_count, c.two_systole_value) == (1, F(35, 9))
    assert c.gamma is GammaPosition.OffTree and not c.in_delta0


def test_gamma_position_examples():
    assert gamma_position(make_point("s11", 1, 1)) is GammaPosition.Vertex
    assert gamma_position(make_point("s11", F(3, 4), F(3, 4))) is GammaPosition.EdgeInterior
    assert gamma_position(make_point("s11", 2, 3)) is GammaPosition.OffTree


def test_sphere_3_2_is_translate_of_vprime():
    # (3, 2) = T(1, 1) and (1, 1) is the S-fixed point of the sphere
    p = make_point("s04", 3, 2)
    assert apply_word(special_points("s04")["vprime"], "T") == p
    assert gamma_position(p) is GammaPosition.EdgeInterior
    assert delta_membership(p) == (True, False)


def test_delta_membership_examples():
    assert delta_membership(make_point("s11", 1, 1)) == (True, True)
    assert delta_membership(make_point("s11", 2, 2)) == (True, False)
    assert delta_membership(make_point("s11", 2, 3)) == (False, False)
    c = classify(make_point("s11", 2, 2))
    assert c.two_systole_value == F(9, 2) and c.systole_value == F(9, 4)


def test_special_points():
    sp = special_points("s11")
    assert (sp["v0"].alpha, sp["v0"].beta) == (1, 1)
    assert sp["vprime"].alpha == pytest.approx(1 / SQ2, rel=1e-15)
    sp = special_points("s04")
    assert (sp["v1"].alpha, sp["v1"].beta) == (2, 1)
    assert (sp["vprime"].alpha, sp["vprime"].beta) == (1, 1)
    x, y, z, w = base_traces(sp["vprime"])
    assert x == y and z == w


def test_in_sigma():
    assert in_sigma(make_point("s11", F(3, 4), F(3, 4)))
    assert in_sigma(make_point("s11", 1, 1))
    assert not in_sigma(make_point("s11", 2, 2))
    assert in_sigma(make_point("s04", F(3, 2), 1))
    assert not in_sigma(make_point("s04", F(1, 3), 1))


def test_tolerance_ambiguity():
    p = make_point("s11", 1.0, 1.0 + 5e-9)
    with pytest.raises(ToleranceAmbiguity):
        classify(p)
    with pytest.raises(ToleranceAmbiguity):
        gamma_position(p)
    # exactly, alpha = 1 forces y0 = z0: an edge point next to v0
    q = make_point("s11", 1, 1 + F(5, 10**9))
    c = classify(q)
    assert c.systole_count == 2 and c.gamma is GammaPosition.EdgeInterior


def test_float_ties_within_eps_are_ties():
    c = classify(make_point("s11", 1.0, 1.0 + 1e-13))
    assert c.systole_count == 3


@given(exact_points(), mcg_words)
def test_classification_is_mcg_invariant(p, g):
    a, b = classify(p), classify(apply_word(p, g))
    assert (a.systole_count, a.two_systole_count) == (b.systole_count, b.two_systole_count)
    assert (a.systole_value, a.two_systole_value) == (b.systole_value, b.two_systole_value)


@given(exact_points())
def test_two_routes_agree(p):
    c = classify(p)
    assert gamma_position(p) is c.gamma
    assert delta_membership(p) == (c.in_delta0, c.in_delta1)
    assert c.two_systole_value > c.systole_value


def _walk(surface, ts):
    out = []
    for t in ts:
        p = make_point("s11", t, t) if surface == "s11" else make_point("s04", t, 1)
        out.append(gamma_position(p))
    return out


@pytest.mark.parametrize("surface,ends", [("s11", (1, F(1, 2))), ("s04", (F(1, 2), 2))])
def test_endpoint_transitions(surface, ends):
    h = F(1, 10**10)
    V, E, O = GammaPosition.Vertex, GammaPosition.EdgeInterior, GammaPosition.OffTree
    for e in ends:
        lo, hi = e - h, e + h
        pos = _walk(surface, (lo, e, hi))
        assert pos[1] is V
        assert sorted(x.value for x in (pos[0], pos[2])) == sorted([E.value, O.value])
        # the log image of the bracket is within 1e-9 of the quoted endpoint
        pl = make_point(surface, lo, lo if surface == "s11" else 1)
        ph = make_point(surface, hi, hi if surface == "s11" else 1)
        assert abs(to_log(pl).A - to_log(ph).A) < 1e-9
