"""Ideal closures, normality, least ideals, canonical shapes, orbit data."""

import itertools

import pytest

from kitealg import perms
from kitealg.ideals import (
    canonical_form,
    ideal_closure,
    is_normal,
    least_normal_ideal,
    least_o_ideal,
    normal_ideal_generated,
    orbits,
    phi_o_ideal,
)
from kitealg.kite import Kite, KiteShape
from kitealg.pogroup import (
    Integers,
    StrictCone2,
    TwistedLexGroup,
    UsageError,
    Window,
    integer_product,
)
from kitealg.representations import IntervalPEA, verify_iso
from kitealg.verdict import Status

Z = Integers()


def mk(n, lam, rho, base=None):
    return Kite(KiteShape(n, tuple(lam), tuple(rho), base or Z))


def kel(kite, obj):
    vals = [kite.base.deserialize(c).value for c in obj["coords"]]
    return kite.lower(*vals) if obj["tag"] == "L" else kite.upper(*vals)


# -- closure ---------------------------------------------------------------------


def test_closure_of_zero_is_trivial_and_exhaustive():
    k = mk(2, (0, 1), (0, 1))
    ideal = ideal_closure(k, [k.zero], Window(2))
    assert ideal.elements == (k.zero,)
    assert ideal.closed_flags["exhaustive"]


def test_closure_collects_downsets_and_sums():
    k = mk(2, (0, 1), (0, 1))
    ideal = ideal_closure(k, [k.lower(1, 0)], Window(3))
    assert set(ideal.elements) == {k.lower(i, 0) for i in range(4)}
    # the last sum pokes past the window, so closure is only window-complete
    assert not ideal.closed_flags["exhaustive"]
    assert k.lower(2, 0) in ideal
    assert k.lower(0, 1) not in ideal


def test_closure_rejects_foreign_generators():
    k = mk(1, (0,), (0,))
    with pytest.raises(UsageError):
        ideal_closure(k, [k.lower(9)], Window(2))


# -- normality -------------------------------------------------------------------


def test_plain_closure_is_not_normal_under_twist():
    k = mk(2, (0, 1), (1, 0))
    ideal = ideal_closure(k, [k.lower(1, 0)], Window(2))
    v = is_normal(k, ideal, Window(2))
    assert v.status is Status.FAILS
    w = v.witness_dict()
    missing = kel(k, w["missing"])
    assert missing not in ideal
    assert missing.tag == "L"


def test_generated_ideal_picks_up_twisted_coordinate():
    k = mk(2, (0, 1), (1, 0))
    ideal = normal_ideal_generated(k, k.lower(1, 0), Window(2))
    assert k.lower(0, 1) in ideal
    assert is_normal(k, ideal, Window(2)).ok


def test_generated_ideal_stays_on_axis_without_twist():
    k = mk(2, (0, 1), (0, 1))
    ideal = normal_ideal_generated(k, k.lower(1, 0), Window(2))
    assert k.lower(0, 1) not in ideal
    assert is_normal(k, ideal, Window(2)).ok


def test_whole_lower_set_is_normal():
    k = mk(2, (0, 1), (1, 0))
    lowers = [x for x in k.elements(Window(1)) if x.tag == "L"]
    ideal = ideal_closure(k, lowers, Window(1))
    assert is_normal(k, ideal, Window(1)).ok


# -- orbit data ---------------------------------------------------------------------


def test_orbit_report_connected_cycle():
    rep = orbits(KiteShape(4, (0, 1, 2, 3), (1, 2, 3, 0), Z))
    assert rep.as_json() == {
        "sigma": [1, 2, 3, 0], "cycles": [[0, 1, 2, 3]], "connected": True}


def test_orbit_report_two_transpositions():
    rep = orbits(KiteShape(4, (0, 1, 2, 3), (1, 0, 3, 2), Z))
    assert not rep.connected
    assert rep.cycles == ((0, 1), (2, 3))


# -- least o-ideals -------------------------------------------------------------------


def test_least_o_ideal_table():
    w = Window(2)
    v, desc = least_o_ideal(Z, w)
    assert v.ok and desc["least"] == "whole-group"
    v, desc = least_o_ideal(StrictCone2(), w)
    assert v.ok and desc["least"] == "whole-group"
    v, desc = least_o_ideal(integer_product(2), w)
    assert v.failed and desc["axes"] == [0, 1]
    v, desc = least_o_ideal(integer_product(1), w)
    assert v.ok and desc["kind"] == "product-single-axis"
    v, _ = least_o_ideal(TwistedLexGroup(2, (0, 1), (1, 0), Z), w)
    assert v.ok
    v, desc = least_o_ideal(TwistedLexGroup(2, (0, 1), (0, 1), Z), w)
    assert v.failed and desc["components"] == [[0], [1]]


# -- least normal ideals ----------------------------------------------------------------


def test_least_normal_ideal_connected_cycle():
    k = mk(4, (0, 1, 2, 3), (1, 2, 3, 0))
    v, ideal = least_normal_ideal(k, Window(1))
    assert v.ok, v.describe()
    lowers = [x for x in k.elements(Window(1)) if x.tag == "L"]
    assert set(ideal.elements) == set(lowers)
    assert len(ideal.elements) == 16
    assert is_normal(k, ideal, Window(1)).ok


def test_least_normal_ideal_split_orbits():
    k = mk(4, (0, 1, 2, 3), (1, 0, 3, 2))
    v, witnesses = least_normal_ideal(k, Window(1))
    assert v.status is Status.FAILS
    assert len(witnesses) == 2
    a, b = witnesses
    overlap = set(a.elements) & set(b.elements)
    assert overlap == {k.zero}
    for ideal in witnesses:
        assert is_normal(k, ideal, Window(1)).ok
        assert len(ideal.elements) > 1


def test_least_normal_ideal_degenerate_and_gated():
    v, payload = least_normal_ideal(mk(0, (), ()), Window(1))
    assert v.failed and payload is None
    v, payload = least_normal_ideal(mk(1, (0,), (0,), StrictCone2()), Window(1))
    assert v.status is Status.UNKNOWN and payload is None


# -- canonical form -----------------------------------------------------------------------


def test_canonical_form_golden():
    shape = KiteShape(3, (1, 2, 0), (0, 1, 2), Z)
    new_shape, relabel = canonical_form(shape)
    assert new_shape.lam == (0, 1, 2)
    assert new_shape.rho == (2, 0, 1)
    assert relabel.as_json() == {"tauL": [0, 1, 2], "tauU": [1, 2, 0],
                                 "invert": False}


def test_canonical_form_roundtrips_through_iso():
    shape = KiteShape(3, (1, 2, 0), (0, 1, 2), Z)
    new_shape, relabel = canonical_form(shape)
    P = Kite(shape).pea()
    Q = Kite(new_shape).pea()
    v = verify_iso(P, Q, relabel, Window(1))
    assert v.ok, v.describe()
    assert v.skipped == 0


def test_canonical_form_identity_when_already_reduced():
    shape = KiteShape(2, (0, 1), (1, 0), Z)
    new_shape, relabel = canonical_form(shape)
    assert new_shape.lam == (0, 1)
    assert new_shape.rho == (1, 0)


def test_canonical_form_rejects_disconnected():
    with pytest.raises(UsageError):
        canonical_form(KiteShape(2, (1, 0), (1, 0), Z))


def test_canonical_forms_agree_iff_isomorphic_relabel():
    # same sigma-cycle structure up to relabeling: (0 1) twist at n=2
    a = KiteShape(2, (0, 1), (1, 0), Z)
    b = KiteShape(2, (1, 0), (0, 1), Z)
    ca, _ = canonical_form(a)
    cb, _ = canonical_form(b)
    assert ca.lam == cb.lam and ca.rho == cb.rho


# -- interval ideals ------------------------------------------------------------------------


def test_phi_of_lex_kernel():
    g = TwistedLexGroup(1, (0,), (0,), Z)
    P = IntervalPEA(g, g.make((1, (0,))))
    pea = P.pea()
    small = g.make((0, (1,)))
    ideal = ideal_closure(pea, [small], Window(2))
    sample, v = phi_o_ideal(P, ideal, Window(2))
    assert all(x.value[0] == 0 for x in sample)
    assert not v.failed
    assert v.skipped > 0
