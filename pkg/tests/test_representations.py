"""Interval algebras, map specifications, and isomorphism verification."""

import json

import pytest

from kitealg import perms
from kitealg.kite import Kite, KiteShape
from kitealg.pogroup import (
    Integers,
    TwistedLexGroup,
    UsageError,
    Window,
    integer_product,
)
from kitealg.representations import (
    IntervalPEA,
    MapSpec,
    check_strong_unit,
    interval_pea,
    mapspec_family,
    perfect_representation,
    scrimger_fixture,
    stored_mapspec,
    twisted_lex_group,
    verify_iso,
)
from kitealg.verdict import Status

Z = Integers()


def mk(n, lam, rho, base=None):
    return Kite(KiteShape(n, tuple(lam), tuple(rho), base or Z))


# -- interval algebras -------------------------------------------------------------


def test_integer_chain_carrier():
    P = IntervalPEA(Z, Z.make(2))
    els = P.elements(Window(3))
    assert [x.value for x in els] == [0, 1, 2]
    assert P.add(Z.make(1), Z.make(1)) == Z.make(2)
    assert P.add(Z.make(2), Z.make(1)) is None
    assert P.neg_left(Z.make(1)) == Z.make(1)


def test_unit_square_is_boolean():
    g = integer_product(2)
    P = IntervalPEA(g, g.make((1, 1)))
    els = P.elements(Window(2))
    assert {x.value for x in els} == {(0, 0), (0, 1), (1, 0), (1, 1)}
    a = g.make((1, 0))
    assert P.neg_left(a) == g.make((0, 1))
    assert P.add(a, a) is None


def test_unit_must_be_strictly_positive():
    with pytest.raises(UsageError):
        IntervalPEA(Z, Z.make(0))
    with pytest.raises(UsageError):
        IntervalPEA(Z, Z.make(-1))


def test_lex_interval_algebra_shape():
    g = TwistedLexGroup(1, (0,), (0,), Z)
    P = IntervalPEA(g, g.make((1, (0,))))
    els = P.elements(Window(2))
    levels = {x.value[0] for x in els}
    assert levels == {0, 1}
    lo = g.make((0, (2,)))
    assert P.neg_left(lo) == g.make((1, (-2,)))
    assert P.add(g.make((1, (-1,))), g.make((1, (0,)))) is None


def test_interval_pea_wrapper_is_enumerable():
    P = interval_pea(Z, Z.make(2))
    assert P.zero == Z.make(0)
    assert P.one == Z.make(2)
    assert P.source is not None


# -- twisted lex witness groups ------------------------------------------------------


def test_twisted_lex_group_builder_validates():
    g = twisted_lex_group(2, (0, 1), (1, 0), Z)
    assert g.n == 2
    with pytest.raises(UsageError):
        twisted_lex_group(3, (1, 0, 2), (0, 2, 1), Z)


def test_strong_unit_check():
    g = twisted_lex_group(2, (0, 1), (1, 0), Z)
    v = check_strong_unit(g, g.strong_unit(), Window(1))
    assert not v.failed
    # elements below any power of the unit exist at every level, so the
    # bounded check can only report positive evidence
    assert v.checked > 0


# -- map specifications ----------------------------------------------------------------


def test_mapspec_json_roundtrip():
    spec = MapSpec(target="interval", tau_lower=(1, 0), tau_upper=(0, 1),
                   invert=False, label="x")
    blob = json.dumps(spec.as_json())
    back = MapSpec.from_json(json.loads(blob), target="interval", label="x")
    assert back.tau_lower == spec.tau_lower
    assert back.tau_upper == spec.tau_upper
    assert back.invert == spec.invert


def test_mapspec_validation():
    with pytest.raises(UsageError):
        MapSpec(target="nowhere", tau_lower=(0,), tau_upper=(0,))
    with pytest.raises(UsageError):
        MapSpec(target="interval", tau_lower=(0, 0), tau_upper=(0, 1))


def test_mapspec_family_contains_standard_maps():
    shape = KiteShape(3, (1, 2, 0), (0, 1, 2), Z)
    fam = mapspec_family(shape)
    pairs = {(m.tau_lower, m.tau_upper) for m in fam}
    ident = tuple(perms.identity(3))
    assert (ident, ident) in pairs
    assert any(m.invert for m in fam)
    assert len(fam) == len({(m.tau_lower, m.tau_upper, m.invert) for m in fam})


def test_stored_mapspec_registry():
    spec = stored_mapspec("scrimger:2")
    assert spec is not None
    assert spec.as_json() == {"tauL": [1, 0], "tauU": [0, 1], "invert": False}
    assert stored_mapspec("missing:99") is None


# -- isomorphism verification -----------------------------------------------------------


def test_trivial_kite_is_the_two_chain():
    k = mk(0, (), ())
    target = IntervalPEA(Z, Z.make(1))
    spec = MapSpec(target="interval", tau_lower=(), tau_upper=())
    v = verify_iso(k.pea(), target.pea(), spec, Window(2))
    assert v.ok, v.describe()
    assert v.skipped == 0


def test_one_coordinate_kite_matches_lex_interval():
    k = mk(1, (0,), (0,))
    g = twisted_lex_group(1, (0,), (0,), Z)
    target = IntervalPEA(g, g.strong_unit())
    spec = MapSpec(target="interval", tau_lower=(0,), tau_upper=(0,))
    v = verify_iso(k.pea(), target.pea(), spec, Window(2))
    assert v.ok, v.describe()
    assert v.skipped == 0


def test_same_orientation_identity_map_verifies():
    shape = KiteShape(2, (0, 1), (1, 0), Z)
    k = Kite(shape)
    g = twisted_lex_group(2, (0, 1), (1, 0), Z)
    target = IntervalPEA(g, g.strong_unit())
    spec = MapSpec(target="interval", tau_lower=(0, 1), tau_upper=(0, 1))
    v = verify_iso(k.pea(), target.pea(), spec, Window(1))
    assert v.ok, v.describe()


@pytest.mark.parametrize("n", [2, 3])
def test_cyclic_fixture_replays(n):
    shape, group, spec = scrimger_fixture(n)
    P = Kite(shape).pea()
    Q = IntervalPEA(group, group.strong_unit()).pea()
    v = verify_iso(P, Q, spec, Window(1))
    assert v.ok, v.describe()
    assert v.skipped == 0


def test_cyclic_fixture_wrong_orientation_fails():
    # same carrier sizes, but reading the map through the unreflected
    # indexing breaks the mixed addition equations
    shape, group, _ = scrimger_fixture(2)
    P = Kite(shape).pea()
    Q = IntervalPEA(group, group.strong_unit()).pea()
    bad = MapSpec(target="interval", tau_lower=(0, 1), tau_upper=(0, 1))
    v = verify_iso(P, Q, bad, Window(1))
    assert v.status is Status.FAILS


def test_shifted_image_fails():
    k = mk(0, (), ())
    target = IntervalPEA(Z, Z.make(1))

    def shifted(x):
        return Z.make(0) if x.tag == "L" else Z.make(0)

    v = verify_iso(k.pea(), target.pea(), shifted, Window(1))
    assert v.status is Status.FAILS


def test_relabel_map_and_inverse_verify():
    a = KiteShape(3, (1, 2, 0), (0, 1, 2), Z)
    from kitealg.ideals import canonical_form
    b, relabel = canonical_form(a)
    P, Q = Kite(a).pea(), Kite(b).pea()
    assert verify_iso(P, Q, relabel, Window(1)).ok
    assert verify_iso(Q, P, relabel.inverse(), Window(1)).ok


# -- perfect representations ---------------------------------------------------------------


def test_perfect_representation_same_direction():
    k = mk(2, (1, 0), (1, 0))
    target, spec, v = perfect_representation(k, Window(1))
    assert v.ok, v.describe()
    assert target.group.lam == (1, 0)
    assert spec.as_json()["invert"] is False


def test_perfect_representation_requires_symmetry():
    with pytest.raises(UsageError):
        perfect_representation(mk(2, (0, 1), (1, 0)), Window(1))
