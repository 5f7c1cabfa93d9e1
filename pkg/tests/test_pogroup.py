"""Base group zoo: windows, orders, and bounded law checks."""

import pytest
from hypothesis import given, settings, strategies as st

from kitealg.pogroup import (
    CapabilityError,
    Integers,
    Product,
    StrictCone2,
    TwistedLexGroup,
    UsageError,
    Window,
    check_com,
    check_directed,
    check_group_laws,
    cone_window,
    enumerate_interval,
    enumerate_window,
    integer_product,
    parse_group,
    window_sample,
)
from kitealg.verdict import Status

Z = Integers()
SC = StrictCone2()


def tl(n, lam, rho, base=None):
    return TwistedLexGroup(n, lam, rho, base or Integers())


# -- windows ------------------------------------------------------------------


def test_window_rejects_bad_bounds():
    with pytest.raises(UsageError):
        Window(-1)
    with pytest.raises(UsageError):
        Window(2, 0)
    assert Window(2, 5).uncapped() == Window(2)


def test_integer_window_contents():
    vals = [x.value for x in enumerate_window(Z, Window(2))]
    # sorted by (|x|, x)
    assert vals == [0, -1, 1, -2, 2]
    assert [x.value for x in window_sample(Z, Window(2, 3))] == [0, -1, 1]
    assert [x.value for x in cone_window(Z, Window(2))] == [0, 1, 2]


def test_product_window_is_full_grid():
    g = integer_product(2)
    vals = {x.value for x in enumerate_window(g, Window(1))}
    assert vals == {(a, b) for a in (-1, 0, 1) for b in (-1, 0, 1)}
    assert len(cone_window(g, Window(2))) == 9


def test_strict_cone_window_and_order():
    cone = {x.value for x in cone_window(SC, Window(2))}
    assert cone == {(0, 0), (1, 1), (1, 2), (2, 1), (2, 2)}
    a = SC.make((1, 2))
    b = SC.make((2, 1))
    assert not SC.leq(a, b)
    assert not SC.leq(b, a)
    assert SC.leq(SC.make((1, 1)), SC.make((2, 2)))


def test_strict_cone_interval_skips_incomparable_lattice_points():
    lo = SC.make((0, 0))
    hi = SC.make((2, 2))
    elems, exhaustive = enumerate_interval(SC, lo, hi, Window(2))
    assert {x.value for x in elems} == {(0, 0), (1, 1), (2, 2)}
    assert exhaustive


def test_strict_cone_has_no_meet():
    with pytest.raises(CapabilityError):
        SC.meet(SC.make((1, 1)), SC.make((2, 2)))


# -- twisted lex multiplication -----------------------------------------------


def test_twisted_lex_multiplication_oracle():
    g = tl(2, (0, 1), (1, 0))
    a = g.make((1, (0, 0)))
    b = g.make((0, (1, 0)))
    # coordinate i of a*b is a[lam^-0(i)] + b[rho^-1(i)], rho = swap
    assert g.mul(a, b).value == (1, (0, 1))
    assert g.mul(b, a).value == (1, (1, 0))


def test_twisted_lex_inverse_oracle():
    g = tl(2, (0, 1), (1, 0))
    a = g.make((1, (1, 0)))
    ai = g.inv(a)
    assert ai.value == (-1, (0, -1))
    assert g.mul(a, ai) == g.e
    assert g.mul(ai, a) == g.e


def test_twisted_lex_requires_commuting_bijections():
    with pytest.raises(UsageError):
        tl(3, (1, 0, 2), (0, 2, 1))


def test_twisted_lex_order_is_lex():
    g = tl(2, (0, 1), (1, 0))
    assert g.leq(g.make((0, (5, -7))), g.make((1, (0, 0))))
    assert g.leq(g.make((1, (0, 0))), g.make((1, (0, 1))))
    assert not g.leq(g.make((1, (1, 0))), g.make((1, (0, 1))))


def test_twisted_lex_noncommutative_witness():
    g = tl(2, (0, 1), (1, 0))
    u = g.make((1, (0, 0)))
    v = check_com(g, u, u, Window(2, None))
    assert v.status is Status.FAILS
    w = v.witness_dict()
    x = g.deserialize(w["x"])
    y = g.deserialize(w["y"])
    assert g.mul(x, y) != g.mul(y, x)


def test_twisted_lex_same_direction_is_abelian():
    g = tl(2, (1, 0), (1, 0))
    assert g.is_abelian
    u = g.make((1, (0, 0)))
    # the interval [0, u] spans two lex levels, so the scan is honest about
    # truncation: no witness, but no exhaustiveness claim either
    v = check_com(g, u, u, Window(2))
    assert not v.failed
    assert v.skipped > 0


# -- bounded checks -------------------------------------------------------------


@pytest.mark.parametrize("group", [
    Z,
    integer_product(2),
    SC,
    tl(2, (0, 1), (1, 0)),
    tl(2, (1, 0), (1, 0)),
    Product(()),
])
def test_group_laws_hold(group):
    v = check_group_laws(group, Window(2), cap=10)
    assert v.ok, v.describe()


def test_directedness_search():
    v = check_directed(SC, SC.make((1, 2)), SC.make((2, 1)), Window(3))
    assert v.status is Status.HOLDS
    # least common upper bound in this cone: both differences must land in
    # the strict quadrant, so (3,3) is the first hit
    assert v.witness_dict()["bound"] == [3, 3]


def test_integer_interval_is_exact():
    elems, exhaustive = enumerate_interval(Z, Z.make(-1), Z.make(2), Window(1))
    assert [x.value for x in elems] == [0, -1, 1, 2]
    assert exhaustive


def test_twisted_lex_interval_across_levels_not_exhaustive():
    g = tl(1, (0,), (0,))
    lo = g.make((0, (0,)))
    hi = g.make((1, (0,)))
    _, exhaustive = enumerate_interval(g, lo, hi, Window(2))
    assert not exhaustive


# -- descriptors ----------------------------------------------------------------


def test_parse_group_shortcuts():
    assert parse_group("z") == Integers()
    assert parse_group("Z2") == integer_product(2)
    assert parse_group("trivial").is_trivial
    assert parse_group("strictcone2") == StrictCone2()
    with pytest.raises(UsageError):
        parse_group("nope")


def test_parse_group_descriptor_roundtrip():
    g = tl(2, (0, 1), (1, 0))
    assert parse_group(g.describe()) == g
    with pytest.raises(UsageError):
        parse_group({"nokind": True})


# -- properties -----------------------------------------------------------------

pairs = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
tl_vals = st.tuples(st.integers(-2, 2), st.tuples(st.integers(-2, 2),
                                                  st.integers(-2, 2)))


@settings(max_examples=60, deadline=None)
@given(x=tl_vals, y=tl_vals, z=tl_vals)
def test_twisted_lex_associative(x, y, z):
    g = tl(2, (0, 1), (1, 0))
    a, b, c = g.make(x), g.make(y), g.make(z)
    assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))


@settings(max_examples=60, deadline=None)
@given(x=tl_vals, y=tl_vals, t=tl_vals)
def test_twisted_lex_order_translation_invariant(x, y, t):
    g = tl(2, (0, 1), (1, 0))
    a, b, c = g.make(x), g.make(y), g.make(t)
    if g.leq(a, b):
        assert g.leq(g.mul(c, a), g.mul(c, b))
        assert g.leq(g.mul(a, c), g.mul(b, c))


@settings(max_examples=60, deadline=None)
@given(x=pairs, y=pairs)
def test_strict_cone_order_is_partial_order(x, y):
    a, b = SC.make(x), SC.make(y)
    assert SC.leq(a, a)
    if SC.leq(a, b) and SC.leq(b, a):
        assert a == b
