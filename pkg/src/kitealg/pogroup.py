"""Partially ordered groups with bounded enumeration.

Groups are written multiplicatively in the API. Each backend stores whatever
value representation is convenient (plain ints for the integers backend) and
exposes the same operations: mul, inv, leq, norm, serialization, and finite
"window" enumeration bounded by a coordinate norm.

The window norm is the maximum absolute value of the integers appearing in the
element's canonical serialization. Window enumeration is deterministic, sorted
ascending by (norm, serialized value), contains the identity, and is closed
under inversion.

Order queries never guess: incomparability is op_leq false in both directions,
and bounded existential checks (directedness, commutation of intervals) return
a Verdict rather than a bool.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Iterable, Iterator

from .verdict import Status, Tally, Verdict, unknown


class UsageError(ValueError):
    """Invalid construction or misuse of the API (wrong group, bad shape)."""


class CapabilityError(UsageError):
    """Operation requires a capability the structure does not have."""


@dataclass(frozen=True)
class Window:
    """Enumeration bound.

    height bounds the coordinate norm; cap, when set, truncates carrier
    samples to the lowest-norm prefix of that many elements. Checks report
    how many elements they actually quantified over.
    """

    height: int
    cap: int | None = None

    def __post_init__(self) -> None:
        if self.height < 0:
            raise UsageError("window height must be >= 0")
        if self.cap is not None and self.cap < 1:
            raise UsageError("window cap must be >= 1")

    def uncapped(self) -> "Window":
        return Window(self.height)


@dataclass(frozen=True)
class Elem:
    """A group element: opaque value owned by a specific group."""

    group: "PoGroup"
    value: Any

    def serialized(self):
        return self.group.serialize_value(self.value)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"{self.group.kind}:{self.group.serialize_value(self.value)}"


class PoGroup:
    """Base class for the pluggable po-group backends."""

    kind = "?"

    # -- identity & structural equality ------------------------------------

    def _key(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PoGroup) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    # -- capability flags ---------------------------------------------------

    is_lattice = False
    is_abelian = False
    is_totally_ordered = False
    is_directed: bool | None = None
    is_trivial = False
    # strongest Riesz level the backend is known to satisfy, or None
    rdp_hint: str | None = None
    # a <= x <= b forces norm(x) <= max(norm(a), norm(b))
    order_convex_norm = True

    # -- core operations ----------------------------------------------------

    def identity_value(self):
        raise NotImplementedError

    @property
    def e(self) -> Elem:
        return Elem(self, self.identity_value())

    def make(self, value) -> Elem:
        return Elem(self, self.check_value(value))

    def check_value(self, value):
        raise NotImplementedError

    def own(self, a: Elem) -> None:
        if a.group != self:
            raise UsageError(f"element of {a.group.kind} used with {self.kind}")

    def mul_values(self, x, y):
        raise NotImplementedError

    def inv_value(self, x):
        raise NotImplementedError

    def leq_values(self, x, y) -> bool:
        raise NotImplementedError

    def mul(self, a: Elem, b: Elem) -> Elem:
        self.own(a)
        self.own(b)
        return Elem(self, self.mul_values(a.value, b.value))

    def inv(self, a: Elem) -> Elem:
        self.own(a)
        return Elem(self, self.inv_value(a.value))

    def leq(self, a: Elem, b: Elem) -> bool:
        self.own(a)
        self.own(b)
        return self.leq_values(a.value, b.value)

    def lt(self, a: Elem, b: Elem) -> bool:
        return a != b and self.leq(a, b)

    def join(self, a: Elem, b: Elem) -> Elem:
        raise CapabilityError(f"{self.kind} is not a lattice group")

    def meet(self, a: Elem, b: Elem) -> Elem:
        raise CapabilityError(f"{self.kind} is not a lattice group")

    # -- serialization / norms ----------------------------------------------

    def serialize_value(self, value):
        raise NotImplementedError

    def value_key(self, value) -> tuple:
        """Flat integer tuple for deterministic sorting."""
        return tuple(_flatten(self.serialize_value(value)))

    def norm_value(self, value) -> int:
        return max((abs(c) for c in _flatten(self.serialize_value(value))),
                   default=0)

    def norm(self, a: Elem) -> int:
        self.own(a)
        return self.norm_value(a.value)

    def sort_key(self, a: Elem) -> tuple:
        return (self.norm_value(a.value),) + self.value_key(a.value)

    def deserialize(self, obj) -> Elem:
        raise NotImplementedError

    def describe(self) -> dict:
        return {"kind": self.kind, "params": self._params()}

    def _params(self) -> dict:
        return {}

    # -- enumeration ----------------------------------------------------------

    def ball_values(self, height: int) -> Iterator:
        """All values with norm <= height, any order, no duplicates."""
        raise NotImplementedError

    def interval_exhaustive(self, a: Elem, b: Elem, w: Window) -> bool:
        """True when [a, b] is provably contained in ball(w.height)."""
        if self.order_convex_norm:
            return max(self.norm(a), self.norm(b)) <= w.height
        return False


def _flatten(obj) -> Iterator[int]:
    if isinstance(obj, int):
        yield obj
    else:
        for part in obj:
            yield from _flatten(part)


# ---------------------------------------------------------------------------
# backends


class Integers(PoGroup):
    """(Z, +) with the natural total order; norm is absolute value."""

    kind = "Integers"
    is_lattice = True
    is_abelian = True
    is_totally_ordered = True
    is_directed = True
    rdp_hint = "rdp2"

    def _key(self):
        return (self.kind,)

    def identity_value(self):
        return 0

    def check_value(self, value):
        if not isinstance(value, int) or isinstance(value, bool):
            raise UsageError(f"Integers value must be int, got {value!r}")
        return value

    def mul_values(self, x, y):
        return x + y

    def inv_value(self, x):
        return -x

    def leq_values(self, x, y):
        return x <= y

    def join(self, a, b):
        self.own(a)
        self.own(b)
        return Elem(self, max(a.value, b.value))

    def meet(self, a, b):
        self.own(a)
        self.own(b)
        return Elem(self, min(a.value, b.value))

    def serialize_value(self, value):
        return [value]

    def deserialize(self, obj):
        if isinstance(obj, list):
            (obj,) = obj
        return self.make(obj)

    def ball_values(self, height):
        return iter(range(-height, height + 1))


class Product(PoGroup):
    """Direct product with the coordinatewise order.

    The empty product is the trivial group. Norm is the max component norm.
    """

    kind = "Product"

    def __init__(self, components: Iterable[PoGroup]):
        self.components = tuple(components)

    def _key(self):
        return (self.kind, tuple(c._key() for c in self.components))

    @property
    def is_lattice(self):
        return all(c.is_lattice for c in self.components)

    @property
    def is_abelian(self):
        return all(c.is_abelian for c in self.components)

    @property
    def is_trivial(self):
        return all(c.is_trivial for c in self.components)

    @property
    def is_totally_ordered(self):
        nontrivial = [c for c in self.components if not c.is_trivial]
        return all(c.is_totally_ordered for c in nontrivial) and len(nontrivial) <= 1

    @property
    def is_directed(self):
        flags = [c.is_directed for c in self.components]
        if all(f is True for f in flags):
            return True
        if any(f is False for f in flags):
            return False
        return None

    @property
    def rdp_hint(self):
        hints = [c.rdp_hint for c in self.components]
        if all(h == "rdp2" for h in hints) and all(c.is_lattice for c in self.components):
            return "rdp2"
        return None

    def identity_value(self):
        return tuple(c.identity_value() for c in self.components)

    def check_value(self, value):
        value = tuple(value)
        if len(value) != len(self.components):
            raise UsageError("component count mismatch")
        return tuple(c.check_value(v) for c, v in zip(self.components, value))

    def mul_values(self, x, y):
        return tuple(c.mul_values(a, b) for c, a, b in zip(self.components, x, y))

    def inv_value(self, x):
        return tuple(c.inv_value(a) for c, a in zip(self.components, x))

    def leq_values(self, x, y):
        return all(c.leq_values(a, b) for c, a, b in zip(self.components, x, y))

    def join(self, a, b):
        self.own(a)
        self.own(b)
        if not self.is_lattice:
            raise CapabilityError(f"{self.kind} is not a lattice group")
        return Elem(self, tuple(
            c.join(Elem(c, x), Elem(c, y)).value
            for c, x, y in zip(self.components, a.value, b.value)))

    def meet(self, a, b):
        self.own(a)
        self.own(b)
        if not self.is_lattice:
            raise CapabilityError(f"{self.kind} is not a lattice group")
        return Elem(self, tuple(
            c.meet(Elem(c, x), Elem(c, y)).value
            for c, x, y in zip(self.components, a.value, b.value)))

    def serialize_value(self, value):
        out = []
        for c, v in zip(self.components, value):
            out.extend(_flatten(c.serialize_value(v)))
        return out

    def deserialize(self, obj):
        if len(obj) != len(self.components):
            raise UsageError("component count mismatch")
        return self.make(tuple(
            c.deserialize(v).value for c, v in zip(self.components, obj)))

    def ball_values(self, height):
        pools = [list(c.ball_values(height)) for c in self.components]
        return iter(itertools.product(*pools))

    def _params(self):
        return {"components": [c.describe() for c in self.components]}


def integer_product(k: int) -> Product:
    return Product([Integers() for _ in range(k)])


class StrictCone2(PoGroup):
    """Z^2 ordered by the cone {(0,0)} plus {(x,y): x >= 1 and y >= 1}.

    Directed but not a lattice; the standard negative fixture for
    interpolation and refinement failures.
    """

    kind = "StrictCone2"
    is_lattice = False
    is_abelian = True
    is_totally_ordered = False
    is_directed = True
    rdp_hint = None

    def _key(self):
        return (self.kind,)

    def identity_value(self):
        return (0, 0)

    def check_value(self, value):
        x, y = value
        if not isinstance(x, int) or not isinstance(y, int):
            raise UsageError("StrictCone2 values are integer pairs")
        return (x, y)

    @staticmethod
    def in_cone(v) -> bool:
        return v == (0, 0) or (v[0] >= 1 and v[1] >= 1)

    def mul_values(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def inv_value(self, x):
        return (-x[0], -x[1])

    def leq_values(self, x, y):
        return self.in_cone((y[0] - x[0], y[1] - x[1]))

    def serialize_value(self, value):
        return [value[0], value[1]]

    def deserialize(self, obj):
        return self.make((obj[0], obj[1]))

    def ball_values(self, height):
        rng = range(-height, height + 1)
        return iter((x, y) for x in rng for y in rng)


class TwistedLexGroup(PoGroup):
    """Z lex G^n with multiplication twisted by commuting bijections.

    (m1, x) * (m2, y) = (m1 + m2, < x[lam^-m2(i)] y[rho^-m1(i)] >), ordered
    lexicographically: strictly by the leading integer, coordinatewise at
    equal leading integer. Requires lam and rho to commute.
    """

    kind = "TwistedLex"

    def __init__(self, n: int, lam, rho, base: PoGroup):
        from . import perms

        self.n = n
        self.lam = tuple(perms.check_perm(lam, n))
        self.rho = tuple(perms.check_perm(rho, n))
        if perms.compose(self.lam, self.rho) != perms.compose(self.rho, self.lam):
            raise UsageError("TwistedLex requires commuting index bijections")
        self.base = base
        self._pow_cache: dict[tuple[str, int], list[int]] = {}

    def _key(self):
        return (self.kind, self.n, self.lam, self.rho, self.base._key())

    @property
    def is_lattice(self):
        return self.base.is_lattice

    @property
    def is_abelian(self):
        return self.base.is_abelian and self.lam == self.rho

    @property
    def is_totally_ordered(self):
        if self.n == 0:
            return True
        return self.n == 1 and self.base.is_totally_ordered

    is_directed = True

    @property
    def rdp_hint(self):
        return "rdp2" if self.base.is_lattice else None

    order_convex_norm = False

    def _power(self, which: str, k: int) -> list[int]:
        from . import perms

        key = (which, k)
        cached = self._pow_cache.get(key)
        if cached is None:
            p = self.lam if which == "lam" else self.rho
            cached = self._pow_cache[key] = perms.power(p, k)
        return cached

    def identity_value(self):
        e = self.base.identity_value()
        return (0, tuple(e for _ in range(self.n)))

    def check_value(self, value):
        m, coords = value
        if not isinstance(m, int):
            raise UsageError("leading component must be int")
        coords = tuple(coords)
        if len(coords) != self.n:
            raise UsageError(f"expected {self.n} coordinates")
        return (m, tuple(self.base.check_value(c) for c in coords))

    def mul_values(self, x, y):
        m1, xs = x
        m2, ys = y
        lam_p = self._power("lam", -m2)
        rho_p = self._power("rho", -m1)
        coords = tuple(
            self.base.mul_values(xs[lam_p[i]], ys[rho_p[i]]) for i in range(self.n))
        return (m1 + m2, coords)

    def inv_value(self, x):
        from . import perms

        m, xs = x
        rl = perms.compose(self.rho, self.lam)
        p = perms.power(rl, m)
        coords = tuple(self.base.inv_value(xs[p[i]]) for i in range(self.n))
        return (-m, coords)

    def leq_values(self, x, y):
        m1, xs = x
        m2, ys = y
        if m1 != m2:
            return m1 < m2
        return all(self.base.leq_values(a, b) for a, b in zip(xs, ys))

    def join(self, a, b):
        self.own(a)
        self.own(b)
        if not self.is_lattice:
            raise CapabilityError("TwistedLex over a non-lattice base")
        m1, xs = a.value
        m2, ys = b.value
        if m1 > m2:
            return a
        if m2 > m1:
            return b
        coords = tuple(
            self.base.join(Elem(self.base, x), Elem(self.base, y)).value
            for x, y in zip(xs, ys))
        return Elem(self, (m1, coords))

    def meet(self, a, b):
        self.own(a)
        self.own(b)
        if not self.is_lattice:
            raise CapabilityError("TwistedLex over a non-lattice base")
        m1, xs = a.value
        m2, ys = b.value
        if m1 < m2:
            return a
        if m2 < m1:
            return b
        coords = tuple(
            self.base.meet(Elem(self.base, x), Elem(self.base, y)).value
            for x, y in zip(xs, ys))
        return Elem(self, (m1, coords))

    def serialize_value(self, value):
        m, coords = value
        return [m, [self.base.serialize_value(c) for c in coords]]

    def deserialize(self, obj):
        m, coords = obj
        return self.make((m, tuple(self.base.deserialize(c).value for c in coords)))

    def ball_values(self, height):
        base_ball = list(self.base.ball_values(height))
        def gen():
            for m in range(-height, height + 1):
                for coords in itertools.product(base_ball, repeat=self.n):
                    yield (m, coords)
        return gen()

    def interval_exhaustive(self, a, b, w):
        # lex intervals across different leading integers are infinite
        m1 = a.value[0]
        m2 = b.value[0]
        if m1 != m2:
            return False
        return max(self.norm(a), self.norm(b)) <= w.height

    def strong_unit(self) -> Elem:
        e = self.base.identity_value()
        return Elem(self, (1, tuple(e for _ in range(self.n))))

    def _params(self):
        return {"n": self.n, "lam": list(self.lam), "rho": list(self.rho),
                "base": self.base.describe()}


class ConeByGenerators(PoGroup):
    """Z^rank ordered by the monoid generated by the given vectors.

    Cone membership is decided within a bounded search region fixed at
    construction (membership_height); vectors whose difference leaves the
    region are reported incomparable, and every Verdict built on this order
    carries that caveat via the bounded_note attribute.
    """

    kind = "ConeByGenerators"
    is_lattice = False
    is_abelian = True
    is_totally_ordered = False
    is_directed = None
    rdp_hint = None

    def __init__(self, rank: int, generators, membership_height: int = 8):
        if rank < 1:
            raise UsageError("rank must be >= 1")
        self.rank = rank
        gens = []
        for g in generators:
            g = tuple(g)
            if len(g) != rank or not all(isinstance(c, int) for c in g):
                raise UsageError("generators must be integer vectors of the rank")
            if any(g):
                gens.append(g)
        self.generators = tuple(gens)
        self.membership_height = membership_height
        self._cone = self._build_cone()
        bad = [v for v in self._cone
               if v != (0,) * rank and tuple(-c for c in v) in self._cone]
        if bad:
            raise UsageError(
                f"generated cone meets its negative at {bad[0]}; not a partial order")
        self.bounded_note = (
            f"cone membership decided within |coord| <= {membership_height}")

    def _build_cone(self) -> frozenset:
        bound = 2 * self.membership_height
        zero = (0,) * self.rank
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for v in frontier:
                for g in self.generators:
                    w = tuple(a + b for a, b in zip(v, g))
                    if w not in seen and all(abs(c) <= bound for c in w):
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        keep = frozenset(
            v for v in seen if all(abs(c) <= self.membership_height for c in v))
        return keep

    @property
    def order_convex_norm(self):
        return all(all(c >= 0 for c in g) for g in self.generators)

    def _key(self):
        return (self.kind, self.rank, self.generators, self.membership_height)

    def identity_value(self):
        return (0,) * self.rank

    def check_value(self, value):
        value = tuple(value)
        if len(value) != self.rank or not all(isinstance(c, int) for c in value):
            raise UsageError("values are integer vectors of the rank")
        return value

    def mul_values(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def inv_value(self, x):
        return tuple(-a for a in x)

    def leq_values(self, x, y):
        return tuple(b - a for a, b in zip(x, y)) in self._cone

    def serialize_value(self, value):
        return list(value)

    def deserialize(self, obj):
        return self.make(tuple(obj))

    def ball_values(self, height):
        rng = range(-height, height + 1)
        return iter(itertools.product(rng, repeat=self.rank))

    def _params(self):
        return {"rank": self.rank, "generators": [list(g) for g in self.generators],
                "membership_height": self.membership_height}


# ---------------------------------------------------------------------------
# window enumeration and bounded order checks


_window_cache: dict[tuple, list] = {}


def enumerate_window(group: PoGroup, w: Window) -> list[Elem]:
    """All elements with norm <= height, sorted by (norm, value)."""
    key = (group._key(), w.height)
    cached = _window_cache.get(key)
    if cached is None:
        elems = [Elem(group, v) for v in group.ball_values(w.height)]
        elems.sort(key=group.sort_key)
        cached = _window_cache[key] = elems
    return list(cached)


def window_sample(group: PoGroup, w: Window) -> list[Elem]:
    """Window carrier, truncated to the cap (lowest-norm prefix) if set."""
    elems = enumerate_window(group, w)
    if w.cap is not None:
        return elems[: w.cap]
    return elems


def cone_window(group: PoGroup, w: Window) -> list[Elem]:
    """Positive window elements (identity <= x), sorted."""
    e = group.e
    return [x for x in enumerate_window(group, w) if group.leq(e, x)]


def enumerate_interval(group: PoGroup, a: Elem, b: Elem,
                       w: Window) -> tuple[list[Elem], bool]:
    """Window elements x with a <= x <= b, plus an exhaustiveness flag."""
    group.own(a)
    group.own(b)
    wide = Window(max(w.height, group.norm(a), group.norm(b)))
    out = [x for x in enumerate_window(group, wide)
           if group.leq(a, x) and group.leq(x, b)]
    return out, group.interval_exhaustive(a, b, wide)


def check_directed(group: PoGroup, g1: Elem, g2: Elem, w: Window) -> Verdict:
    """Search the window for a common upper bound of g1 and g2."""
    t = Tally()
    for x in enumerate_window(group, w):
        t.hit()
        if group.leq(g1, x) and group.leq(g2, x):
            return Verdict(Status.HOLDS, checked=t.checked,
                           witness=(("bound", x.serialized()),),
                           reason="upper bound found")
    return unknown(t.checked, skipped=1,
                   reason="no upper bound within window; not refutable by search")


def check_com(group: PoGroup, a: Elem, b: Elem, w: Window) -> Verdict:
    """All x in [0,a] and y in [0,b] commute; Unknown if the intervals were cut."""
    e = group.e
    if not group.leq(e, a) or not group.leq(e, b):
        raise UsageError("com requires positive arguments")
    xs, ex_a = enumerate_interval(group, e, a, w)
    ys, ex_b = enumerate_interval(group, e, b, w)
    t = Tally()
    if not ex_a:
        t.skip("interval [0,a] truncated by window")
    if not ex_b:
        t.skip("interval [0,b] truncated by window")
    for x in xs:
        for y in ys:
            t.hit()
            if group.mul(x, y) != group.mul(y, x):
                return t.fail({"x": x.serialized(), "y": y.serialized()},
                              reason="witness pair does not commute")
    return t.done()


def check_group_laws(group: PoGroup, w: Window, cap: int = 12) -> Verdict:
    """Associativity, identity, inverses, translation invariance, cone sanity.

    Quantifies over the lowest-norm `cap` window elements for the triple and
    quadruple laws and the whole window for the unary ones.
    """
    full = enumerate_window(group, w)
    sample = full[:cap]
    e = group.e
    t = Tally()
    for a in full:
        t.hit()
        if group.mul(a, e) != a or group.mul(e, a) != a:
            return t.fail({"a": a.serialized()}, reason="identity law broken")
        if group.mul(a, group.inv(a)) != e or group.mul(group.inv(a), a) != e:
            return t.fail({"a": a.serialized()}, reason="inverse law broken")
        if group.leq(e, a) and group.leq(a, e) and a != e:
            return t.fail({"a": a.serialized()},
                          reason="positive and negative cone share a non-identity element")
    for a in sample:
        for b in sample:
            for c in sample:
                t.hit()
                if group.mul(group.mul(a, b), c) != group.mul(a, group.mul(b, c)):
                    return t.fail(
                        {"a": a.serialized(), "b": b.serialized(), "c": c.serialized()},
                        reason="associativity broken")
    pairs = [(a, b) for a in sample for b in sample if group.leq(a, b)]
    for a, b in pairs:
        for x in sample:
            for y in sample:
                t.hit()
                lhs = group.mul(group.mul(x, a), y)
                rhs = group.mul(group.mul(x, b), y)
                if not group.leq(lhs, rhs):
                    return t.fail(
                        {"a": a.serialized(), "b": b.serialized(),
                         "x": x.serialized(), "y": y.serialized()},
                        reason="order not translation invariant")
    if group.is_lattice:
        for a in sample:
            for b in sample:
                t.hit()
                j = group.join(a, b)
                m = group.meet(a, b)
                if not (group.leq(a, j) and group.leq(b, j)):
                    return t.fail({"a": a.serialized(), "b": b.serialized()},
                                  reason="join is not an upper bound")
                if not (group.leq(m, a) and group.leq(m, b)):
                    return t.fail({"a": a.serialized(), "b": b.serialized()},
                                  reason="meet is not a lower bound")
                for c in sample:
                    if group.leq(a, c) and group.leq(b, c) and not group.leq(j, c):
                        return t.fail(
                            {"a": a.serialized(), "b": b.serialized(),
                             "c": c.serialized()},
                            reason="join is not least among window bounds")
                    if group.leq(c, a) and group.leq(c, b) and not group.leq(c, m):
                        return t.fail(
                            {"a": a.serialized(), "b": b.serialized(),
                             "c": c.serialized()},
                            reason="meet is not greatest among window bounds")
    return t.done()


# ---------------------------------------------------------------------------
# descriptors


def parse_group(desc) -> PoGroup:
    """Build a group from a JSON-style descriptor or a shortcut name."""
    if isinstance(desc, str):
        name = desc.strip().lower()
        shortcuts = {
            "z": lambda: Integers(),
            "integers": lambda: Integers(),
            "z2": lambda: integer_product(2),
            "z3": lambda: integer_product(3),
            "trivial": lambda: Product(()),
            "strictcone2": lambda: StrictCone2(),
        }
        if name in shortcuts:
            return shortcuts[name]()
        raise UsageError(f"unknown group shortcut {desc!r}")
    if not isinstance(desc, dict) or "kind" not in desc:
        raise UsageError("group descriptor must be a name or a dict with 'kind'")
    kind = desc["kind"]
    params = desc.get("params", {})
    if kind == "Integers":
        return Integers()
    if kind == "Product":
        return Product([parse_group(c) for c in params.get("components", [])])
    if kind == "StrictCone2":
        return StrictCone2()
    if kind == "TwistedLex":
        return TwistedLexGroup(params["n"], params["lam"], params["rho"],
                               parse_group(params["base"]))
    if kind == "ConeByGenerators":
        return ConeByGenerators(params["rank"], params["generators"],
                                params.get("membership_height", 8))
    raise UsageError(f"unknown group kind {kind!r}")
