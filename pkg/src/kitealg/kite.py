"""The kite construction over a po-group.

Carrier: two stacked copies of coordinate tuples indexed by {0..n-1}; the
lower part holds positive-cone coordinates, the upper part negative-cone
coordinates. Every lower element sits below every upper element; within a
part the order is coordinatewise. The partial addition twists coordinates by
two bijections lam and rho:

    upper(u) + lower(f) = upper(< u_i * f[rho^-1(i)] >)   if each product <= e
    lower(f) + upper(u) = upper(< f[lam^-1(i)] * u_i >)   if each product <= e
    lower(f) + lower(g) = lower(< f_j * g_j >)            always
    upper + upper                                          never defined

lower(all e) is 0 and upper(all e) is 1; the two are distinct.

Complements are closed forms (solve the mixed cases for the all-e result):
0' and 1' swap, lower(f)'s complements re-index f through rho / lam, an
upper's complements re-index the inverted coordinates through lam / rho.
Differences invert the case equations coordinatewise and validate by re-adding.

With a lattice base the kite carries total MV operations; oplus truncates the
case products at e and extends the partial addition, and odot is its
definedness gauge: x + y is defined exactly when odot(x, y) = 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from . import perms
from .pogroup import (CapabilityError, Elem, PoGroup, UsageError, Window,
                      cone_window, enumerate_window)


@dataclass(frozen=True)
class KiteShape:
    """Index-set size, the two twisting bijections, and the base group."""

    n: int
    lam: tuple[int, ...]
    rho: tuple[int, ...]
    base: PoGroup

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", tuple(perms.check_perm(self.lam, self.n)))
        object.__setattr__(self, "rho", tuple(perms.check_perm(self.rho, self.n)))

    def describe(self) -> dict:
        return {"n": self.n, "lambda": list(self.lam), "rho": list(self.rho),
                "base": self.base.describe()}

    def label(self) -> str:
        return (f"kite(n={self.n}, lam={perms.perm_name(self.lam)}, "
                f"rho={perms.perm_name(self.rho)}, base={self.base.kind})")


LOWER = "L"
UPPER = "U"


@dataclass(frozen=True)
class KiteElement:
    shape: KiteShape
    tag: str
    coords: tuple[Elem, ...]

    def serialized(self) -> dict:
        return {"tag": self.tag,
                "coords": [c.group.serialize_value(c.value) for c in self.coords]}

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        inner = ",".join(str(c.group.serialize_value(c.value)) for c in self.coords)
        return f"{self.tag}({inner})"


class Kite:
    """Operations of the kite algebra for one shape."""

    def __init__(self, shape: KiteShape):
        self.shape = shape
        self.base = shape.base
        self.n = shape.n
        self.lam = list(shape.lam)
        self.rho = list(shape.rho)
        self.lam_inv = perms.inverse(self.lam)
        self.rho_inv = perms.inverse(self.rho)
        e = self.base.e
        self.zero = KiteElement(shape, LOWER, tuple(e for _ in range(self.n)))
        self.one = KiteElement(shape, UPPER, tuple(e for _ in range(self.n)))

    # -- constructors -------------------------------------------------------

    def lower(self, *values) -> KiteElement:
        """Lower element from base values; coordinates must be positive."""
        coords = tuple(self.base.make(v) for v in values)
        if len(coords) != self.n:
            raise UsageError(f"expected {self.n} coordinates")
        e = self.base.e
        for c in coords:
            if not self.base.leq(e, c):
                raise UsageError(f"lower coordinate {c!r} is not positive")
        return KiteElement(self.shape, LOWER, coords)

    def upper(self, *values) -> KiteElement:
        """Upper element from base values; coordinates must be negative."""
        coords = tuple(self.base.make(v) for v in values)
        if len(coords) != self.n:
            raise UsageError(f"expected {self.n} coordinates")
        e = self.base.e
        for c in coords:
            if not self.base.leq(c, e):
                raise UsageError(f"upper coordinate {c!r} is not negative")
        return KiteElement(self.shape, UPPER, coords)

    def own(self, x: KiteElement) -> None:
        if x.shape != self.shape:
            raise UsageError("element belongs to a different kite shape")

    # -- order ---------------------------------------------------------------

    def leq(self, x: KiteElement, y: KiteElement) -> bool:
        self.own(x)
        self.own(y)
        if x.tag == y.tag:
            return all(self.base.leq(a, b) for a, b in zip(x.coords, y.coords))
        return x.tag == LOWER

    # -- partial addition ------------------------------------------------------

    def add(self, x: KiteElement, y: KiteElement) -> Optional[KiteElement]:
        self.own(x)
        self.own(y)
        base = self.base
        e = base.e
        if x.tag == UPPER and y.tag == UPPER:
            return None
        if x.tag == LOWER and y.tag == LOWER:
            coords = tuple(base.mul(a, b) for a, b in zip(x.coords, y.coords))
            return KiteElement(self.shape, LOWER, coords)
        if x.tag == UPPER:
            coords = tuple(
                base.mul(x.coords[i], y.coords[self.rho_inv[i]])
                for i in range(self.n))
        else:
            coords = tuple(
                base.mul(x.coords[self.lam_inv[i]], y.coords[i])
                for i in range(self.n))
        if all(base.leq(c, e) for c in coords):
            return KiteElement(self.shape, UPPER, coords)
        return None

    # -- complements ------------------------------------------------------------

    def complement_left(self, x: KiteElement) -> KiteElement:
        """The unique d with d + x = 1."""
        self.own(x)
        base = self.base
        if x.tag == LOWER:
            coords = tuple(
                base.inv(x.coords[self.rho_inv[i]]) for i in range(self.n))
            return KiteElement(self.shape, UPPER, coords)
        coords = tuple(base.inv(x.coords[self.lam[j]]) for j in range(self.n))
        return KiteElement(self.shape, LOWER, coords)

    def complement_right(self, x: KiteElement) -> KiteElement:
        """The unique d with x + d = 1."""
        self.own(x)
        base = self.base
        if x.tag == LOWER:
            coords = tuple(
                base.inv(x.coords[self.lam_inv[i]]) for i in range(self.n))
            return KiteElement(self.shape, UPPER, coords)
        coords = tuple(base.inv(x.coords[self.rho[j]]) for j in range(self.n))
        return KiteElement(self.shape, LOWER, coords)

    def negations(self, x: KiteElement) -> tuple[KiteElement, KiteElement]:
        """(right complement, left complement): d with x+d=1, then d with d+x=1."""
        return (self.complement_right(x), self.complement_left(x))

    # -- differences -------------------------------------------------------------

    def ldiff(self, b: KiteElement, a: KiteElement) -> Optional[KiteElement]:
        """The c with c + a = b, when a <= b; None otherwise."""
        self.own(a)
        self.own(b)
        if not self.leq(a, b):
            return None
        base = self.base
        if a.tag == LOWER and b.tag == LOWER:
            coords = tuple(
                base.mul(q, base.inv(p)) for p, q in zip(a.coords, b.coords))
            c = KiteElement(self.shape, LOWER, coords)
        elif a.tag == LOWER and b.tag == UPPER:
            coords = tuple(
                base.mul(b.coords[i], base.inv(a.coords[self.rho_inv[i]]))
                for i in range(self.n))
            c = KiteElement(self.shape, UPPER, coords)
        else:
            coords = tuple(
                base.mul(b.coords[self.lam[j]], base.inv(a.coords[self.lam[j]]))
                for j in range(self.n))
            c = KiteElement(self.shape, LOWER, coords)
        if self.add(c, a) == b:
            return c
        return None

    def rdiff(self, a: KiteElement, b: KiteElement) -> Optional[KiteElement]:
        """The c with a + c = b, when a <= b; None otherwise."""
        self.own(a)
        self.own(b)
        if not self.leq(a, b):
            return None
        base = self.base
        if a.tag == LOWER and b.tag == LOWER:
            coords = tuple(
                base.mul(base.inv(p), q) for p, q in zip(a.coords, b.coords))
            c = KiteElement(self.shape, LOWER, coords)
        elif a.tag == LOWER and b.tag == UPPER:
            coords = tuple(
                base.mul(base.inv(a.coords[self.lam_inv[i]]), b.coords[i])
                for i in range(self.n))
            c = KiteElement(self.shape, UPPER, coords)
        else:
            coords = tuple(
                base.mul(base.inv(a.coords[self.rho[j]]), b.coords[self.rho[j]])
                for j in range(self.n))
            c = KiteElement(self.shape, LOWER, coords)
        if self.add(a, c) == b:
            return c
        return None

    # -- lattice and MV layer --------------------------------------------------

    def _need_lattice(self) -> None:
        if not self.base.is_lattice:
            raise CapabilityError("kite MV/lattice operations need a lattice base")

    def join(self, x: KiteElement, y: KiteElement) -> KiteElement:
        self.own(x)
        self.own(y)
        self._need_lattice()
        if x.tag != y.tag:
            return x if x.tag == UPPER else y
        coords = tuple(self.base.join(a, b) for a, b in zip(x.coords, y.coords))
        return KiteElement(self.shape, x.tag, coords)

    def meet(self, x: KiteElement, y: KiteElement) -> KiteElement:
        self.own(x)
        self.own(y)
        self._need_lattice()
        if x.tag != y.tag:
            return x if x.tag == LOWER else y
        coords = tuple(self.base.meet(a, b) for a, b in zip(x.coords, y.coords))
        return KiteElement(self.shape, x.tag, coords)

    def mv_oplus(self, x: KiteElement, y: KiteElement) -> KiteElement:
        """Total truncated sum; equals x + (x~ and y) and extends add."""
        self.own(x)
        self.own(y)
        self._need_lattice()
        base = self.base
        e = base.e
        if x.tag == LOWER and y.tag == LOWER:
            coords = tuple(base.mul(a, b) for a, b in zip(x.coords, y.coords))
            return KiteElement(self.shape, LOWER, coords)
        if x.tag == UPPER and y.tag == UPPER:
            return self.one
        if x.tag == UPPER:
            coords = tuple(
                base.meet(base.mul(x.coords[i], y.coords[self.rho_inv[i]]), e)
                for i in range(self.n))
        else:
            coords = tuple(
                base.meet(base.mul(x.coords[self.lam_inv[i]], y.coords[i]), e)
                for i in range(self.n))
        return KiteElement(self.shape, UPPER, coords)

    def mv_odot(self, x: KiteElement, y: KiteElement) -> KiteElement:
        """Total truncated product; odot(x, y) = 0 exactly when x + y is defined."""
        self.own(x)
        self.own(y)
        self._need_lattice()
        base = self.base
        e = base.e
        if x.tag == LOWER and y.tag == LOWER:
            return self.zero
        if x.tag == UPPER and y.tag == UPPER:
            coords = tuple(base.mul(a, b) for a, b in zip(x.coords, y.coords))
            return KiteElement(self.shape, UPPER, coords)
        if x.tag == UPPER:
            coords = tuple(
                base.join(base.mul(x.coords[self.rho[j]], y.coords[j]), e)
                for j in range(self.n))
        else:
            coords = tuple(
                base.join(base.mul(x.coords[j], y.coords[self.lam[j]]), e)
                for j in range(self.n))
        return KiteElement(self.shape, LOWER, coords)

    def mv_add(self, x: KiteElement, y: KiteElement) -> Optional[KiteElement]:
        """The partial addition induced by the MV layer (cross-check of add)."""
        if self.mv_odot(x, y) == self.zero:
            return self.mv_oplus(x, y)
        return None

    # -- misc ----------------------------------------------------------------------

    def dimension(self, x: KiteElement) -> int:
        self.own(x)
        e = self.base.e
        return sum(1 for c in x.coords if c != e)

    def support(self, x: KiteElement) -> tuple[int, ...]:
        e = self.base.e
        return tuple(i for i, c in enumerate(x.coords) if c != e)

    def norm(self, x: KiteElement) -> int:
        return max((self.base.norm(c) for c in x.coords), default=0)

    def serialize(self, x: KiteElement) -> dict:
        return x.serialized()

    def sort_key(self, x: KiteElement) -> tuple:
        tag_rank = 0 if x.tag == LOWER else 1
        flat = tuple(itertools.chain.from_iterable(
            self.base.value_key(c.value) for c in x.coords))
        return (self.norm(x), tag_rank) + flat

    # -- enumeration -------------------------------------------------------------

    def _part_values(self, w: Window, negative: bool) -> Iterator[tuple]:
        pool = cone_window(self.base, Window(w.height))
        if negative:
            pool = [self.base.inv(c) for c in pool]
        return itertools.product(pool, repeat=self.n)

    def carrier_size(self, w: Window) -> int:
        k = len(cone_window(self.base, Window(w.height)))
        return 2 * k ** self.n

    def carrier_truncated(self, w: Window) -> bool:
        return w.cap is not None and self.carrier_size(w) > w.cap

    def elements(self, w: Window) -> list[KiteElement]:
        """Window carrier sample, sorted by (norm, tag, coords), capped if set."""
        if w.cap is None:
            out = [KiteElement(self.shape, LOWER, c)
                   for c in self._part_values(w, False)]
            out.extend(
                KiteElement(self.shape, UPPER, c) for c in self._part_values(w, True))
            out.sort(key=self.sort_key)
            return out
        # Capped: emit norm shells in order and stop early, so a small cap never
        # forces the full product space to materialize.
        base = self.base
        pool = cone_window(base, Window(w.height))
        out = []
        for s in range(w.height + 1):
            allowed = [c for c in pool if base.norm(c) <= s]
            for tag in (LOWER, UPPER):
                vals = allowed if tag == LOWER else [base.inv(c) for c in allowed]
                shell = [
                    KiteElement(self.shape, tag, coords)
                    for coords in itertools.product(vals, repeat=self.n)
                    if max((base.norm(c) for c in coords), default=0) == s
                ]
                shell.sort(key=self.sort_key)
                out.extend(shell)
                if len(out) >= w.cap:
                    return out[: w.cap]
        return out

    def interval(self, a: KiteElement, b: KiteElement,
                 w: Window) -> tuple[list[KiteElement], bool]:
        """Window elements between a and b, with an exhaustiveness flag."""
        self.own(a)
        self.own(b)
        if a.tag == UPPER and b.tag == LOWER:
            return [], True
        h = max([w.height, self.norm(a), self.norm(b)])
        wide = Window(h)
        out = [x for x in self.elements(wide)
               if self.leq(a, x) and self.leq(x, b)]
        if a.tag == LOWER and b.tag == UPPER:
            exhaustive = self.base.is_trivial or self.n == 0
        else:
            exhaustive = self.base.order_convex_norm
        return out, exhaustive

    # -- adapters ---------------------------------------------------------------

    def pea(self):
        """EnumerablePEA adapter for the axiom and structure checkers."""
        from .axioms import EnumerablePEA

        return EnumerablePEA(
            name=self.shape.label(),
            zero=self.zero,
            one=self.one,
            elements=self.elements,
            add=self.add,
            leq=self.leq,
            neg_left=self.complement_left,
            neg_right=self.complement_right,
            ldiff=self.ldiff,
            rdiff=self.rdiff,
            meet=self.meet if self.base.is_lattice else None,
            join=self.join if self.base.is_lattice else None,
            interval=self.interval,
            norm=self.norm,
            serialize=self.serialize,
            source=self,
        )

    def mv(self):
        """MvAlgebra adapter; needs a lattice base."""
        from .axioms import MvAlgebra

        self._need_lattice()
        return MvAlgebra(
            name=self.shape.label(),
            zero=self.zero,
            one=self.one,
            elements=self.elements,
            oplus=self.mv_oplus,
            neg_left=self.complement_left,
            neg_right=self.complement_right,
            serialize=self.serialize,
        )
