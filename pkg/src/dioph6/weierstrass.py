"""Elliptic curves over the rationals in the form y^2 = x^3 + a2 x^2 + a4 x + a6,
with the exact chord-and-tangent group law, standard invariants and u-scaling
coordinate changes.

Curves and points are immutable values.  Points carry no back-reference to a
curve: every group operation takes the curve explicitly and validates
membership, which keeps coordinate-change bugs from propagating silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Rat, format_rat

__all__ = [
    "Curve",
    "Point",
    "StdQuantities",
    "INFINITY",
    "point",
]


@dataclass(frozen=True)
class Point:
    """An affine point ``[x, y]`` or the point at infinity (both fields None)."""

    x: Rat | None = None
    y: Rat | None = None

    def __post_init__(self) -> None:
        if (self.x is None) != (self.y is None):
            raise ValueError("point needs both coordinates or neither")
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        if self.is_infinity:
            return "O"
        return f"[{format_rat(self.x)}, {format_rat(self.y)}]"


INFINITY = Point()


def point(x, y) -> Point:
    """Affine point with coordinates coerced to exact rationals."""
    return Point(Fraction(x), Fraction(y))


@dataclass(frozen=True)
class StdQuantities:
    """The standard b/c invariants and discriminant of a curve."""

    b2: Rat
    b4: Rat
    b6: Rat
    b8: Rat
    c4: Rat
    delta: Rat


@dataclass(frozen=True)
class Curve:
    """Nonsingular curve y^2 = x^3 + a2 x^2 + a4 x + a6 over the rationals.

    Only this shape (no xy or y term) is supported; it halves the group-law
    case analysis and covers every curve this package constructs.
    """

    a2: Rat
    a4: Rat
    a6: Rat

    def __post_init__(self) -> None:
        object.__setattr__(self, "a2", Fraction(self.a2))
        object.__setattr__(self, "a4", Fraction(self.a4))
        object.__setattr__(self, "a6", Fraction(self.a6))
        if self.std_quantities().delta == 0:
            raise ValueError(f"singular curve: {self}")

    # -- invariants ------------------------------------------------------

    def std_quantities(self) -> StdQuantities:
        a2, a4, a6 = self.a2, self.a4, self.a6
        b2 = 4 * a2
        b4 = 2 * a4
        b6 = 4 * a6
        b8 = 4 * a2 * a6 - a4 * a4
        c4 = b2 * b2 - 24 * b4
        delta = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
        return StdQuantities(b2, b4, b6, b8, c4, delta)

    # -- membership ------------------------------------------------------

    def rhs(self, x: Rat) -> Rat:
        """The cubic x^3 + a2 x^2 + a4 x + a6."""
        return x**3 + self.a2 * x * x + self.a4 * x + self.a6

    def contains(self, p: Point) -> bool:
        if p.is_infinity:
            return True
        return p.y * p.y == self.rhs(p.x)

    def _require_on_curve(self, p: Point) -> None:
        if not self.contains(p):
            raise ValueError(f"point {p} is not on {self}")

    # -- group law -------------------------------------------------------

    def neg(self, p: Point) -> Point:
        self._require_on_curve(p)
        if p.is_infinity:
            return INFINITY
        return Point(p.x, -p.y)

    def _add_unchecked(self, p: Point, q: Point) -> Point:
        if p.is_infinity:
            return q
        if q.is_infinity:
            return p
        x1, y1, x2, y2 = p.x, p.y, q.x, q.y
        if x1 == x2:
            if y1 == -y2:
                # inverse pair; covers doubling a 2-torsion point (y = 0)
                return INFINITY
            lam = (3 * x1 * x1 + 2 * self.a2 * x1 + self.a4) / (2 * y1)
        else:
            lam = (y2 - y1) / (x2 - x1)
        x3 = lam * lam - self.a2 - x1 - x2
        y3 = lam * (x1 - x3) - y1
        return Point(x3, y3)

    def add(self, p: Point, q: Point) -> Point:
        """Group sum of two points on this curve."""
        self._require_on_curve(p)
        self._require_on_curve(q)
        return self._add_unchecked(p, q)

    def mul(self, k: int, p: Point) -> Point:
        """The k-fold sum [k]p via double-and-add; [0]p = O, [-k]p = -[k]p."""
        self._require_on_curve(p)
        if k < 0:
            k = -k
            p = Point(p.x, -p.y) if not p.is_infinity else INFINITY
        result = INFINITY
        base = p
        while k:
            if k & 1:
                result = self._add_unchecked(result, base)
            base = self._add_unchecked(base, base)
            k >>= 1
        return result

    def torsion_order_upto(self, p: Point, bound: int = 12) -> int | None:
        """Smallest 1 <= k <= bound with [k]p = O, else None."""
        self._require_on_curve(p)
        if bound < 1:
            raise ValueError("bound must be >= 1")
        acc = p
        for k in range(1, bound + 1):
            if acc.is_infinity:
                return k
            acc = self._add_unchecked(acc, p)
        return None

    # -- coordinate changes ----------------------------------------------

    def scale(self, u) -> "Curve":
        """Image under (x, y) |-> (x/u^2, y/u^3).

        Coefficients become a2/u^2, a4/u^4, a6/u^6; delta scales by u^-12
        and c4 by u^-4.
        """
        u = Fraction(u)
        if u == 0:
            raise ValueError("scaling unit must be nonzero")
        return Curve(self.a2 / u**2, self.a4 / u**4, self.a6 / u**6)

    def scale_point(self, p: Point, u) -> Point:
        """Image of a point under the same coordinate change as :meth:`scale`."""
        u = Fraction(u)
        if u == 0:
            raise ValueError("scaling unit must be nonzero")
        if p.is_infinity:
            return INFINITY
        return Point(p.x / u**2, p.y / u**3)

    def __str__(self) -> str:
        return (
            f"y^2 = x^3 + ({format_rat(self.a2)})x^2"
            f" + ({format_rat(self.a4)})x + ({format_rat(self.a6)})"
        )
