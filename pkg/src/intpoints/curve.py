"""Exact group law on general Weierstrass curves

    Y^2 + aXY + cY = X^3 + bX^2 + dX + e

with integer coefficients.  Coordinates are ``fractions.Fraction`` so every
result is exact and always normalized (positive denominator, lowest terms);
integrality is therefore a ``denominator == 1`` test.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterator, NamedTuple, Union


class SingularCurveError(ValueError):
    """Raised when a group operation is requested on a curve with zero discriminant."""


@dataclass(frozen=True)
class Curve:
    a: int
    b: int
    c: int
    d: int = 0
    e: int = 0

    def __post_init__(self):
        for name in "abcde":
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"coefficient {name} must be an int, got {v!r}")

    @property
    def coeffs(self) -> tuple[int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.e)

    @cached_property
    def discriminant(self) -> int:
        a1, a2, a3, a4, a6 = self.coeffs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def __str__(self) -> str:
        return format_curve(self)

    @classmethod
    def parse(cls, text: str) -> "Curve":
        """Parse the ``"a,b,c,d,e"`` text form."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 5:
            raise ValueError(f"expected five comma-separated integers, got {text!r}")
        try:
            return cls(*(int(p) for p in parts))
        except ValueError:
            raise ValueError(f"non-integer coefficient in {text!r}") from None


class Infinity:
    """The point at infinity, the group identity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "O"

    def __reduce__(self):
        return (Infinity, ())


O = Infinity()


class Affine(NamedTuple):
    x: Fraction
    y: Fraction

    def __repr__(self):
        return f"({format_rat(self.x)}, {format_rat(self.y)})"


Point = Union[Infinity, Affine]


def point(x, y) -> Affine:
    """Build an affine point from ints, Fractions or ``"p/q"`` strings."""
    return Affine(Fraction(x), Fraction(y))


class Line(NamedTuple):
    """The line Y = slope * (X - x0) + y0."""

    slope: Fraction
    x0: Fraction
    y0: Fraction

    def __call__(self, x: Fraction) -> Fraction:
        return self.slope * (x - self.x0) + self.y0


class ReductionResult(NamedTuple):
    g: int
    reduced: Curve


def format_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_point(P: Point) -> str:
    if P is O:
        return "O"
    return f"({format_rat(P.x)},{format_rat(P.y)})"


def format_curve(E: Curve) -> str:
    """Render as the comma-separated text form."""
    return ",".join(str(v) for v in E.coeffs)


def _term(coef: int, mono: str) -> str:
    if coef == 0:
        return ""
    mag = abs(coef)
    body = mono if (mag == 1 and mono) else f"{mag}{mono}"
    return f" {'-' if coef < 0 else '+'} {body}"


def pretty_curve(E: Curve) -> str:
    """Render as an equation, e.g. ``y^2 - 17xy + 960y = x^3 - 30x^2``."""
    lhs = "y^2" + _term(E.a, "xy") + _term(E.c, "y")
    rhs = "x^3" + _term(E.b, "x^2") + _term(E.d, "x") + _term(E.e, "")
    return f"{lhs} = {rhs}"


def on_curve(E: Curve, P: Point) -> bool:
    if P is O:
        return True
    x, y = P
    return y * y + E.a * x * y + E.c * y == x ** 3 + E.b * x * x + E.d * x + E.e


def is_nonsingular(E: Curve) -> bool:
    return E.discriminant != 0


def _require_nonsingular(E: Curve) -> None:
    if E.discriminant == 0:
        raise SingularCurveError(f"curve {format_curve(E)} is singular (discriminant 0)")


def negate(E: Curve, P: Point) -> Point:
    if P is O:
        return O
    x, y = P
    return Affine(x, -y - E.a * x - E.c)


def tangent_line(E: Curve, P: Affine) -> Line | None:
    """Tangent at P, or None when the tangent is vertical."""
    x, y = P
    den = 2 * y + E.a * x + E.c
    if den == 0:
        return None
    lam = (3 * x * x + 2 * E.b * x - E.a * y + E.d) / den
    return Line(lam, x, y)


def chord_line(P: Affine, Q: Affine) -> Line | None:
    """Line through two points, or None when it is vertical."""
    if P.x == Q.x:
        return None
    return Line((P.y - Q.y) / (P.x - Q.x), P.x, P.y)


def _add(E: Curve, P: Point, Q: Point) -> Point:
    # unchecked hot path; callers guarantee E is non-singular
    if P is O:
        return Q
    if Q is O:
        return P
    a, b, c = E.a, E.b, E.c
    if P.x == Q.x:
        if P.y + Q.y + a * P.x + c == 0:
            return O
        # same x, not inverses: P == Q on a non-singular curve
        x, y = P
        den = 2 * y + a * x + c
        lam = (3 * x * x + 2 * b * x - a * y + E.d) / den
        x2 = lam * lam + lam * a - b - 2 * x
        y2 = -a * x2 - c - lam * x2 + lam * x - y
        return Affine(x2, y2)
    m = (P.y - Q.y) / (P.x - Q.x)
    x3 = m * m + a * m - b - P.x - Q.x
    y3 = -(m * (x3 - P.x) + P.y) - a * x3 - c
    return Affine(x3, y3)


def add(E: Curve, P: Point, Q: Point) -> Point:
    """P + Q under the chord-and-tangent law."""
    _require_nonsingular(E)
    return _add(E, P, Q)


def double(E: Curve, P: Point) -> Point:
    _require_nonsingular(E)
    return _add(E, P, P)


def multiples(E: Curve, P: Point) -> Iterator[Point]:
    """Yield P, 2P, 3P, ... by iterated addition (infinite)."""
    _require_nonsingular(E)
    Q = P
    while True:
        yield Q
        Q = _add(E, Q, P)


def scalar_mul(E: Curve, n: int, P: Point) -> Point:
    """nP by iterated addition; negative n goes through negation."""
    _require_nonsingular(E)
    if n < 0:
        return negate(E, scalar_mul(E, -n, P))
    R = O
    for _ in range(n):
        R = _add(E, R, P)
    return R


def is_integral(P: Point) -> bool:
    """Both coordinates integers.  The point at infinity is not integral."""
    if P is O:
        return False
    return P.x.denominator == 1 and P.y.denominator == 1


# -- reduction ---------------------------------------------------------------

_WEIGHTS = (1, 2, 3, 4, 6)
_TRIAL_LIMIT = 1 << 16


def _valuation(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def _prime_factors(n: int) -> list[int]:
    n = abs(n)
    primes = []
    p = 2
    while p * p <= n and p < _TRIAL_LIMIT:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        if p * p > n:
            primes.append(n)
        else:
            # large cofactor with no small factor left
            from sympy import factorint

            primes.extend(int(q) for q in factorint(n))
    return sorted(primes)


def reduce(E: Curve) -> ReductionResult:
    """Largest g with g|a, g^2|b, g^3|c, g^4|d, g^6|e, and the curve scaled down by it."""
    coeffs = E.coeffs
    if not any(coeffs):
        raise ValueError("cannot reduce the all-zero curve")
    common = 0
    for v in coeffs:
        common = gcd(common, v)
    g = 1
    for p in _prime_factors(common):
        k = min(_valuation(v, p) // w for v, w in zip(coeffs, _WEIGHTS) if v != 0)
        g *= p ** k
    reduced = Curve(*(v // g ** w for v, w in zip(coeffs, _WEIGHTS)))
    return ReductionResult(g, reduced)


def scale(E: Curve, g: int) -> Curve:
    if g < 1:
        raise ValueError(f"scale factor must be >= 1, got {g}")
    return Curve(*(v * g ** w for v, w in zip(E.coeffs, _WEIGHTS)))


def map_point(P: Point, g: int, direction: str) -> Point:
    """Move a point between E and scale(E, g): ``up`` multiplies by (g^2, g^3), ``down`` divides."""
    if g < 1:
        raise ValueError(f"scale factor must be >= 1, got {g}")
    if P is O:
        return O
    if direction == "up":
        return Affine(P.x * g ** 2, P.y * g ** 3)
    if direction == "down":
        return Affine(P.x / g ** 2, P.y / g ** 3)
    raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")


def shear(E: Curve, s: int) -> Curve:
    """Curve obtained by substituting y + s*x for y; x-coordinates are unchanged."""
    a, b, c, d, e = E.coeffs
    return Curve(a + 2 * s, b - s * s - a * s, c, d - s * c, e)


def shear_point(P: Point, s: int) -> Point:
    """Image on shear(E, s) of a point on E."""
    if P is O:
        return O
    return Affine(P.x, P.y - s * P.x)
