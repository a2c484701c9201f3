"""Parameterized curves y^2 + axy + cy = x^3 + bx^2 on which the first k
multiples of P = (0, 0) are integral, for k in {2, 3, 4, 5, 8}.

Each constructor returns a :class:`FamilyCurve` carrying the closed-form
multiple it predicts.  The prediction is a cheap cross-check only; tests
always compare it against the group law.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .curve import Affine, Curve, is_nonsingular

REASONS = ("singular", "c_zero", "b_zero", "unreduced_gcd", "torsion")


class FamilyRejected(ValueError):
    """Parameters give a degenerate curve.  ``reason`` is one of :data:`REASONS`."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


class Family2Params(NamedTuple):
    a: int
    b: int
    c: int


class Family3Params(NamedTuple):
    a: int
    b: int
    d: int


class Family4Params(NamedTuple):
    a: int
    d: int
    f: int


class Family5Params(NamedTuple):
    r: int
    s: int
    t: int
    u: int


class Family8Params(NamedTuple):
    u: int
    v: int
    p: int


PARAM_TYPES = {2: Family2Params, 3: Family3Params, 4: Family4Params, 5: Family5Params, 8: Family8Params}


@dataclass(frozen=True)
class FamilyCurve:
    family: int
    params: tuple
    curve: Curve
    # (n, nP) pairs; for family 8 only x(8P) is known, so the point slot holds a Fraction
    predicted: tuple = ()
    flags: frozenset = field(default_factory=frozenset)


def _pt(x: int, y: int) -> Affine:
    return Affine(Fraction(x), Fraction(y))


def _check(family: int, curve: Curve) -> None:
    if curve.c == 0:
        raise FamilyRejected("c_zero", f"family {family}: c = 0 makes (0,0) a 2-torsion point")
    if not is_nonsingular(curve):
        raise FamilyRejected("singular", f"family {family}: curve {curve} is singular")


def family2_point(a: int, b: int, c: int) -> Affine:
    return _pt(-b, a * b - c)


def family3_point(a: int, b: int, d: int) -> Affine:
    return _pt(d * d - a * d, -d ** 3 + a * d * d - b * d)


def family4_point(a: int, d: int, f: int) -> Affine:
    return _pt(f * f - d * f, -f ** 3 + (2 * d - a) * f * f)


def family5_point(r: int, s: int, t: int, u: int) -> Affine:
    return _pt(s * t * u * u - r * s * t * u, r * s * s * t * u * u - s * t * t * u ** 3)


def family8_x(u: int, v: int, p: int) -> int:
    """x-coordinate of 8P on the family-8 curve."""
    return (-u**3 * v**5 * p - u**3 * v**4 * p - u**3 * v**3 * p
            + u**2 * v**5 * p**2 + u**2 * v**3 * p**2 + u * v**4 * p**3)


def family8_coeffs(u: int, v: int, p: int) -> tuple[int, int, int]:
    a = (u**2 + p*u*v + u**2*v - p**2*v**2 + 2*p*u*v**2
         - p*u*v**3 + u**2*v**3)
    b = u * v * (v + 1) * (u - p) * (u + p*v) * (u + u*v + p*v + u*v**2)
    c = b * v**2 * (u - p) * (p + u*v)
    return a, b, c


def family2(params) -> FamilyCurve:
    p = Family2Params(*params)
    E = Curve(p.a, p.b, p.c)
    _check(2, E)
    return FamilyCurve(2, tuple(p), E, ((2, family2_point(*p)),))


def family3(params) -> FamilyCurve:
    p = Family3Params(*params)
    E = Curve(p.a, p.b, p.d * p.b)
    _check(3, E)
    return FamilyCurve(3, tuple(p), E, ((3, family3_point(*p)),))


def family4(params) -> FamilyCurve:
    p = Family4Params(*params)
    b = p.f * (p.a - p.d)
    E = Curve(p.a, b, p.d * b)
    _check(4, E)
    return FamilyCurve(4, tuple(p), E, ((4, family4_point(*p)),))


def family5(params) -> FamilyCurve:
    """Curves with P..5P integral.  gcd(t, s) > 1 is flagged ``unreduced_gcd``, not rejected."""
    p = Family5Params(*params)
    r, s, t, u = p
    a = t * r + t * u - s * u
    b = r * s * u * (t - s)
    c = t * r * r * s * u * (t - s)
    E = Curve(a, b, c)
    _check(5, E)
    flags = frozenset({"unreduced_gcd"}) if gcd(t, s) != 1 else frozenset()
    return FamilyCurve(5, tuple(p), E, ((5, family5_point(*p)),), flags)


def family8(params) -> FamilyCurve:
    p = Family8Params(*params)
    a, b, c = family8_coeffs(*p)
    if b == 0:
        raise FamilyRejected("b_zero", f"family 8: b = 0 for {tuple(p)}")
    E = Curve(a, b, c)
    _check(8, E)
    return FamilyCurve(8, tuple(p), E, ((8, Fraction(family8_x(*p))),))


CONSTRUCTORS = {2: family2, 3: family3, 4: family4, 5: family5, 8: family8}


def build(family: int, params) -> FamilyCurve:
    try:
        ctor = CONSTRUCTORS[family]
    except KeyError:
        raise ValueError(f"unknown family {family}; choose from {sorted(CONSTRUCTORS)}") from None
    return ctor(params)
