"""Bounded brute-force search for integral points.

Completing the square, an integral x gives an integral point iff

    D = (a x + c)^2 + 4 (x^3 + b x^2 + d x + e)

is a perfect square s^2 with -(a x + c) +- s even.  Only |x| <= B is
scanned, so counts are lower bounds on the true number of integral points.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt as _isqrt
from typing import Optional

from .curve import Affine, Curve


def isqrt(n: int) -> Optional[int]:
    """Exact square root of a perfect square, else None."""
    if n < 0:
        return None
    s = _isqrt(n)
    return s if s * s == n else None


def integral_points_at(E: Curve, x: int) -> list[Affine]:
    h = E.a * x + E.c
    D = h * h + 4 * (x ** 3 + E.b * x * x + E.d * x + E.e)
    s = isqrt(D)
    if s is None or (h + s) % 2:
        return []
    ys = {(-h - s) // 2, (-h + s) // 2}
    return [Affine(Fraction(x), Fraction(y)) for y in sorted(ys)]


def enumerate_integral_points(E: Curve, B: int) -> list[Affine]:
    """All integral points with |x| <= B, sorted by (x, y)."""
    if B < 0:
        raise ValueError(f"bound must be non-negative, got {B}")
    found = []
    for x in range(-B, B + 1):
        found.extend(integral_points_at(E, x))
    return found
