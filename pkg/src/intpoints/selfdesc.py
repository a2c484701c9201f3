"""Self-descriptive numbers: length-n digit lists b with b[i] = #{j : b[j] == i}.

Solutions split into *sporadic* ones and *extendable* ones; every extendable
solution is reached from a unique *particular* solution by repeated
extension.  The only particular solution is 3211000, so every solution of
length n > 11 is ``closed_form(n)``.
"""
from __future__ import annotations

import enum
import re
from collections import Counter
from math import isqrt
from typing import Iterator, Sequence

Digits = tuple


class Classification(str, enum.Enum):
    NOT_SOLUTION = "not_solution"
    SPORADIC = "sporadic"
    PARTICULAR = "particular"
    EXTENDABLE = "extendable_nonparticular"

    @property
    def label(self) -> str:
        """Short label used in printed tables."""
        return {"extendable_nonparticular": "extendable"}.get(self.value, self.value)


class NotExtendableError(ValueError):
    pass


def parse_digits(text: str) -> Digits:
    """Accept ``"6210001000"``, ``"(11,2,1,0)"`` or ``"11,2,1,0"``."""
    body = text.strip().strip("()[]").strip()
    if not body:
        raise ValueError("empty digit list")
    if "," in body or " " in body:
        parts = [p for p in re.split(r"[,\s]+", body) if p]
    else:
        parts = list(body)
    try:
        digits = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"not a digit list: {text!r}") from None
    if any(v < 0 for v in digits):
        raise ValueError(f"digits must be non-negative: {text!r}")
    return digits


def render(b: Sequence[int]) -> str:
    """Digit string when every entry is below 10, otherwise a parenthesized list."""
    if all(v <= 9 for v in b):
        return "".join(map(str, b))
    return "(" + ", ".join(map(str, b)) + ")"


def digit_sum(b: Sequence[int]) -> int:
    return sum(b)


def weighted_sum(b: Sequence[int]) -> int:
    return sum(i * v for i, v in enumerate(b))


def is_solution(b: Sequence[int]) -> bool:
    counts = Counter(b)
    return all(v == counts[i] for i, v in enumerate(b))


def zero_lower_bound(n: int) -> int:
    """Least non-negative z with z >= n - 1/2 - sqrt(2n + 1/4).

    Equivalent to 2z >= 2n - 1 - sqrt(8n + 1); with r = isqrt(8n + 1) the
    smallest such integer is ceil((2n - 1 - r) / 2) whether or not 8n + 1 is
    a perfect square.
    """
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")
    r = isqrt(8 * n + 1)
    return max(0, -((r + 1 - 2 * n) // 2))


def _is_extendable(b: Sequence[int]) -> bool:
    z = b[0]
    n = len(b)
    if z >= n or b[z] != 1:
        return False
    return all(b[i] == 0 for i in range(z + 1, n))


def classify(b: Sequence[int]) -> Classification:
    b = tuple(b)
    if not b or not is_solution(b):
        return Classification.NOT_SOLUTION
    if not _is_extendable(b):
        return Classification.SPORADIC
    if b[0] >= 1 and b[b[0] - 1] > 0:
        return Classification.PARTICULAR
    return Classification.EXTENDABLE


def extend(b: Sequence[int]) -> Digits:
    """The extension E(b), one digit longer."""
    b = tuple(b)
    if classify(b) not in (Classification.PARTICULAR, Classification.EXTENDABLE):
        raise NotExtendableError(f"{render(b)} is not an extendable solution")
    z = b[0]
    e = list(b) + [0]
    e[0] = z + 1
    e[z] = 0
    e[z + 1] = 1
    return tuple(e)


def contract(b: Sequence[int]) -> Digits:
    """Inverse of :func:`extend`, defined on extendable non-particular solutions."""
    b = tuple(b)
    if classify(b) is not Classification.EXTENDABLE:
        raise NotExtendableError(f"{render(b)} is not an extendable non-particular solution")
    z = b[0]
    out = list(b[:-1])
    out[0] = z - 1
    out[z - 1] = 1
    if z < len(out):
        out[z] = 0
    return tuple(out)


def to_particular(b: Sequence[int]) -> tuple[Digits, int]:
    """Contract until the particular root is reached; returns (root, steps)."""
    b = tuple(b)
    kind = classify(b)
    if kind not in (Classification.PARTICULAR, Classification.EXTENDABLE):
        raise NotExtendableError(f"{render(b)} is not an extendable solution")
    steps = 0
    while classify(b) is Classification.EXTENDABLE:
        b = contract(b)
        steps += 1
    return b, steps


def _candidates(n: int) -> Iterator[list[int]]:
    # DFS over positions 1..n-1 pruned by the remaining weighted budget
    # (sum i*b[i] == n) and the remaining digit budget (sum b[i] == n, with
    # zero_lower_bound(n) of it reserved for b[0]).  b[0] has weight 0, so
    # the digit budget fixes it once the other positions are placed.
    b = [0] * n
    cap = n - zero_lower_bound(n)

    def rec(i: int, left: int, wleft: int):
        if wleft == 0:
            b[0] = n - (cap - left)
            yield b
            b[0] = 0
            return
        if i >= n or i > wleft:
            return
        for v in range(min(left, wleft // i) + 1):
            b[i] = v
            yield from rec(i + 1, left - v, wleft - i * v)
        b[i] = 0

    yield from rec(1, cap, n)


def search_solutions(n: int) -> list[Digits]:
    """All solutions of length n, in lexicographic order."""
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")
    return sorted(tuple(b) for b in _candidates(n) if is_solution(b))


def closed_form(n: int) -> Digits:
    """n-4, 2, 1, (n-7 zeros), 1, 0, 0, 0: the extension chain of 3211000."""
    if n < 7:
        raise ValueError(f"closed form needs n >= 7, got {n}")
    return (n - 4, 2, 1) + (0,) * (n - 7) + (1, 0, 0, 0)
