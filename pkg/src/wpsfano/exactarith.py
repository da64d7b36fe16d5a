"""Exact integer and rational arithmetic helpers.

Everything in this package is computed over unbounded Python integers and
``fractions.Fraction``; no float ever enters an invariant.  The quantities
involved get genuinely large (Sylvester numbers are doubly exponential, and
volume numerators reach tens of thousands of bits), which native ints handle
exactly.  Rationals are always stored reduced with positive denominator,
which ``Fraction`` guarantees, so equality of values is equality of
canonical forms.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidInput

# Aliases used in signatures throughout the package.
Nat = int
Rat = Fraction


def check_nat(value: object, *, minimum: int = 0, name: str = "value") -> int:
    """Validate an externally supplied integer (no bools, no floats)."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInput(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise InvalidInput(f"{name} must be >= {minimum}, got {value}")
    return value


@lru_cache(maxsize=None)
def sylvester(k: int) -> int:
    """k-th term of Sylvester's sequence 2, 3, 7, 43, 1807, ...

    Defined by s_0 = 2 and s_k = s_{k-1}(s_{k-1} - 1) + 1.  Terms are
    pairwise coprime, satisfy s_k = s_0*...*s_{k-1} + 1, and grow doubly
    exponentially (s_k > 2^(2^(k-1))).  Memoized; the function is pure.
    """
    check_nat(k, minimum=0, name="k")
    if k == 0:
        return 2
    prev = sylvester(k - 1)
    return prev * (prev - 1) + 1


def sylvester_product(k: int) -> int:
    """Product s_0 * s_1 * ... * s_{k-1}, which equals s_k - 1."""
    check_nat(k, minimum=0, name="k")
    return math.prod(sylvester(j) for j in range(k))


def _checked_entries(xs: Iterable[int], name: str) -> Sequence[int]:
    entries = list(xs)
    if not entries:
        raise InvalidInput(f"{name} requires a nonempty list")
    for x in entries:
        check_nat(x, minimum=1, name=f"{name} entry")
    return entries


def gcd_all(xs: Iterable[int]) -> int:
    """Greatest common divisor of a nonempty list of positive integers."""
    return math.gcd(*_checked_entries(xs, "gcd_all"))


def lcm_all(xs: Iterable[int]) -> int:
    """Least common multiple of a nonempty list of positive integers."""
    return math.lcm(*_checked_entries(xs, "lcm_all"))
