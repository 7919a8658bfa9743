from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Sequence, TypeVar, Union

from .errors import PartsMismatch
from .polycore import MultiPoly

Value = TypeVar("Value", MultiPoly, Fraction, int)


class FactorialKind(str, Enum):
    RAISING = "raising"
    FALLING = "falling"


def gen_factorial(
    kind: Union[FactorialKind, str],
    x: Union[MultiPoly, Fraction, int],
    step: Union[MultiPoly, Fraction, int],
    n: int,
) -> Union[MultiPoly, Fraction, int]:
    """Generalized factorial with increment: x(x±θ)(x±2θ)...(x±(n-1)θ), 1 when n = 0.

    Works over MultiPoly or exact numbers; a plain number paired with a MultiPoly
    is lifted to a constant polynomial.
    """
    kind = FactorialKind(kind)
    if n < 0:
        raise ValueError("n must be non-negative")
    if isinstance(x, MultiPoly) or isinstance(step, MultiPoly):
        x = MultiPoly.coerce(x) if not isinstance(x, Fraction) else _lift(x)
        step = MultiPoly.coerce(step) if not isinstance(step, Fraction) else _lift(step)
        result: Union[MultiPoly, Fraction, int] = MultiPoly.const(1)
    else:
        result = 1 if isinstance(x, int) and isinstance(step, int) else Fraction(1)
    sign = 1 if kind is FactorialKind.RAISING else -1
    for i in range(n):
        result = result * (x + step * (sign * i))
    return result


def _lift(value: Fraction) -> MultiPoly:
    if value.denominator != 1:
        raise ValueError(f"Cannot lift non-integral {value} into an integer polynomial")
    return MultiPoly.const(value.numerator)


def raising(x, step, n: int):
    return gen_factorial(FactorialKind.RAISING, x, step, n)


def falling(x, step, n: int):
    return gen_factorial(FactorialKind.FALLING, x, step, n)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / prod(part!) for parts summing to n."""
    if any(p < 0 for p in parts) or sum(parts) != n:
        raise PartsMismatch(f"Parts {list(parts)} do not sum to {n}")
    result = 1
    remaining = n
    for p in parts:
        result *= math.comb(remaining, p)
        remaining -= p
    return result
