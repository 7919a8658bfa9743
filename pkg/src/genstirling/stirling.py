"""Generalized Stirling numbers L(n, k) as polynomials in a (alpha) and b (beta).

The triangle is built from the triangular recurrence

    L(n, k) = L(n-1, k-1) + (a(n-1) + b k) L(n-1, k),   L(0, 0) = 1,

with L(n, 0) = 0 for n >= 1 and L(n, k) = 0 for k > n. Every other route here
(explicit inclusion-exclusion sum, non-decreasing chain sums, vertical and
horizontal recurrences) recomputes entries independently so the identity
harness can compare them bit-exactly.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Mapping, Sequence, Tuple, Union

from .errors import BadRange, BetaZero, InternalNotDivisible, NotDivisible, TableTooSmall
from .factorials import binomial, falling, raising
from .polycore import A, B, ONE, X, ZERO, MultiPoly
from .report import IdentityReport

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]
NumericTriangle = Tuple[Tuple[Number, ...], ...]

# Raising increment of the horizontal recurrence: "corrected" is the one the
# triangular recurrence forces, "printed" steps by a and breaks from (2, 0) on.
HORIZONTAL_INCREMENTS = {"corrected": "b", "printed": "a"}


@dataclass(frozen=True)
class GenStirlingTable:
    n_max: int
    rows: Tuple[Tuple[MultiPoly, ...], ...]

    def covers(self, n: int) -> bool:
        return 0 <= n <= self.n_max

    def require(self, n: int) -> None:
        if n < 0:
            raise BadRange(f"Row index must be non-negative, got {n}")
        if n > self.n_max:
            raise TableTooSmall(f"Row {n} requested but the table stops at row {self.n_max}")

    def row(self, n: int) -> Tuple[MultiPoly, ...]:
        self.require(n)
        return self.rows[n]

    def entry(self, n: int, k: int) -> MultiPoly:
        """L(n, k); zero outside 0 <= k <= n."""
        self.require(n)
        if k < 0 or k > n:
            return ZERO
        return self.rows[n][k]

    def entries(self) -> Iterator[Tuple[int, int, MultiPoly]]:
        for n, row in enumerate(self.rows):
            for k, value in enumerate(row):
                yield n, k, value

    def evaluate(self, at: Mapping[str, Number]) -> NumericTriangle:
        return tuple(tuple(value.evaluate(at) for value in row) for row in self.rows)

    def extended(self, n_max: int) -> "GenStirlingTable":
        """Table with rows up to n_max, reusing the rows already computed."""
        if n_max <= self.n_max:
            return self
        rows = list(self.rows)
        for n in range(self.n_max + 1, n_max + 1):
            rows.append(_next_row(rows[-1], n))
        return GenStirlingTable(n_max=n_max, rows=tuple(rows))


def _recurrence_factor(n: int, k: int) -> MultiPoly:
    """a(n-1) + b k, the weight of inserting element n into k existing lists."""
    return A.scale(n - 1) + B.scale(k)


def _next_row(prev: Sequence[MultiPoly], n: int) -> Tuple[MultiPoly, ...]:
    row: List[MultiPoly] = [ZERO]
    for k in range(1, n + 1):
        value = prev[k - 1]
        if k <= n - 1:
            value = value + prev[k] * _recurrence_factor(n, k)
        row.append(value)
    return tuple(row)


def build_table(n_max: int) -> GenStirlingTable:
    if n_max < 0:
        raise BadRange(f"n_max must be non-negative, got {n_max}")
    rows: List[Tuple[MultiPoly, ...]] = [(ONE,)]
    for n in range(1, n_max + 1):
        rows.append(_next_row(rows[-1], n))
    logger.debug("built polynomial triangle up to row %d", n_max)
    return GenStirlingTable(n_max=n_max, rows=tuple(rows))


def _check_indices(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise BadRange(f"Indices must be non-negative, got n={n}, k={k}")


def single_list(n: int) -> MultiPoly:
    """L(n, 1) = prod_{j=1}^{n-1} (j a + b)."""
    if n < 1:
        raise BadRange(f"single_list needs n >= 1, got {n}")
    result = ONE
    for j in range(1, n):
        result = result * (A.scale(j) + B)
    return result


def explicit_value(n: int, k: int, alpha: Number, beta: Number) -> Fraction:
    """Inclusion-exclusion formula evaluated over the rationals; needs beta != 0."""
    _check_indices(n, k)
    alpha, beta = Fraction(alpha), Fraction(beta)
    if beta == 0:
        raise BetaZero("The explicit formula divides by beta^k; use the table route when beta = 0")
    total = Fraction(0)
    for j in range(k + 1):
        term = binomial(k, j) * raising(beta * (k - j), alpha, n)
        total += term if j % 2 == 0 else -term
    return total / (beta**k * math.factorial(k))


def explicit_numerator(n: int, k: int) -> MultiPoly:
    """sum_j (-1)^j C(k, j) (b(k-j) | a)^(n rising), i.e. k! b^k L(n, k)."""
    _check_indices(n, k)
    numerator = ZERO
    for j in range(k + 1):
        term = raising(B.scale(k - j), A, n).scale(binomial(k, j))
        numerator = numerator + term if j % 2 == 0 else numerator - term
    return numerator


def explicit_polynomial(n: int, k: int) -> MultiPoly:
    """Explicit formula as an exact polynomial: divide out b^k and k! symbolically."""
    numerator = explicit_numerator(n, k)
    try:
        return numerator.exact_div_var_power("b", k).exact_div_int(math.factorial(k))
    except NotDivisible as exc:
        raise InternalNotDivisible(f"Explicit numerator for ({n}, {k}) is not divisible: {exc}") from exc


def chain_sum(lo: int, hi: int, length: int, offset: int = 0) -> MultiPoly:
    """Sum over lo <= i_1 <= ... <= i_length <= hi of prod_l ((a+b) i_{l+1} + a (offset + l)).

    Dynamic program over (position, last index) with running prefix sums.
    """
    if length < 0:
        raise BadRange("Chain length must be non-negative")
    if length == 0:
        return ONE
    if hi < lo:
        return ZERO
    a_plus_b = A + B
    indices = range(lo, hi + 1)
    current = [a_plus_b.scale(i) + A.scale(offset) for i in indices]
    for position in range(1, length):
        running = ZERO
        advanced = []
        for slot, i in enumerate(indices):
            running = running + current[slot]
            advanced.append(running * (a_plus_b.scale(i) + A.scale(offset + position)))
        current = advanced
    return sum(current, ZERO)


def symmetric_formula(n: int, k: int) -> MultiPoly:
    """L(n + k, n) as a sum over non-decreasing index chains in 1..n of length k."""
    _check_indices(n, k)
    return chain_sum(1, n, k)


def vertical_value(n: int, k: int, table: GenStirlingTable) -> MultiPoly:
    """sum_{i=k}^{n} (a+b | a)^(n-i rising) C(n, i) L(i, k); equals L(n+1, k+1)."""
    _check_indices(n, k)
    table.require(n)
    total = ZERO
    for i in range(k, n + 1):
        total = total + raising(A + B, A, n - i) * table.entry(i, k).scale(binomial(n, i))
    return total


def horizontal_expand(n: int, k: int, table: GenStirlingTable, variant: str = "corrected") -> MultiPoly:
    """sum_{j=0}^{n-k} (-1)^j ((k+1)b + n a | step)^(j rising) L(n+1, k+j+1); equals L(n, k).

    ``variant="corrected"`` uses step b; ``"printed"`` steps by a instead,
    which fails from (n, k) = (2, 0) on.
    """
    _check_indices(n, k)
    try:
        step = MultiPoly.var(HORIZONTAL_INCREMENTS[variant])
    except KeyError:
        raise ValueError(f"Unknown horizontal variant {variant!r}") from None
    table.require(n + 1)
    base = B.scale(k + 1) + A.scale(n)
    total = ZERO
    for j in range(0, n - k + 1):
        term = raising(base, step, j) * table.entry(n + 1, k + j + 1)
        total = total + term if j % 2 == 0 else total - term
    return total


def horizontal_step(n: int, k: int, table: GenStirlingTable) -> MultiPoly:
    """L(n+1, k+1) - ((k+1) b + n a) L(n, k+1); equals L(n, k)."""
    _check_indices(n, k)
    table.require(n + 1)
    return table.entry(n + 1, k + 1) - (B.scale(k + 1) + A.scale(n)) * table.entry(n, k + 1)


def triangular_step(n: int, k: int, table: GenStirlingTable) -> MultiPoly:
    """Right-hand side of the triangular recurrence from row n-1."""
    _check_indices(n, k)
    if n == 0:
        return ONE if k == 0 else ZERO
    table.require(n - 1)
    return table.entry(n - 1, k - 1) + _recurrence_factor(n, k) * table.entry(n - 1, k)


def numeric_table(alpha: Number, beta: Number, n_max: int) -> NumericTriangle:
    """Triangular recurrence run directly over exact numbers.

    Plain ints when both parameters are integral, Fractions otherwise.
    """
    if n_max < 0:
        raise BadRange(f"n_max must be non-negative, got {n_max}")
    alpha, beta = Fraction(alpha), Fraction(beta)
    a: Number = alpha
    b: Number = beta
    if alpha.denominator == 1 and beta.denominator == 1:
        a, b = alpha.numerator, beta.numerator
    one: Number = 1 if isinstance(a, int) else Fraction(1)
    zero: Number = 0 if isinstance(a, int) else Fraction(0)
    rows: List[Tuple[Number, ...]] = [(one,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row: List[Number] = [zero]
        for k in range(1, n + 1):
            value = prev[k - 1]
            if k <= n - 1:
                value = value + (a * (n - 1) + b * k) * prev[k]
            row.append(value)
        rows.append(tuple(row))
    logger.debug("built numeric triangle alpha=%s beta=%s up to row %d", alpha, beta, n_max)
    return tuple(rows)


def connection_check(n: int, table: GenStirlingTable) -> IdentityReport:
    """(x | a)^(n rising) == sum_k L(n, k) (x | b)^(k falling) as a polynomial in a, b, x."""
    if n < 0:
        raise BadRange(f"n must be non-negative, got {n}")
    table.require(n)
    lhs = raising(X, A, n)
    rhs = ZERO
    for k in range(n + 1):
        rhs = rhs + table.entry(n, k) * falling(X, B, k)
    return IdentityReport.from_residual("connection", (n,), lhs - rhs)
