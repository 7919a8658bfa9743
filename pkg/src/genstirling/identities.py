"""Identity harness: every formula and recurrence checked against the triangle.

Route identities report ``residual = route - table entry``; convolution
identities report ``residual = lhs - rhs``. A check passes iff its residual is
the zero polynomial.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import BadRange, UnknownIdentity
from .factorials import multinomial
from .oracle import enumerate_labeled_weight, enumerate_weight
from .polycore import ONE, ZERO, MultiPoly
from .profiles import check_profile
from .report import IdentityReport
from .stirling import (
    GenStirlingTable,
    chain_sum,
    connection_check,
    explicit_numerator,
    explicit_polynomial,
    explicit_value,
    horizontal_expand,
    horizontal_step,
    single_list,
    symmetric_formula,
    triangular_step,
    vertical_value,
)

logger = logging.getLogger(__name__)

Params = Tuple[Any, ...]
Ranges = Mapping[str, Sequence[Params]]

NUMERIC_SAMPLE_POINTS: Tuple[Tuple[Fraction, Fraction], ...] = (
    (Fraction(1), Fraction(1)),
    (Fraction(0), Fraction(1)),
    (Fraction(2), Fraction(3)),
    (Fraction(-1, 2), Fraction(5, 3)),
)

DEFAULT_PROFILE_SPECS: Tuple[str, ...] = (
    "stirling1",
    "stirling2",
    "lah",
    "whitney1:2",
    "whitney2:2",
    "whitney_lah:3",
    "degenerate2:1/2",
    "degenerate1:1/3",
)


def weak_compositions(total: int, length: int) -> Iterator[Tuple[int, ...]]:
    """Tuples of ``length`` non-negative integers summing to ``total``."""
    if length == 0:
        if total == 0:
            yield ()
        return
    if length == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, length - 1):
            yield (first,) + rest


def positive_compositions(total: int, length: int) -> Iterator[Tuple[int, ...]]:
    """Tuples of ``length`` positive integers summing to ``total``."""
    if total < length:
        return
    for parts in weak_compositions(total - length, length):
        yield tuple(part + 1 for part in parts)


def check_multinomial_convolution(n: int, parts: Sequence[int], table: GenStirlingTable) -> IdentityReport:
    """C(k; k_1..k_p) L(n, k) against sum over l_1+..+l_p = n of C(n; l_1..l_p) prod L(l_i, k_i)."""
    parts = tuple(parts)
    if not parts or n < 0 or any(p < 0 for p in parts):
        raise BadRange(f"Need n >= 0 and at least one non-negative part, got n={n}, parts={list(parts)}")
    k = sum(parts)
    if k > n:
        raise BadRange(f"Parts sum to {k} > n={n}")
    table.require(n)
    lhs = table.entry(n, k).scale(multinomial(k, parts))
    rhs = ZERO
    for sizes in weak_compositions(n, len(parts)):
        product = ONE
        for size, lists in zip(sizes, parts):
            product = product * table.entry(size, lists)
            if product.is_zero:
                break
        if not product.is_zero:
            rhs = rhs + product.scale(multinomial(n, sizes))
    return IdentityReport.from_residual("thm7-multinomial", (n,) + parts, lhs - rhs)


def peeled_rhs(k: int, m: int, s: int, table: GenStirlingTable) -> MultiPoly:
    """sum_j chain(k-j..k, s-j) L(k+m-s, k-j), each chain factor (a+b) i + a (m - (s-j-l))."""
    total = ZERO
    for j in range(s + 1):
        length = s - j
        coefficient = chain_sum(k - j, k, length, offset=m - length)
        total = total + coefficient * table.entry(k + m - s, k - j)
    return total


def check_theorem8(k: int, m: int, s: int, table: GenStirlingTable) -> IdentityReport:
    """L(k+m, k) peeled s rows down, for 0 <= s <= min(k, m)."""
    if k < 0 or m < 0 or s < 0 or s > min(k, m):
        raise BadRange(f"Need 0 <= s <= min(k, m), got k={k}, m={m}, s={s}")
    table.require(k + m)
    residual = table.entry(k + m, k) - peeled_rhs(k, m, s, table)
    return IdentityReport.from_residual("thm8-convolution", (k, m, s), residual)


def _numeric_explicit_residual(n: int, k: int, table: GenStirlingTable) -> MultiPoly:
    entry = table.entry(n, k)
    for alpha, beta in NUMERIC_SAMPLE_POINTS:
        diff = explicit_value(n, k, alpha, beta) - entry.evaluate({"a": alpha, "b": beta})
        if diff:
            return MultiPoly.const(diff.numerator)
    return ZERO


def _labeled_residual(n: int, k: int, table: GenStirlingTable) -> MultiPoly:
    scaled_entry = table.entry(n, k) * MultiPoly.var("b", k) * math.factorial(k)
    residual = enumerate_labeled_weight(n, k, nonempty_only=True) - scaled_entry
    if residual.is_zero:
        # the closed inclusion-exclusion numerator must agree as well
        residual = explicit_numerator(n, k) - scaled_entry
    return residual


@dataclass(frozen=True)
class IdentityDef:
    identity_id: str
    description: str
    rows_needed: Callable[[Params], int]
    check: Callable[[Params, GenStirlingTable], Union[MultiPoly, IdentityReport]]
    expected_failure: bool = False


def _route(fn: Callable[[int, int, GenStirlingTable], MultiPoly]) -> Callable[[Params, GenStirlingTable], MultiPoly]:
    def check(params: Params, table: GenStirlingTable) -> MultiPoly:
        n, k = params
        return fn(n, k, table) - table.entry(n, k)

    return check


REGISTRY: Tuple[IdentityDef, ...] = (
    IdentityDef(
        "eqh-single-list",
        "L(n, 1) equals prod_{j<n} (j a + b)",
        lambda p: p[0],
        lambda p, t: single_list(p[0]) - t.entry(p[0], 1),
    ),
    IdentityDef(
        "thm2-explicit",
        "inclusion-exclusion formula as an exact polynomial",
        lambda p: p[0],
        _route(lambda n, k, t: explicit_polynomial(n, k)),
    ),
    IdentityDef(
        "thm2-numeric",
        "inclusion-exclusion formula over the rationals at sample points with beta != 0",
        lambda p: p[0],
        lambda p, t: _numeric_explicit_residual(p[0], p[1], t),
    ),
    IdentityDef(
        "thm3-triangular",
        "triangular recurrence recomputed from the previous row",
        lambda p: p[0],
        _route(triangular_step),
    ),
    IdentityDef(
        "thm4-step",
        "one horizontal step L(n,k) = L(n+1,k+1) - ((k+1) b + n a) L(n,k+1)",
        lambda p: p[0] + 1,
        _route(horizontal_step),
    ),
    IdentityDef(
        "thm4-horizontal",
        "horizontal recurrence with raising increment b",
        lambda p: p[0] + 1,
        _route(lambda n, k, t: horizontal_expand(n, k, t, "corrected")),
    ),
    IdentityDef(
        "thm4-as-printed",
        "horizontal recurrence with raising increment a; fails from (2, 0) on",
        lambda p: p[0] + 1,
        _route(lambda n, k, t: horizontal_expand(n, k, t, "printed")),
        expected_failure=True,
    ),
    IdentityDef(
        "thm5-vertical",
        "vertical recurrence: binomial sum over column k gives L(n+1, k+1)",
        lambda p: p[0] + 1,
        lambda p, t: vertical_value(p[0], p[1], t) - t.entry(p[0] + 1, p[1] + 1),
    ),
    IdentityDef(
        "thm6-symmetric",
        "L(n, k) as a sum over non-decreasing chains (dynamic program)",
        lambda p: p[0],
        _route(lambda n, k, t: symmetric_formula(k, n - k)),
    ),
    IdentityDef(
        "thm7-multinomial",
        "multinomial convolution over compositions of n",
        lambda p: p[0],
        lambda p, t: check_multinomial_convolution(p[0], p[1:], t),
    ),
    IdentityDef(
        "thm8-convolution",
        "L(k+m, k) expanded s rows down through chain sums",
        lambda p: p[0] + p[1],
        lambda p, t: check_theorem8(p[0], p[1], p[2], t),
    ),
    IdentityDef(
        "connection",
        "(x|a) rising n = sum_k L(n,k) (x|b) falling k",
        lambda p: p[0],
        lambda p, t: connection_check(p[0], t),
    ),
    IdentityDef(
        "oracle",
        "brute-force weighted enumeration equals the triangle",
        lambda p: p[0],
        _route(lambda n, k, t: enumerate_weight(n, k)),
    ),
    IdentityDef(
        "oracle-labeled",
        "labeled-list enumeration equals k! b^k L(n, k) and the inclusion-exclusion numerator",
        lambda p: p[0],
        lambda p, t: _labeled_residual(p[0], p[1], t),
    ),
    IdentityDef(
        "profiles",
        "specialized triangles equal their classical references",
        lambda p: p[1],
        lambda p, t: check_profile(p[0], p[1], t if t.covers(p[1]) else None),
    ),
)

_BY_ID: Dict[str, IdentityDef] = {d.identity_id: d for d in REGISTRY}
_ORDER: Dict[str, int] = {d.identity_id: idx for idx, d in enumerate(REGISTRY)}
IDENTITY_IDS: Tuple[str, ...] = tuple(_BY_ID)


def get_identity(identity_id: str) -> IdentityDef:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise UnknownIdentity(f"Unknown identity {identity_id!r}; known: {', '.join(IDENTITY_IDS)}") from None


def _triangle(max_n: int, min_n: int = 0) -> List[Params]:
    return [(n, k) for n in range(min_n, max_n + 1) for k in range(n + 1)]


def default_ranges(
    max_n: int,
    max_parts: int = 3,
    oracle_max_n: int = 8,
    labeled_max_n: int = 5,
    include_printed: bool = False,
    only: Optional[Iterable[str]] = None,
    profile_specs: Sequence[str] = DEFAULT_PROFILE_SPECS,
) -> Dict[str, List[Params]]:
    """Parameter ranges for every registered identity, target entries up to row max_n."""
    if max_n < 0:
        return {}
    selected = None if only is None else list(only)
    if selected is not None:
        for identity_id in selected:
            get_identity(identity_id)

    ranges: Dict[str, List[Params]] = {
        "eqh-single-list": [(n,) for n in range(1, max_n + 1)],
        "thm2-explicit": _triangle(max_n),
        "thm2-numeric": _triangle(max_n),
        "thm3-triangular": _triangle(max_n),
        "thm4-step": _triangle(max_n),
        "thm4-horizontal": _triangle(max_n),
        "thm4-as-printed": _triangle(max_n),
        "thm5-vertical": _triangle(max_n - 1),
        "thm6-symmetric": _triangle(max_n),
        "thm7-multinomial": [
            (n,) + parts
            for n in range(max_n + 1)
            for p in range(1, max_parts + 1)
            for k in range(p, n + 1)
            for parts in positive_compositions(k, p)
        ],
        "thm8-convolution": [
            (k, m, s)
            for k in range(max_n + 1)
            for m in range(max_n + 1 - k)
            for s in range(min(k, m) + 1)
        ],
        "connection": [(n,) for n in range(max_n + 1)],
        "oracle": _triangle(min(max_n, oracle_max_n)),
        "oracle-labeled": _triangle(min(max_n, labeled_max_n)),
        "profiles": [(spec, max_n) for spec in profile_specs],
    }
    if selected is None:
        if not include_printed:
            ranges.pop("thm4-as-printed")
        return ranges
    return {identity_id: ranges[identity_id] for identity_id in IDENTITY_IDS if identity_id in selected}


def rows_needed(ranges: Ranges) -> int:
    """Largest table row any parameter tuple in ``ranges`` touches."""
    needed = 0
    for identity_id, param_list in ranges.items():
        definition = get_identity(identity_id)
        for params in param_list:
            needed = max(needed, definition.rows_needed(tuple(params)))
    return needed


def run_check(identity_id: str, params: Params, table: GenStirlingTable) -> IdentityReport:
    definition = get_identity(identity_id)
    params = tuple(params)
    outcome = definition.check(params, table)
    if isinstance(outcome, IdentityReport):
        residual, note = outcome.residual, outcome.note
    else:
        residual, note = outcome, ""
    return IdentityReport.from_residual(
        identity_id, params, residual, expected_failure=definition.expected_failure, note=note
    )


def run_suite(
    ranges: Ranges,
    table: GenStirlingTable,
    threads: int = 1,
    progress_callback: Optional[Callable[[str], None]] = None,
) -> List[IdentityReport]:
    """One report per parameter tuple per identity, sorted by (registry order, params)."""

    def _notify(stage: str) -> None:
        try:
            if progress_callback is not None:
                progress_callback(stage)
        except Exception:
            pass

    jobs = [(identity_id, tuple(params)) for identity_id, param_list in ranges.items() for params in param_list]
    if not jobs:
        return []
    table.require(rows_needed(ranges))
    logger.debug("running %d identity checks on %d thread(s)", len(jobs), threads)

    def _run(job: Tuple[str, Params]) -> IdentityReport:
        return run_check(job[0], job[1], table)

    reports: List[IdentityReport] = []
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for done, report in enumerate(pool.map(_run, jobs), start=1):
                reports.append(report)
                _notify(f"{report.identity_id} {done}/{len(jobs)}")
    else:
        for done, job in enumerate(jobs, start=1):
            reports.append(_run(job))
            _notify(f"{job[0]} {done}/{len(jobs)}")

    reports.sort(key=lambda r: (_ORDER[r.identity_id], r.params))
    return reports


def suite_exit_code(reports: Iterable[IdentityReport]) -> int:
    """0 iff every check that is not an expected failure passed."""
    return 1 if any(r.unexpected_failure for r in reports) else 0
