"""Specialization profiles: concrete (alpha, beta) that collapse the generic triangle
onto a classical one, each paired with an independent reference computation."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple, Union

from .errors import UnknownProfile
from .factorials import binomial, falling
from .polycore import MultiPoly, parse_rational
from .report import IdentityReport
from .stirling import GenStirlingTable, NumericTriangle, numeric_table

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


@dataclass(frozen=True)
class SpecializationProfile:
    name: str
    alpha: Fraction
    beta: Fraction
    reference_recurrence: str
    parameter: Optional[Fraction] = None

    @property
    def label(self) -> str:
        return self.name if self.parameter is None else f"{self.name}:{self.parameter}"

    @property
    def point(self) -> Dict[str, Fraction]:
        return {"a": self.alpha, "b": self.beta}


# name -> (alpha, beta, reference) for fixed profiles
_FIXED: Dict[str, Tuple[int, int, str]] = {
    "stirling1": (1, 0, "stirling1"),
    "stirling2": (0, 1, "stirling2"),
    "lah": (1, 1, "lah"),
}

# name -> parameter -> (alpha, beta, reference)
_PARAMETRIC: Dict[str, Callable[[Fraction], Tuple[Fraction, Fraction, str]]] = {
    "whitney1": lambda m: (m, Fraction(0), "stirling1-scaled"),
    "whitney2": lambda m: (Fraction(0), m, "stirling2-scaled"),
    "whitney_lah": lambda m: (m, m, "lah-scaled"),
    "degenerate2": lambda lam: (-lam, Fraction(1), "degenerate-explicit"),
    "degenerate1": lambda lam: (Fraction(-1), lam, "degenerate-first-kind"),
}

PROFILE_NAMES: Tuple[str, ...] = tuple(_FIXED) + tuple(_PARAMETRIC)


def get_profile(spec: str) -> SpecializationProfile:
    """Resolve ``name`` or ``name:param`` (param a rational such as ``2`` or ``-1/2``)."""
    name, _, raw_param = (spec or "").strip().partition(":")
    name = name.strip().lower()
    if name in _FIXED:
        if raw_param:
            raise UnknownProfile(f"Profile {name!r} takes no parameter")
        alpha, beta, reference = _FIXED[name]
        return SpecializationProfile(name, Fraction(alpha), Fraction(beta), reference)
    if name in _PARAMETRIC:
        if not raw_param:
            raise UnknownProfile(f"Profile {name!r} needs a parameter, e.g. {name}:2")
        parameter = parse_rational(raw_param)
        alpha, beta, reference = _PARAMETRIC[name](parameter)
        return SpecializationProfile(name, alpha, beta, reference, parameter)
    raise UnknownProfile(f"Unknown profile {spec!r}; known: {', '.join(PROFILE_NAMES)}")


def _resolve(profile: Union[SpecializationProfile, str]) -> SpecializationProfile:
    return profile if isinstance(profile, SpecializationProfile) else get_profile(profile)


def specialize(
    profile: Union[SpecializationProfile, str],
    n_max: int,
    table: Optional[GenStirlingTable] = None,
) -> NumericTriangle:
    """Numeric triangle of the profile up to row n_max.

    Evaluates the polynomial table when one covering n_max is given, otherwise
    runs the recurrence numerically (same values by the evaluation homomorphism).
    """
    profile = _resolve(profile)
    if table is not None and table.covers(n_max):
        point = profile.point
        return tuple(tuple(value.evaluate(point) for value in table.row(n)) for n in range(n_max + 1))
    return numeric_table(profile.alpha, profile.beta, n_max)


def _classical(kind: str, n_max: int) -> List[List[int]]:
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            carried = prev[k] if k <= n - 1 else 0
            if kind == "stirling1":
                weight = n - 1
            elif kind == "stirling2":
                weight = k
            else:
                weight = n + k - 1
            row[k] = prev[k - 1] + weight * carried
        rows.append(row)
    return rows


def _degenerate_explicit(lam: Fraction, n_max: int) -> List[List[Fraction]]:
    """(1/k!) sum_j (-1)^(k-j) C(k, j) (j | lam)_n with the falling factorial."""
    rows = []
    for n in range(n_max + 1):
        row = []
        for k in range(n + 1):
            total = Fraction(0)
            for j in range(k + 1):
                term = binomial(k, j) * falling(Fraction(j), lam, n)
                total += term if (k - j) % 2 == 0 else -term
            row.append(total / math.factorial(k))
        rows.append(row)
    return rows


def _falling_coefficients(step: Fraction, k: int) -> List[Fraction]:
    """Coefficients in x, lowest degree first, of x(x - step)...(x - (k-1) step)."""
    coeffs = [Fraction(1)]
    for i in range(k):
        shift = -step * i
        coeffs = [Fraction(0)] + coeffs
        for d in range(len(coeffs) - 1):
            coeffs[d] += shift * coeffs[d + 1]
    return coeffs


def _degenerate_first_kind(lam: Fraction, n_max: int) -> List[List[Fraction]]:
    """Coordinates of (x)_n (step 1) in the basis (x | lam)_k of step-lam falling factorials.

    Each basis polynomial is monic of degree k, so the leading coefficient is peeled off
    from the top degree down.
    """
    basis = [_falling_coefficients(lam, k) for k in range(n_max + 1)]
    rows = []
    for n in range(n_max + 1):
        remainder = _falling_coefficients(Fraction(1), n)
        row = [Fraction(0)] * (n + 1)
        for k in range(n, -1, -1):
            coefficient = remainder[k]
            row[k] = coefficient
            if coefficient:
                for d, c in enumerate(basis[k]):
                    remainder[d] -= coefficient * c
        rows.append(row)
    return rows


def reference_triangle(profile: Union[SpecializationProfile, str], n_max: int) -> List[List[Number]]:
    """The profile's triangle computed from its own classical definition."""
    profile = _resolve(profile)
    ref = profile.reference_recurrence
    if ref in ("stirling1", "stirling2", "lah"):
        return _classical(ref, n_max)  # type: ignore[return-value]
    if ref.endswith("-scaled"):
        m = profile.parameter
        base = _classical(ref[: -len("-scaled")], n_max)
        return [[value * m ** (n - k) for k, value in enumerate(row)] for n, row in enumerate(base)]
    if ref == "degenerate-explicit":
        return _degenerate_explicit(profile.parameter, n_max)  # type: ignore[return-value]
    if ref == "degenerate-first-kind":
        return _degenerate_first_kind(profile.parameter, n_max)  # type: ignore[return-value]
    raise UnknownProfile(f"No reference computation {ref!r}")


def check_profile(
    profile: Union[SpecializationProfile, str],
    n_max: int,
    table: Optional[GenStirlingTable] = None,
) -> IdentityReport:
    """Compare the specialized triangle with the reference, entry by entry.

    The residual is the numerator of the first differing entry, zero when all agree.
    """
    profile = _resolve(profile)
    values = specialize(profile, n_max, table)
    reference = reference_triangle(profile, n_max)
    for n in range(n_max + 1):
        for k in range(n + 1):
            diff = Fraction(values[n][k]) - Fraction(reference[n][k])
            if diff:
                logger.debug("profile %s disagrees at (%d, %d): %s", profile.label, n, k, diff)
                return IdentityReport.from_residual(
                    "profiles",
                    (profile.label, n_max),
                    MultiPoly.const(diff.numerator),
                    note=f"first mismatch at ({n}, {k}): difference {diff}",
                )
    return IdentityReport.from_residual("profiles", (profile.label, n_max), MultiPoly.zero())
