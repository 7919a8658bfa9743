"""Exact sparse polynomials in the three fixed variables a (alpha), b (beta) and x.

A polynomial is a canonical tuple of ``(monomial, coefficient)`` pairs where a
monomial is the exponent triple ``(deg_a, deg_b, deg_x)`` and every coefficient
is a nonzero Python ``int``. Terms are kept in descending graded-lexicographic
order, so two polynomials are equal iff their term tuples are identical and
the string/JSON forms are reproducible byte-for-byte.

  2*a^2 + 3*a*b + b^2  ->  (((2, 0, 0), 2), ((1, 1, 0), 3), ((0, 2, 0), 1))

Rationals (``fractions.Fraction``) only appear at evaluation boundaries.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Tuple, Union

from .errors import DivisorZero, MissingAssignment, NotDivisible, ParseError

Monomial = Tuple[int, int, int]
Term = Tuple[Monomial, int]
Rational = Fraction
Number = Union[int, Fraction]

VARIABLES: Tuple[str, str, str] = ("a", "b", "x")
_VAR_INDEX = {name: idx for idx, name in enumerate(VARIABLES)}

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def var_index(name: str) -> int:
    """Map a variable name (``a``/``b``/``x``, case-insensitive) to its exponent slot."""
    try:
        return _VAR_INDEX[name.lower()]
    except (KeyError, AttributeError):
        raise ValueError(f"Unknown variable {name!r}; expected one of a, b, x") from None


def _grlex_key(mono: Monomial) -> Tuple[int, Monomial]:
    return (sum(mono), mono)


def _from_mapping(merged: Mapping[Monomial, int]) -> Tuple[Term, ...]:
    kept = [(mono, coeff) for mono, coeff in merged.items() if coeff != 0]
    kept.sort(key=lambda term: _grlex_key(term[0]), reverse=True)
    return tuple(kept)


def _canonical(items: Iterable[Tuple[Iterable[int], Any]]) -> Tuple[Term, ...]:
    merged: Dict[Monomial, int] = {}
    for mono, coeff in items:
        key = tuple(operator.index(e) for e in mono)
        if len(key) != 3 or any(e < 0 for e in key):
            raise ValueError(f"Invalid monomial exponents {key!r}")
        merged[key] = merged.get(key, 0) + operator.index(coeff)  # type: ignore[index]
    return _from_mapping(merged)


@dataclass(frozen=True)
class MultiPoly:
    """Immutable canonical polynomial with arbitrary-precision integer coefficients."""

    terms: Tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", _canonical(self.terms))

    # ---------- construction ----------
    @classmethod
    def _wrap(cls, terms: Tuple[Term, ...]) -> "MultiPoly":
        poly = object.__new__(cls)
        object.__setattr__(poly, "terms", terms)
        return poly

    @classmethod
    def from_dict(cls, mapping: Mapping[Monomial, int]) -> "MultiPoly":
        return cls(tuple(mapping.items()))

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls._wrap(())

    @classmethod
    def const(cls, value: int) -> "MultiPoly":
        value = operator.index(value)
        return cls._wrap((((0, 0, 0), value),) if value else ())

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        exps = [0, 0, 0]
        exps[var_index(name)] = power
        return cls(((tuple(exps), 1),))

    @classmethod
    def coerce(cls, value: Union["MultiPoly", int]) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        return cls.const(value)

    # ---------- inspection ----------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def as_dict(self) -> Dict[Monomial, int]:
        return dict(self.terms)

    def coefficient(self, mono: Monomial) -> int:
        return self.as_dict().get(tuple(mono), 0)  # type: ignore[arg-type]

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(mono) for mono, _ in self.terms)

    def degree_in(self, name: str) -> int:
        idx = var_index(name)
        return max((mono[idx] for mono, _ in self.terms), default=0)

    def variables(self) -> Tuple[str, ...]:
        used = {idx for mono, _ in self.terms for idx, e in enumerate(mono) if e}
        return tuple(VARIABLES[idx] for idx in sorted(used))

    def is_homogeneous(self, degree: int, over: Iterable[str] = ("a", "b")) -> bool:
        slots = [var_index(name) for name in over]
        return all(sum(mono[i] for i in slots) == degree for mono, _ in self.terms)

    def has_nonnegative_coefficients(self) -> bool:
        return all(coeff > 0 for _, coeff in self.terms)

    # ---------- arithmetic ----------
    def __add__(self, other: Any) -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        merged = dict(self.terms)
        for mono, coeff in other.terms:
            merged[mono] = merged.get(mono, 0) + coeff
        return MultiPoly._wrap(_from_mapping(merged))

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._wrap(tuple((mono, -coeff) for mono, coeff in self.terms))

    def __sub__(self, other: Any) -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly.const(other) - self
        return NotImplemented

    def scale(self, factor: int) -> "MultiPoly":
        factor = operator.index(factor)
        if factor == 0:
            return MultiPoly.zero()
        return MultiPoly._wrap(tuple((mono, coeff * factor) for mono, coeff in self.terms))

    def __mul__(self, other: Any) -> "MultiPoly":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return MultiPoly.zero()
        out: Dict[Monomial, int] = {}
        for (a1, b1, x1), c1 in self.terms:
            for (a2, b2, x2), c2 in other.terms:
                key = (a1 + a2, b1 + b2, x1 + x2)
                out[key] = out.get(key, 0) + c1 * c2
        return MultiPoly._wrap(_from_mapping(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        exponent = operator.index(exponent)
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        result = MultiPoly.const(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        # constants hash like the int they compare equal to
        if not self.terms:
            return hash(0)
        if len(self.terms) == 1 and self.terms[0][0] == (0, 0, 0):
            return hash(self.terms[0][1])
        return hash(self.terms)

    # ---------- exact division ----------
    def exact_div_int(self, divisor: int) -> "MultiPoly":
        divisor = operator.index(divisor)
        if divisor == 0:
            raise DivisorZero("Division of a polynomial by 0")
        out = []
        for mono, coeff in self.terms:
            quotient, remainder = divmod(coeff, divisor)
            if remainder:
                raise NotDivisible(f"Coefficient {coeff} of {_format_monomial(mono) or '1'} is not a multiple of {divisor}")
            out.append((mono, quotient))
        return MultiPoly._wrap(_from_mapping(dict(out)))

    def exact_div_var_power(self, name: str, exponent: int) -> "MultiPoly":
        idx = var_index(name)
        exponent = operator.index(exponent)
        if exponent < 0:
            raise ValueError("Exponent must be non-negative")
        if exponent == 0:
            return self
        out: Dict[Monomial, int] = {}
        for mono, coeff in self.terms:
            if mono[idx] < exponent:
                raise NotDivisible(f"Term {_format_monomial(mono) or '1'} has {VARIABLES[idx]}-degree below {exponent}")
            exps = list(mono)
            exps[idx] -= exponent
            out[tuple(exps)] = coeff  # type: ignore[index]
        return MultiPoly._wrap(_from_mapping(out))

    # ---------- evaluation ----------
    def evaluate(self, at: Mapping[str, Any]) -> Fraction:
        values: Dict[int, Fraction] = {var_index(name): Fraction(value) for name, value in at.items()}
        missing = [name for name in self.variables() if var_index(name) not in values]
        if missing:
            raise MissingAssignment(f"No value assigned to variable(s): {', '.join(missing)}")
        total = Fraction(0)
        for mono, coeff in self.terms:
            term = Fraction(coeff)
            for idx, e in enumerate(mono):
                if e:
                    term *= values[idx] ** e
            total += term
        return total

    # ---------- serialization ----------
    def to_str(self) -> str:
        if not self.terms:
            return "0"
        pieces: List[str] = []
        for position, (mono, coeff) in enumerate(self.terms):
            body = _format_monomial(mono)
            magnitude = abs(coeff)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            if position == 0:
                pieces.append(text if coeff > 0 else f"-{text}")
            else:
                pieces.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_str()!r})"

    def to_json(self) -> List[Dict[str, Any]]:
        return [{"a": a, "b": b, "x": x, "c": str(coeff)} for (a, b, x), coeff in self.terms]

    @classmethod
    def from_json(cls, data: Iterable[Mapping[str, Any]]) -> "MultiPoly":
        items = []
        for entry in data:
            mono = (int(entry.get("a", 0)), int(entry.get("b", 0)), int(entry.get("x", 0)))
            items.append((mono, int(entry["c"])))
        return cls(tuple(items))

    def to_sympy(self):
        """Return the equivalent sympy expression (symbols a, b, x)."""
        import sympy

        symbols = sympy.symbols("a b x")
        expr = sympy.Integer(0)
        for mono, coeff in self.terms:
            term = sympy.Integer(coeff)
            for sym, e in zip(symbols, mono):
                if e:
                    term *= sym**e
            expr += term
        return expr


def _format_monomial(mono: Monomial) -> str:
    parts = []
    for name, e in zip(VARIABLES, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


A = MultiPoly.var("a")
B = MultiPoly.var("b")
X = MultiPoly.var("x")
ONE = MultiPoly.const(1)
ZERO = MultiPoly.zero()


def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def poly_eval(p: MultiPoly, at: Mapping[str, Any]) -> Fraction:
    return p.evaluate(at)


def poly_exact_div_int(p: MultiPoly, c: int) -> MultiPoly:
    return p.exact_div_int(c)


def poly_exact_div_var_power(p: MultiPoly, v: str, e: int) -> MultiPoly:
    return p.exact_div_var_power(v, e)


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or ``p`` with an optional sign into a reduced Fraction."""
    match = _RATIONAL_RE.match(text or "")
    if not match:
        raise ParseError(f"Malformed rational {text!r}; expected p or p/q")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ParseError(f"Zero denominator in {text!r}")
    return Fraction(numerator, denominator)
