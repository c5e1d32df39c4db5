"""Exact sparse multivariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` values. A monomial is a sorted tuple of
``(variable, exponent)`` pairs with no zero exponents, so the empty tuple is the constant
monomial. Only the variable ``q`` may carry a negative exponent (Laurent support for
q-series); anywhere else a negative exponent is a construction error.

Polynomials are immutable and always stored in canonical form, which makes structural
equality the same thing as equality of polynomials.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from types import MappingProxyType
from typing import Union

Rational = Fraction
Monomial = tuple[tuple[str, int], ...]
Scalar = Union[int, Fraction]

LAURENT_VARIABLE = "q"


class KernelError(ArithmeticError):
    """Raised when an operation would leave the polynomial domain."""


# ── Monomials ────────────────────────────────────────────────────────────────


def make_monomial(exponents: Mapping[str, int]) -> Monomial:
    """Canonical monomial from a variable → exponent mapping (zero exponents dropped)."""
    mono = tuple(sorted((v, e) for v, e in exponents.items() if e))
    for name, exp in mono:
        if exp < 0 and name != LAURENT_VARIABLE:
            raise KernelError(f"negative exponent {exp} on variable {name!r}")
    return mono


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for name, exp in b:
        exps[name] = exps.get(name, 0) + exp
    return make_monomial(exps)


def _degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def _order_key(mono: Monomial) -> tuple:
    # total degree descending, then lex with x^2 > x*y > y^2
    return (-_degree(mono), tuple((v, -e) for v, e in mono))


# ── Polynomial ───────────────────────────────────────────────────────────────


class Polynomial:
    """Sparse polynomial: canonical monomial → nonzero Fraction."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None) -> None:
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            key = make_monomial(dict(mono))
            total = clean.get(key, 0) + Fraction(coeff)
            if total:
                clean[key] = total
            else:
                clean.pop(key, None)
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, terms: dict[Monomial, Fraction]) -> Polynomial:
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    # ── Inspection ───────────────────────────────────────────────────────

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def variables(self) -> frozenset[str]:
        return frozenset(v for mono in self._terms for v, _ in mono)

    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise KernelError(f"{self} is not a constant")
        return self._terms.get((), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({poly_to_string(self)!r})"

    def __str__(self) -> str:
        return poly_to_string(self)

    # ── Operators ────────────────────────────────────────────────────────

    def __add__(self, other: Polynomial | Scalar) -> Polynomial:
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return poly_neg(self)

    def __sub__(self, other: Polynomial | Scalar) -> Polynomial:
        return poly_sub(self, other)

    def __rsub__(self, other: Polynomial | Scalar) -> Polynomial:
        return poly_sub(as_polynomial(other), self)

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return poly_scale(self, other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        return poly_pow(self, exponent)


# ── Constructors ─────────────────────────────────────────────────────────────


def const(value: Scalar) -> Polynomial:
    value = Fraction(value)
    return Polynomial._wrap({(): value} if value else {})


def var(name: str) -> Polynomial:
    return Polynomial._wrap({((name, 1),): Fraction(1)})


def monomial_poly(exponents: Mapping[str, int], coeff: Scalar = 1) -> Polynomial:
    coeff = Fraction(coeff)
    if not coeff:
        return ZERO
    return Polynomial._wrap({make_monomial(exponents): coeff})


def as_polynomial(value: Polynomial | Scalar) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return const(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a polynomial")


ZERO = Polynomial._wrap({})
ONE = Polynomial._wrap({(): Fraction(1)})


# ── Arithmetic ───────────────────────────────────────────────────────────────


def poly_add(a: Polynomial | Scalar, b: Polynomial | Scalar) -> Polynomial:
    a, b = as_polynomial(a), as_polynomial(b)
    if not b._terms:
        return a
    if not a._terms:
        return b
    out = dict(a._terms)
    for mono, coeff in b._terms.items():
        total = out.get(mono, 0) + coeff
        if total:
            out[mono] = total
        else:
            del out[mono]
    return Polynomial._wrap(out)


def poly_neg(a: Polynomial) -> Polynomial:
    return Polynomial._wrap({m: -c for m, c in a._terms.items()})


def poly_sub(a: Polynomial | Scalar, b: Polynomial | Scalar) -> Polynomial:
    return poly_add(a, poly_neg(as_polynomial(b)))


def poly_scale(a: Polynomial, c: Scalar) -> Polynomial:
    c = Fraction(c)
    if not c:
        return ZERO
    return Polynomial._wrap({m: v * c for m, v in a._terms.items()})


def poly_mul(a: Polynomial | Scalar, b: Polynomial | Scalar) -> Polynomial:
    """Distributive product; raises KernelError on a negative non-q exponent."""
    a, b = as_polynomial(a), as_polynomial(b)
    out: dict[Monomial, Fraction] = {}
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            mono = _mono_mul(ma, mb)
            total = out.get(mono, 0) + ca * cb
            if total:
                out[mono] = total
            else:
                del out[mono]
    return Polynomial._wrap(out)


def poly_pow(a: Polynomial, e: int) -> Polynomial:
    """a**e for e >= 0, with a**0 == 1 even for the zero polynomial."""
    if not isinstance(e, int) or e < 0:
        raise ValueError(f"exponent must be a nonnegative integer, got {e!r}")
    result, base = ONE, a
    while e:
        if e & 1:
            result = poly_mul(result, base)
        e >>= 1
        if e:
            base = poly_mul(base, base)
    return result


def poly_sum(polys: Iterable[Polynomial | Scalar]) -> Polynomial:
    out: dict[Monomial, Fraction] = {}
    for poly in polys:
        for mono, coeff in as_polynomial(poly)._terms.items():
            total = out.get(mono, 0) + coeff
            if total:
                out[mono] = total
            else:
                del out[mono]
    return Polynomial._wrap(out)


# ── Evaluation & substitution ────────────────────────────────────────────────


def poly_eval(a: Polynomial, assignment: Mapping[str, Scalar]) -> Fraction:
    """Exact value of *a* under *assignment*.

    Raises KernelError for an unassigned variable and ZeroDivisionError when q = 0
    meets a negative exponent.
    """
    total = Fraction(0)
    for mono, coeff in a._terms.items():
        value = coeff
        for name, exp in mono:
            if name not in assignment:
                raise KernelError(f"no value assigned to variable {name!r}")
            value *= Fraction(assignment[name]) ** exp
        total += value
    return total


def poly_substitute(a: Polynomial, mapping: Mapping[str, Polynomial | Scalar]) -> Polynomial:
    """Replace variables by polynomials.

    A negative exponent can only be substituted by a nonzero constant.
    """
    replacements = {name: as_polynomial(value) for name, value in mapping.items()}
    pieces: list[Polynomial] = []
    for mono, coeff in a._terms.items():
        piece = const(coeff)
        kept: dict[str, int] = {}
        for name, exp in mono:
            if name not in replacements:
                kept[name] = exp
                continue
            rep = replacements[name]
            if exp >= 0:
                piece = poly_mul(piece, poly_pow(rep, exp))
            elif rep.is_constant() and rep:
                piece = poly_scale(piece, rep.constant_value() ** exp)
            else:
                raise KernelError(f"cannot substitute {rep} for {name}^{exp}")
        pieces.append(poly_mul(piece, monomial_poly(kept)))
    return poly_sum(pieces)


# ── Rendering ────────────────────────────────────────────────────────────────


def _render_monomial(mono: Monomial) -> str:
    return "*".join(name if exp == 1 else f"{name}^{exp}" for name, exp in mono)


def poly_to_string(a: Polynomial) -> str:
    """Stable text form, e.g. ``3/2*x^2*y - z``.

    Terms are ordered by total degree descending, ties lexicographically (x^2 before
    x*y before y^2); the zero polynomial prints as ``0``.
    """
    if not a._terms:
        return "0"
    parts: list[str] = []
    for mono in sorted(a._terms, key=_order_key):
        coeff = a._terms[mono]
        magnitude = abs(coeff)
        if not mono:
            body = str(magnitude)
        elif magnitude == 1:
            body = _render_monomial(mono)
        else:
            body = f"{magnitude}*{_render_monomial(mono)}"
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f" {'-' if coeff < 0 else '+'} {body}")
    return "".join(parts)
