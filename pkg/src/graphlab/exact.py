"""Exact arithmetic for index values: rationals, sums of square roots, decimals.

Index computations stay in exact arithmetic end to end.  Three value shapes
occur: plain integers, rationals, and finite sums of rational multiples of
square roots of squarefree integers (as produced by Randic- and Balaban-type
edge sums).  All of them are kept canonical so that equality is literal
structural equality; decimal strings are derived on demand and are correctly
rounded (round half to even).
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from math import isqrt
from typing import Iterator, Mapping, Union

Q = Fraction  # rational shorthand

#: Anything the index engine may return.
Value = Union[int, Fraction, "RadicalSum"]


def sqf_decompose(m: int) -> tuple[int, int]:
    """Split m >= 1 into (c, d) with m = c*c*d and d squarefree.

    Trial division up to sqrt(m); inputs here are small (products of at most
    two vertex transmissions or degrees).
    """
    if m < 1:
        raise ValueError(f"expected a positive integer, got {m!r}")
    c, d = 1, 1
    rem = m
    f = 2
    while f * f <= rem:
        if rem % f == 0:
            e = 0
            while rem % f == 0:
                rem //= f
                e += 1
            c *= f ** (e // 2)
            if e % 2:
                d *= f
        f += 1 if f == 2 else 2
    return c, d * rem  # leftover rem is 1 or prime


class RadicalSum:
    """Canonical finite sum  sum_d q_d * sqrt(d)  with squarefree d and q_d != 0.

    The radicand 1 carries the rational part.  Squarefree radicands are
    linearly independent over the rationals, so two sums are equal exactly
    when their canonical term maps are identical; __eq__ relies on that.
    Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Fraction | int] | None = None):
        folded: dict[int, Fraction] = {}
        if terms:
            for rad, coef in terms.items():
                coef = Fraction(coef)
                if coef == 0:
                    continue
                c, d = sqf_decompose(rad)
                folded[d] = folded.get(d, Fraction(0)) + coef * c
        object.__setattr__(
            self, "_terms", {d: q for d, q in sorted(folded.items()) if q != 0}
        )

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RadicalSum is immutable")

    @classmethod
    def from_value(cls, v: Value) -> "RadicalSum":
        """Promote an int, Fraction, or RadicalSum to a RadicalSum."""
        if isinstance(v, RadicalSum):
            return v
        return cls({1: Fraction(v)})

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        """Canonical (radicand, coefficient) pairs, radicand ascending."""
        return tuple(self._terms.items())

    def coefficient(self, radicand: int) -> Fraction:
        return self._terms.get(radicand, Fraction(0))

    def is_rational(self) -> bool:
        return all(d == 1 for d in self._terms)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self._terms.get(1, Fraction(0))

    def __add__(self, other: "RadicalSum | Fraction | int") -> "RadicalSum":
        if isinstance(other, RadicalSum):
            merged = dict(self._terms)
            for d, q in other._terms.items():
                merged[d] = merged.get(d, Fraction(0)) + q
            return RadicalSum(merged)
        if isinstance(other, (int, Fraction)):
            return self + RadicalSum.from_value(other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "RadicalSum":
        return RadicalSum({d: -q for d, q in self._terms.items()})

    def __sub__(self, other: "RadicalSum | Fraction | int") -> "RadicalSum":
        if isinstance(other, (RadicalSum, int, Fraction)):
            return self + (-RadicalSum.from_value(other))
        return NotImplemented

    def __rsub__(self, other: "Fraction | int") -> "RadicalSum":
        return RadicalSum.from_value(other) + (-self)

    def __mul__(self, other: "RadicalSum | Fraction | int") -> "RadicalSum":
        """Product; sqrt(a)*sqrt(b) folds through squarefree decomposition."""
        if isinstance(other, (int, Fraction)):
            return RadicalSum({d: q * other for d, q in self._terms.items()})
        if isinstance(other, RadicalSum):
            out: dict[int, Fraction] = {}
            for da, qa in self._terms.items():
                for db, qb in other._terms.items():
                    c, d = sqf_decompose(da * db)
                    out[d] = out.get(d, Fraction(0)) + qa * qb * c
            return RadicalSum(out)
        return NotImplemented

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RadicalSum):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == RadicalSum.from_value(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.as_fraction())
        return hash(self.terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for d, q in self._terms.items():
            mag = -q if q < 0 else q
            body = str(mag) if d == 1 else (
                f"sqrt({d})" if mag == 1 else f"{mag}*sqrt({d})"
            )
            if not parts:
                parts.append(f"-{body}" if q < 0 else body)
            else:
                parts.append(f"- {body}" if q < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        inner = ", ".join(f"{d}: {q!r}" for d, q in self._terms.items())
        return f"RadicalSum({{{inner}}})"


def inv_sqrt(q: Fraction | int) -> RadicalSum:
    """1/sqrt(q) for rational q > 0, rationalized: sqrt(ab)/a for q = a/b."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError(f"expected a positive rational, got {q}")
    a, b = q.numerator, q.denominator
    return RadicalSum({a * b: Fraction(1, a)})


def normalize(v: Value) -> Value:
    """Collapse a value to its most constrained shape (radical -> rational -> int)."""
    if isinstance(v, RadicalSum) and v.is_rational():
        v = v.as_fraction()
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def values_equal(a: Value, b: Value) -> bool:
    """Exact equality across the three value shapes."""
    if isinstance(a, RadicalSum) or isinstance(b, RadicalSum):
        return RadicalSum.from_value(a) == RadicalSum.from_value(b)
    return a == b


def _round_half_even(num: int, den: int) -> int:
    """Nearest integer to num/den (den > 0), ties to even."""
    q, r = divmod(num, den)
    if 2 * r > den or (2 * r == den and q % 2):
        q += 1
    return q


def _format_scaled(scaled: int, digits: int) -> str:
    sign = "-" if scaled < 0 else ""
    ip, fp = divmod(abs(scaled), 10**digits)
    return f"{sign}{ip}.{str(fp).zfill(digits)}"


def _radical_scaled(v: RadicalSum, digits: int) -> int:
    """Correctly rounded integer of v * 10**digits via guarded Decimal evaluation."""
    bound = sum(abs(q) * (isqrt(d) + 1) for d, q in v.terms) + 1
    with localcontext() as ctx:
        ctx.prec = digits + len(str(int(bound))) + 25
        total = Decimal(0)
        for d, q in v.terms:
            root = Decimal(1) if d == 1 else Decimal(d).sqrt()
            total += Decimal(q.numerator) / Decimal(q.denominator) * root
        scaled = total.scaleb(digits)
        return int(scaled.to_integral_value(rounding="ROUND_HALF_EVEN"))


def to_decimal(v: Value, digits: int = 6) -> str:
    """Decimal string of v with `digits` fractional digits, round half to even.

    Integers print bare ("37"); rationals and radicals print fixed point
    ("23.500").  For radicals the result is within one unit in the last place
    of the true value (25 guard digits make a rounding flip practically
    impossible for the magnitudes produced here).
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    v = normalize(v)
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        scaled = _round_half_even(v.numerator * 10**digits, v.denominator)
        return _format_scaled(scaled, digits)
    return _format_scaled(_radical_scaled(v, digits), digits)


def value_to_json(v: Value) -> dict | None:
    """Canonical JSON form of a value; None passes through (unparsed claims)."""
    if v is None:
        return None
    v = normalize(v)
    if isinstance(v, int):
        return {"kind": "integer", "value": str(v)}
    if isinstance(v, Fraction):
        return {"kind": "rational", "num": str(v.numerator), "den": str(v.denominator)}
    return {
        "kind": "radical",
        "terms": [
            {"num": str(q.numerator), "den": str(q.denominator), "radicand": d}
            for d, q in v.terms
        ],
        "approx": to_decimal(v, 6),
    }


def value_from_json(obj: dict | None) -> Value | None:
    """Inverse of value_to_json (the derived approx field is ignored)."""
    if obj is None:
        return None
    kind = obj["kind"]
    if kind == "integer":
        return int(obj["value"])
    if kind == "rational":
        return normalize(Fraction(int(obj["num"]), int(obj["den"])))
    if kind == "radical":
        return normalize(
            RadicalSum(
                {t["radicand"]: Fraction(int(t["num"]), int(t["den"])) for t in obj["terms"]}
            )
        )
    raise ValueError(f"unknown value kind {kind!r}")


def format_value(v: Value | None) -> str:
    """Compact exact rendering for tables: 37, 47/2, 23/14 + 6/7*sqrt(7)."""
    if v is None:
        return "unparsed"
    return str(normalize(v))
