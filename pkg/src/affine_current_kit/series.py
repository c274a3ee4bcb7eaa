"""Truncated q-series with exact rational exponents."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, lcm
from typing import Iterable, Mapping

from . import kernels
from .errors import ValidationError

__all__ = ["CharSeries", "series_add", "series_mul", "series_sum"]

Rational = Fraction | int


@dataclass(frozen=True)
class CharSeries:
    """``sum c_e q^e`` known exactly for every exponent ``e <= order``.

    Terms above the truncation order are never stored.  Coefficients are
    nonnegative integers (these are graded dimensions).
    """

    order: Fraction
    terms: tuple[tuple[Fraction, int], ...]

    def __post_init__(self):
        order = Fraction(self.order)
        merged: dict[Fraction, int] = {}
        for e, c in self.terms:
            e = Fraction(e)
            if not isinstance(c, int):
                raise ValidationError(f"coefficient {c!r} is not an integer")
            if e <= order and c:
                merged[e] = merged.get(e, 0) + c
        if any(c < 0 for c in merged.values()):
            raise ValidationError("character coefficients must be nonnegative")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in merged.items() if c)))

    @classmethod
    def from_mapping(cls, coeffs: Mapping[Rational, int], order: Rational) -> "CharSeries":
        return cls(Fraction(order), tuple(coeffs.items()))

    @classmethod
    def monomial(cls, exponent: Rational, order: Rational, coeff: int = 1) -> "CharSeries":
        return cls(Fraction(order), ((Fraction(exponent), coeff),))

    @classmethod
    def one(cls, order: Rational) -> "CharSeries":
        return cls.monomial(0, order)

    @classmethod
    def zero(cls, order: Rational) -> "CharSeries":
        return cls(Fraction(order), ())

    @classmethod
    def from_integer_list(cls, coeffs: Iterable[int], order: Rational, offset: Rational = 0, step: Rational = 1):
        """``sum_i coeffs[i] q^(offset + i*step)``."""
        offset, step = Fraction(offset), Fraction(step)
        return cls(Fraction(order), tuple((offset + i * step, c) for i, c in enumerate(coeffs)))

    def as_dict(self) -> dict[Fraction, int]:
        return dict(self.terms)

    def coeff(self, exponent: Rational) -> int:
        exponent = Fraction(exponent)
        if exponent > self.order:
            raise ValidationError(f"exponent {exponent} lies beyond the truncation order {self.order}")
        return self.as_dict().get(exponent, 0)

    @property
    def lowest(self) -> Fraction | None:
        return self.terms[0][0] if self.terms else None

    def truncate(self, order: Rational) -> "CharSeries":
        order = Fraction(order)
        if order > self.order:
            raise ValidationError("cannot raise the truncation order of a series")
        return CharSeries(order, self.terms)

    def shift(self, exponent: Rational) -> "CharSeries":
        """Multiply by ``q^exponent``; the truncation order moves with it."""
        e0 = Fraction(exponent)
        return CharSeries(self.order + e0, tuple((e + e0, c) for e, c in self.terms))

    def scale(self, m: int) -> "CharSeries":
        return CharSeries(self.order, tuple((e, m * c) for e, c in self.terms))

    def __add__(self, other: "CharSeries") -> "CharSeries":
        return series_add(self, other)

    def __mul__(self, other: "CharSeries") -> "CharSeries":
        return series_mul(self, other)

    def to_json(self) -> dict:
        return {"order": self.order, "terms": [[e, c] for e, c in self.terms]}

    def to_text(self) -> str:
        if not self.terms:
            return f"0 + O(q^{self.order})"
        parts = []
        for e, c in self.terms:
            if e == 0:
                parts.append(str(c))
                continue
            mono = "q" if e == 1 else f"q^{e}" if e.denominator == 1 else f"q^({e})"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts) + f" + O(q^>{self.order})"


def series_add(a: CharSeries, b: CharSeries) -> CharSeries:
    order = min(a.order, b.order)
    return CharSeries(order, a.terms + b.terms)


def series_sum(items: Iterable[CharSeries], order: Rational) -> CharSeries:
    terms: list[tuple[Fraction, int]] = []
    order = Fraction(order)
    for s in items:
        if s.order < order:
            raise ValidationError("summand truncated below the requested order")
        terms.extend(s.terms)
    return CharSeries(order, tuple(terms))


def series_mul(a: CharSeries, b: CharSeries) -> CharSeries:
    """Exact product; the result is known up to ``min`` of the two orders.

    Both series are placed on a common grid ``q^(e0 + i/D)`` so the
    convolution runs on integer arrays.
    """
    if not a.terms or not b.terms:
        return CharSeries.zero(min(a.order, b.order))
    # A coefficient at e uses a-terms up to e - eb, so negative lowest
    # exponents shrink the range that is known exactly.
    ea, eb = a.terms[0][0], b.terms[0][0]
    order = min(a.order, b.order, a.order + eb, b.order + ea)
    den = lcm(*(e.denominator for e, _ in a.terms), *(e.denominator for e, _ in b.terms))
    span = (order - ea - eb) * den
    if span < 0:
        return CharSeries.zero(order)
    n = floor(span)
    va = [0] * (n + 1)
    vb = [0] * (n + 1)
    for e, c in a.terms:
        i = (e - ea) * den
        if i <= n:
            va[int(i)] = c
    for e, c in b.terms:
        i = (e - eb) * den
        if i <= n:
            vb[int(i)] = c
    prod = kernels.convolve(va, vb, n)
    base = ea + eb
    return CharSeries(order, tuple((base + Fraction(i, den), c) for i, c in enumerate(prod) if c))
