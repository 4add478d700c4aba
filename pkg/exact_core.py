"""Exakte Grundarithmetik: Brueche, Fakultaeten und Vergleich von Potenzprodukten.

Potenzprodukte der Form b1^e1 * b2^e2 * ... (ganze Basen, rationale Exponenten)
werden ohne Gleitkomma-Urteil verglichen: zuerst eine Intervall-Trennung mit
mpmath, bei Ueberlappung exaktes Hochpotenzieren auf ganze Zahlen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Mapping

from mpmath.ctx_iv import MPIntervalContext
from mpmath.ctx_mp import MPContext

Integer = int
Rational = Fraction
Ordering = Literal["LT", "EQ", "GT"]

INTERVAL_DPS = 200
HINT_DIGITS = 30

_IV = MPIntervalContext()
_IV.dps = INTERVAL_DPS
_HINT = MPContext()


class InvalidFractionError(ValueError):
    pass


def make_rational(num: Integer, den: Integer) -> Rational:
    if den == 0:
        raise InvalidFractionError(f"Ungueltiger Bruch: Nenner 0 (Zaehler {num})")
    return Fraction(num, den)


def factorial(n: int) -> Integer:
    if n < 0:
        raise ValueError(f"factorial erwartet n >= 0, erhalten: {n}")
    return math.factorial(n)


def semifactorial(s: int) -> Integer:
    """(2s-1)!! = (2s-1)(2s-3)...3*1, fuer s = 0 gleich 1."""
    if s < 0:
        raise ValueError(f"semifactorial erwartet s >= 0, erhalten: {s}")
    return math.prod(range(1, 2 * s, 2))


def gcd(a: Integer, b: Integer) -> Integer:
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) ist nicht definiert")
    return math.gcd(a, b)


def _as_fraction(value: Fraction | int) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"Exponent muss int oder Fraction sein, erhalten: {type(value).__name__}")


@dataclass(frozen=True)
class PowerProduct:
    """Positives Produkt von Basen >= 2 mit rationalen Exponenten ungleich 0."""

    factors: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self) -> None:
        previous = 1
        for base, exponent in self.factors:
            if base <= previous:
                raise ValueError(f"Basen muessen >= 2 und aufsteigend eindeutig sein: {self.factors}")
            if exponent == 0:
                raise ValueError(f"Exponent 0 fuer Basis {base} nicht erlaubt")
            previous = base

    @classmethod
    def of(cls, mapping: Mapping[int, Fraction | int] | Iterable[tuple[int, Fraction | int]]) -> PowerProduct:
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        merged: dict[int, Fraction] = {}
        for base, exponent in items:
            if base <= 0:
                raise ValueError(f"Basis muss positiv sein, erhalten: {base}")
            if base == 1:
                continue
            merged[base] = merged.get(base, Fraction(0)) + _as_fraction(exponent)
        return cls(tuple((base, merged[base]) for base in sorted(merged) if merged[base] != 0))

    @classmethod
    def one(cls) -> PowerProduct:
        return cls()

    @classmethod
    def from_rational(cls, value: Rational | int) -> PowerProduct:
        q = _as_fraction(value)
        if q <= 0:
            raise ValueError(f"Nur positive Werte darstellbar, erhalten: {q}")
        return cls.of([(q.numerator, 1), (q.denominator, -1)])

    def __mul__(self, other: PowerProduct) -> PowerProduct:
        if not isinstance(other, PowerProduct):
            return NotImplemented
        return PowerProduct.of([*self.factors, *other.factors])

    def __truediv__(self, other: PowerProduct) -> PowerProduct:
        if not isinstance(other, PowerProduct):
            return NotImplemented
        return PowerProduct.of([*self.factors, *((base, -exponent) for base, exponent in other.factors)])

    def __pow__(self, exponent: Fraction | int) -> PowerProduct:
        power = _as_fraction(exponent)
        return PowerProduct.of([(base, e * power) for base, e in self.factors])

    def exponent_lcm(self) -> int:
        return math.lcm(*(exponent.denominator for _, exponent in self.factors)) if self.factors else 1

    def cleared(self) -> tuple[int, int, int]:
        """(L, Zaehler, Nenner) mit Wert^L = Zaehler / Nenner, beide ganz."""
        power = self.exponent_lcm()
        numerator = 1
        denominator = 1
        for base, exponent in self.factors:
            k = int(exponent * power)
            if k > 0:
                numerator *= base**k
            else:
                denominator *= base ** (-k)
        return power, numerator, denominator

    def decimal_hint(self, digits: int = HINT_DIGITS) -> str:
        """Nur zur Anzeige; Entscheidungen laufen ueber compare_power_products."""
        with _HINT.workdps(digits + 10):
            log_value = _HINT.mpf(0)
            for base, exponent in self.factors:
                log_value += _HINT.log(base) * exponent.numerator / exponent.denominator
            return _HINT.nstr(_HINT.exp(log_value), digits)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{base}^({exponent})" if exponent != 1 else str(base) for base, exponent in self.factors)


def _interval_ordering(quotient: PowerProduct) -> Ordering | None:
    total = _IV.mpf(0)
    for base, exponent in quotient.factors:
        total += _IV.log(base) * exponent.numerator / exponent.denominator
    if total > 0:
        return "GT"
    if total < 0:
        return "LT"
    return None


def compare_power_products(lhs: PowerProduct, rhs: PowerProduct) -> Ordering:
    quotient = lhs / rhs
    if not quotient.factors:
        return "EQ"
    ordering = _interval_ordering(quotient)
    if ordering is not None:
        return ordering
    _, numerator, denominator = quotient.cleared()
    if numerator == denominator:
        return "EQ"
    return "GT" if numerator > denominator else "LT"


def compare_rational_to_power_product(value: Rational | int, product: PowerProduct) -> Ordering:
    return compare_power_products(PowerProduct.from_rational(value), product)
