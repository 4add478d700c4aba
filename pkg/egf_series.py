"""Abgeschnittene formale Potenzreihen ueber Q und die EGF F(x) = exp(cx + x^2/2)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List

from exact_core import semifactorial


class SeriesOrderError(ValueError):
    pass


class SeriesMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise SeriesOrderError("Eine Reihe braucht mindestens den konstanten Koeffizienten")

    @classmethod
    def from_values(cls, values: Iterable[Fraction | int]) -> TruncatedSeries:
        return cls(tuple(Fraction(value) for value in values))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        if k < 0 or k > self.order:
            raise SeriesOrderError(f"Koeffizient {k} liegt ausserhalb der Ordnung {self.order}")
        return self.coeffs[k]

    def derivative(self) -> TruncatedSeries:
        if self.order < 1:
            raise SeriesOrderError("Ableitung braucht Ordnung >= 1")
        return TruncatedSeries(tuple(k * self.coeffs[k] for k in range(1, self.order + 1)))

    def reflect(self) -> TruncatedSeries:
        """F(-x)."""
        return TruncatedSeries(tuple(-value if k % 2 else value for k, value in enumerate(self.coeffs)))

    def is_zero(self) -> bool:
        return all(value == 0 for value in self.coeffs)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    if a.order != b.order:
        raise SeriesOrderError(f"Ordnungen verschieden: {a.order} != {b.order}")
    return TruncatedSeries(
        tuple(sum((a.coeffs[i] * b.coeffs[k - i] for i in range(k + 1)), Fraction(0)) for k in range(a.order + 1))
    )


def series_exp(g: TruncatedSeries) -> TruncatedSeries:
    # (exp g)' = g' exp g  =>  k f_k = sum_{j=1..k} j g_j f_{k-j}
    if g.coeffs[0] != 0:
        raise ValueError(f"exp braucht konstanten Term 0, erhalten: {g.coeffs[0]}")
    f: List[Fraction] = [Fraction(1)]
    for k in range(1, g.order + 1):
        total = sum((j * g.coeffs[j] * f[k - j] for j in range(1, k + 1)), Fraction(0))
        f.append(total / k)
    return TruncatedSeries(tuple(f))


def egf(c: int, order: int) -> TruncatedSeries:
    if not isinstance(c, int) or c < 1:
        raise ValueError(f"c muss eine positive ganze Zahl sein, erhalten: {c!r}")
    if order < 0:
        raise SeriesOrderError(f"Ordnung muss >= 0 sein, erhalten: {order}")
    exponent = [Fraction(0), Fraction(c), Fraction(1, 2)]
    exponent = (exponent + [Fraction(0)] * order)[: order + 1]
    return series_exp(TruncatedSeries(tuple(exponent)))


def exp_x_squared(order: int) -> TruncatedSeries:
    return TruncatedSeries(
        tuple(Fraction(1, math.factorial(k // 2)) if k % 2 == 0 else Fraction(0) for k in range(order + 1))
    )


def cauchy_residual(F: TruncatedSeries, c: int) -> TruncatedSeries:
    """Koeffizienten von F'' - (c+x)F' - F bis Ordnung order-2."""
    if F.order < 2:
        raise SeriesOrderError(f"Residuum braucht Ordnung >= 2, erhalten: {F.order}")
    if F.coeffs[0] != 1:
        raise ValueError(f"Anfangsbedingung F(0)=1 verletzt: {F.coeffs[0]}")
    if F.coeffs[1] != c:
        raise ValueError(f"Anfangsbedingung F'(0)={c} verletzt: {F.coeffs[1]}")
    f = F.coeffs
    return TruncatedSeries(
        tuple((k + 2) * (k + 1) * f[k + 2] - c * (k + 1) * f[k + 1] - (k + 1) * f[k] for k in range(F.order - 1))
    )


def coefficients_to_a(F: TruncatedSeries) -> List[int]:
    values: List[int] = []
    for n, coefficient in enumerate(F.coeffs):
        scaled = coefficient * math.factorial(n)
        if scaled.denominator != 1:
            raise SeriesMismatchError(f"n!*[x^{n}] = {scaled} ist nicht ganz")
        values.append(scaled.numerator)
    return values


def alternating_convolution(a: List[int], n: int) -> int:
    if n < 1:
        raise ValueError(f"n muss >= 1 sein, erhalten: {n}")
    if len(a) < 2 * n + 1:
        raise ValueError(f"Es werden a_0..a_{2 * n} gebraucht, vorhanden: {len(a)} Werte")
    top = 2 * n
    return sum((-1) ** (top - m) * math.comb(top, m) * a[m] * a[top - m] for m in range(top + 1))


def convolution_target(n: int) -> int:
    return 2**n * semifactorial(n)
