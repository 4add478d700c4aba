"""Exakte Bahn x_n, Begleitfolge a_n sowie d_n = gcd(a_n, a_{n-1}) und D_n fuer festes c."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List

from exact_core import gcd, semifactorial
from models import SequenceRow, SequenceTable, UndefinedIndexError

DEFAULT_N_MAX = 64

__all__ = [
    "DEFAULT_N_MAX",
    "UndefinedIndexError",
    "a_closed_form",
    "build_table",
    "divisibility_chain_holds",
    "quadratic_in_window",
    "quadratic_residual",
    "reduced_denominator",
]


def _validate_c(c: int) -> None:
    if not isinstance(c, int) or c < 1:
        raise ValueError(f"c muss eine positive ganze Zahl sein, erhalten: {c!r}")


def build_table(c: int, n_max: int = DEFAULT_N_MAX) -> SequenceTable:
    """Zeilen 0..n_max: x ueber c + n/x, a ueber a_{n+1} = c*a_n + n*a_{n-1}."""
    _validate_c(c)
    if n_max < 0:
        raise ValueError(f"n_max muss >= 0 sein, erhalten: {n_max}")

    x = Fraction(1)
    a_prev, a = 0, 1
    rows: List[SequenceRow] = [SequenceRow(n=0, x=x, a=a)]
    for n in range(n_max):
        x = c + Fraction(n) / x
        a_prev, a = a, c * a + n * a_prev
        if Fraction(a, a_prev) != x:
            raise RuntimeError(f"Inkonsistenz bei n={n + 1}: x={x}, a_n/a_(n-1)={a}/{a_prev}")
        d = gcd(a, a_prev)
        rows.append(SequenceRow(n=n + 1, x=x, a=a, a_prev=a_prev, d=d, D=a_prev // d))
    return SequenceTable(c=c, rows=tuple(rows))


def a_closed_form(c: int, n: int) -> int:
    _validate_c(c)
    if n < 0:
        raise ValueError(f"n muss >= 0 sein, erhalten: {n}")
    return sum(c ** (n - 2 * s) * math.comb(n, 2 * s) * semifactorial(s) for s in range(n // 2 + 1))


def reduced_denominator(table: SequenceTable, n: int) -> int:
    if n == 0:
        raise UndefinedIndexError("D_0 ist nicht definiert")
    row = table.row(n)
    assert row.d is not None and row.D is not None and row.a_prev is not None
    if row.D != row.a_prev // row.d or row.D != row.x.denominator:
        raise RuntimeError(
            f"D_{n} widerspruechlich: D={row.D}, a_(n-1)/d={row.a_prev // row.d}, Nenner={row.x.denominator}"
        )
    return row.D


def quadratic_residual(table: SequenceTable, n: int) -> Fraction:
    if n < 2:
        raise UndefinedIndexError(f"Quadratischer Rest erst ab n=2 definiert, erhalten: {n}")
    x = table.row(n).x
    return x * x - table.c * x


def quadratic_in_window(table: SequenceTable, n: int) -> bool:
    residual = quadratic_residual(table, n)
    return n - 1 < residual < n


def divisibility_chain_holds(table: SequenceTable) -> bool:
    rows = table.rows
    for n in range(1, table.n_max):
        assert rows[n].d is not None and rows[n + 1].d is not None
        if rows[n + 1].d % rows[n].d != 0:
            return False
    return True
