"""Primstruktur von c und der gcd-Folge d_n."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Tuple

from exact_core import PowerProduct, compare_rational_to_power_product
from models import OddPrimeSupport, ValuationBound

DEFAULT_FACTOR_LIMIT = 10**9


class FactorizationLimitError(ValueError):
    pass


def factorize(c: int, limit: int = DEFAULT_FACTOR_LIMIT) -> List[Tuple[int, int]]:
    if c < 1:
        raise ValueError(f"factorize erwartet c >= 1, erhalten: {c}")
    if c > limit:
        raise FactorizationLimitError(f"c={c} liegt ueber der Faktorisierungsgrenze {limit}; --factor-limit erhoehen")
    factors: List[Tuple[int, int]] = []
    rest = c
    candidate = 2
    while candidate * candidate <= rest:
        exponent = 0
        while rest % candidate == 0:
            rest //= candidate
            exponent += 1
        if exponent:
            factors.append((candidate, exponent))
        candidate += 1 if candidate == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return factors


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % k for k in range(3, math.isqrt(p) + 1, 2))


def p_adic_valuation(value: int, p: int) -> int:
    if value == 0:
        raise ValueError("Bewertung von 0 ist nicht definiert")
    if p < 2:
        raise ValueError(f"Primzahl erwartet, erhalten: {p}")
    count = 0
    value = abs(value)
    while value % p == 0:
        value //= p
        count += 1
    return count


def odd_prime_support(c: int, limit: int = DEFAULT_FACTOR_LIMIT) -> OddPrimeSupport:
    factors = factorize(c, limit)
    odd = [(p, e) for p, e in factors if p != 2]
    exponents = dict(factors)
    return OddPrimeSupport(
        c=c,
        primes=tuple(p for p, _ in odd),
        odd_exponents=tuple(e for _, e in odd),
        two_adic_exponent=exponents.get(2, 0),
        three_adic_exponent=exponents.get(3, 0),
    )


def _require_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"ungerade Primzahl erwartet, erhalten: {p}")


def lemma3_check(c: int, p: int, n: int, a_n: int) -> bool:
    """a_n = c^n (mod p), sobald p | n."""
    _require_odd_prime(p)
    if n % p != 0:
        raise ValueError(f"{p} teilt n={n} nicht")
    return (a_n - pow(c, n, p)) % p == 0


def support_check(d: int, support: OddPrimeSupport) -> bool:
    if d < 1:
        raise ValueError(f"d muss >= 1 sein, erhalten: {d}")
    rest = d
    for p in (2, *support.primes):
        while rest % p == 0:
            rest //= p
    return rest == 1


def semifactorial_valuation_bound(p: int, n: int) -> ValuationBound:
    _require_odd_prime(p)
    if n < 1:
        raise ValueError(f"n muss >= 1 sein, erhalten: {n}")
    top = 2 * n - 1
    t = 0
    m = 0
    power = p
    while power <= top:
        t += 1
        m += (top + power) // (2 * power)
        power *= p
    return ValuationBound(prime=p, n=n, t=t, m=m)


def prop5_bound(c: int, n: int, support: OddPrimeSupport) -> PowerProduct:
    """2^(n-1) * prod p^((n-2)/(p-1)) * (2n-3)^(j/2), obere Schranke fuer d_n."""
    if n < 2:
        raise ValueError(f"Schranke fuer d_n erst ab n=2, erhalten: {n}")
    if support.c != c:
        raise ValueError(f"Primtraeger gehoert zu c={support.c}, nicht zu c={c}")
    factors: List[Tuple[int, Fraction | int]] = [(2, n - 1)]
    factors.extend((p, Fraction(n - 2, p - 1)) for p in support.primes)
    factors.append((2 * n - 3, Fraction(support.j, 2)))
    return PowerProduct.of(factors)


def d_bound_holds(d: int, bound: PowerProduct) -> bool:
    return compare_rational_to_power_product(d, bound) != "GT"
