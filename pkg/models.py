from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Literal

from exact_core import PowerProduct

Variant = Literal["E", "E2", "E3", "E4"]
VariantChoice = Literal["auto", "E", "E2", "E3", "E4"]
VARIANTS: tuple[Variant, ...] = ("E", "E2", "E3", "E4")


class UndefinedIndexError(ValueError):
    pass


@dataclass(frozen=True)
class SequenceRow:
    n: int
    x: Fraction
    a: int
    a_prev: int | None = None
    d: int | None = None
    D: int | None = None


@dataclass(frozen=True)
class SequenceTable:
    c: int
    rows: tuple[SequenceRow, ...]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def row(self, n: int) -> SequenceRow:
        if n < 0 or n > self.n_max:
            raise UndefinedIndexError(f"Index {n} ausserhalb der Tabelle 0..{self.n_max} (c={self.c})")
        return self.rows[n]

    def a_values(self) -> List[int]:
        return [row.a for row in self.rows]


@dataclass(frozen=True)
class OddPrimeSupport:
    c: int
    primes: tuple[int, ...]
    odd_exponents: tuple[int, ...]
    two_adic_exponent: int
    three_adic_exponent: int

    @property
    def j(self) -> int:
        return len(self.primes)

    def reconstruct(self) -> int:
        value = 2**self.two_adic_exponent
        for prime, exponent in zip(self.primes, self.odd_exponents):
            value *= prime**exponent
        return value


@dataclass(frozen=True)
class ValuationBound:
    prime: int
    n: int
    t: int
    m: int


@dataclass(frozen=True)
class BoundRow:
    n: int
    variant: str
    value: PowerProduct
    threshold: Fraction
    verdict_ge_threshold: bool
    decimal_hint: str
    published_claim: str | None = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "variant": self.variant,
            "value": str(self.value),
            "threshold": str(self.threshold),
            "verdict_ge_threshold": self.verdict_ge_threshold,
            "decimal_hint": self.decimal_hint,
            "published_claim": self.published_claim,
        }


@dataclass(frozen=True)
class WindowEvidence:
    n: int
    c: int
    lower: int
    upper: int
    excluded: bool


@dataclass(frozen=True)
class EvidenceItem:
    n: int
    x: str
    D: int | None
    interval_ok: bool | None
    window_excluded: bool | None
    quadratic_in_window: bool | None
    is_integer: bool


@dataclass(frozen=True)
class Discrepancy:
    claim_ref: str
    claimed: str
    computed: str


@dataclass
class IntegralityReport:
    c: int
    crossover: int
    threshold_variant: str
    threshold: Fraction
    horizon_checked: int
    first_interval_index: int | None
    integral_indices: List[int] = field(default_factory=list)
    evidence: List[EvidenceItem] = field(default_factory=list)
    paper_discrepancies: List[Discrepancy] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "c": self.c,
            "crossover": self.crossover,
            "threshold_variant": self.threshold_variant,
            "threshold": str(self.threshold),
            "horizon_checked": self.horizon_checked,
            "first_interval_index": self.first_interval_index,
            "integral_indices": list(self.integral_indices),
            "evidence": [asdict(item) for item in self.evidence],
            "paper_discrepancies": [asdict(item) for item in self.paper_discrepancies],
        }
