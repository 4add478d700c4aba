from dataclasses import dataclass, field
from typing import Any

from arithmetic_structure import DEFAULT_FACTOR_LIMIT
from bound_rules import DEFAULT_SCAN_LIMIT
from sequence_engine import DEFAULT_N_MAX

# feste Pruefgitter der Verifikation, unabhaengig von n_max
WINDOW_GRID = 10_000
INTERVAL_GRID = 1_000
CONGRUENCE_GRID = 500


@dataclass(frozen=True)
class CertifySettings:
    default_horizon: int = DEFAULT_N_MAX
    scan_limit: int = DEFAULT_SCAN_LIMIT
    factor_limit: int = DEFAULT_FACTOR_LIMIT
    window_grid: int = WINDOW_GRID
    interval_grid: int = INTERVAL_GRID
    congruence_grid: int = CONGRUENCE_GRID


@dataclass
class InvariantTally:
    name: str
    checked: int = 0
    failed: int = 0
    first_failure: str | None = None

    def record(self, ok: bool, detail: str) -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = detail


@dataclass
class VerifySummary:
    c_from: int
    c_to: int
    n_max: int
    grids: dict[str, int] = field(default_factory=dict)
    tallies: dict[str, InvariantTally] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(tally.failed == 0 for tally in self.tallies.values())

    def tally(self, name: str) -> InvariantTally:
        if name not in self.tallies:
            self.tallies[name] = InvariantTally(name=name)
        return self.tallies[name]

    def to_dict(self) -> dict[str, Any]:
        return {
            "c_from": self.c_from,
            "c_to": self.c_to,
            "n_max": self.n_max,
            "grids": dict(sorted(self.grids.items())),
            "passed": self.passed,
            "invariants": {
                name: {"checked": tally.checked, "failed": tally.failed, "first_failure": tally.first_failure}
                for name, tally in self.tallies.items()
            },
        }
