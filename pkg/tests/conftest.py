import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from sequence_engine import build_table  # noqa: E402


@pytest.fixture(scope="session")
def c1_table():
    return build_table(1, 40)


@pytest.fixture(scope="session")
def c3_table():
    return build_table(3, 40)


@pytest.fixture(scope="session")
def long_tables():
    return {c: build_table(c, 1000) for c in range(1, 21)}
