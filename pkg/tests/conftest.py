import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from services.generators import make_rng  # noqa: E402
from services.selftest import WORKED_A, WORKED_B, WORKED_H  # noqa: E402

EXAMPLES_DIR = ROOT / "data" / "examples"


@pytest.fixture
def worked_a():
    return WORKED_A


@pytest.fixture
def worked_h():
    return WORKED_H


@pytest.fixture
def worked_gram():
    return WORKED_B


@pytest.fixture
def rng():
    return make_rng(20240601)


@pytest.fixture
def examples_dir():
    return EXAMPLES_DIR
