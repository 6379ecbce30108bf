import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tropical_patchwork.datasets import cubic_surface_212, harnack_cubic


@pytest.fixture(scope="session")
def harnack():
    return harnack_cubic()


@pytest.fixture(scope="session")
def cubic212():
    return cubic_surface_212()
