import os

import numpy as np
import pytest
from hypothesis import settings

# UMBRAL_LAGUERRE_SEED pins randomized tests; unset means a fixed default
SEED = int(os.environ.get("UMBRAL_LAGUERRE_SEED", "20240601"))

settings.register_profile("default", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)
