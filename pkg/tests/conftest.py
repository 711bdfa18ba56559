import numpy as np
import pytest

from fgn_toolkit import BMode, HurstParam, synthesize_fgn

K3 = BMode.truncated(3)


@pytest.fixture(scope="session")
def synth_cache():
    """Memoized synthesizer so expensive traces are shared across tests."""
    cache = {}

    def get(h: float, n: int, seed: int, mode: BMode = K3):
        key = (h, n, seed, mode)
        if key not in cache:
            cache[key] = synthesize_fgn(HurstParam.permissive(h), n, seed, mode)
        return cache[key]

    return get


@pytest.fixture()
def rng():
    return np.random.default_rng(12345)
