import time

import pytest

from daisy import cyclic, reproduce

MASTER_SEED = 20240809


@pytest.fixture(scope="session")
def profile_cache_dir(tmp_path_factory):
    return tmp_path_factory.mktemp("profile-cache")


@pytest.fixture(scope="session")
def big_profiles(profile_cache_dir):
    """The two multi-million-subset scans, computed once, with wall times."""
    out = {}
    for n in (33, 30):
        t0 = time.perf_counter()
        profile = cyclic.shift_edge_profile_cached(n, 7, 2, profile_cache_dir, workers=4)
        out[n] = (profile, time.perf_counter() - t0)
    return out


@pytest.fixture(scope="session")
def reproduction_rows(big_profiles, profile_cache_dir):
    """Full claim battery, reusing the cached profiles."""
    return reproduce.run_reproduction(
        cache_dir=profile_cache_dir, threads=2, seed=MASTER_SEED, samples=200_000
    )
