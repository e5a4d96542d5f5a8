import pytest

from fuzzyrank import bundled
from fuzzyrank.ingest import load_dataset, load_scheme

ALL_IDS = [f"MH{i}" for i in range(1, 16)]


@pytest.fixture(scope="session")
def academic_scheme():
    return load_scheme(bundled.scheme_path("academic"))


@pytest.fixture(scope="session")
def nonacademic_scheme():
    return load_scheme(bundled.scheme_path("non-academic"))


@pytest.fixture(scope="session")
def academic_alts(academic_scheme):
    return load_dataset(bundled.dataset_path(), academic_scheme)


@pytest.fixture(scope="session")
def nonacademic_alts(nonacademic_scheme):
    return load_dataset(bundled.dataset_path(), nonacademic_scheme)
