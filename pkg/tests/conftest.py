from pathlib import Path

import pytest

import gcrank
from gcrank import symmetry

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_path(name: str) -> Path:
    return FIXTURES / name


@pytest.fixture(scope="session")
def fibonacci():
    return gcrank.load_mtc(gcrank.bundled_data_path("fibonacci.json"))


@pytest.fixture(scope="session")
def ising():
    return gcrank.load_mtc(gcrank.bundled_data_path("ising.json"))


@pytest.fixture(scope="session")
def toric_code():
    return gcrank.load_mtc(gcrank.bundled_data_path("toric_code.json"))


@pytest.fixture(scope="session")
def toric_swap(toric_code):
    """Z_2 symmetry of the toric code exchanging e and m."""
    swap = symmetry.parse_generator(toric_code, "(e m)")
    return symmetry.build_symmetry(toric_code, {"swap_em": swap})
