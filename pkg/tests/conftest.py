import pytest

from matula import PrimeTable


@pytest.fixture(scope="session")
def table() -> PrimeTable:
    """One shared prime table; extension is monotone so sharing is safe."""
    return PrimeTable()
