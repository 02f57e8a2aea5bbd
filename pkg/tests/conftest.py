import pytest

from heckeblocks.fock import CanonicalCache


@pytest.fixture(scope="session")
def cache():
    """One shared canonical-basis memo for the whole run."""
    return CanonicalCache()
