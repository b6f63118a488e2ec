import pytest

from besselstruve import CATALOG_IDS, audit_sweep


@pytest.fixture(scope="session")
def default_sweeps():
    """One default-grid sweep per identity, shared across test modules."""
    return {ident: audit_sweep(ident) for ident in CATALOG_IDS}
