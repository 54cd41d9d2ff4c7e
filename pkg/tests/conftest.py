import pytest

from ramanujan_integrals import run_suite


@pytest.fixture(scope="session")
def default_suite_report():
    """Identity suite under the default profile, shared across test modules."""
    return run_suite()
