import pytest

from drcss.constructions import CONSTRUCTORS, construct
from drcss.finite_field import ExtensionTower, make_field
from drcss.orthomatrix import example_matrix_q5
from drcss.reference_q5 import REFERENCE_EXT_MODULUS


@pytest.fixture(scope="session")
def reference_tower():
    """q = 5 tower with the extension modulus the reference data was built on."""
    return ExtensionTower(make_field(5), ext_modulus=REFERENCE_EXT_MODULUS)


@pytest.fixture(scope="session")
def example_psi():
    return example_matrix_q5()


@pytest.fixture(scope="session")
def reference_sets(reference_tower, example_psi):
    """All five families generated in the reference configuration."""
    return {
        cid: construct(cid, reference_tower, psi=example_psi)
        for cid in CONSTRUCTORS
    }
