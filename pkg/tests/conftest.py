import pytest

from commspec.catalog import FamilySpec, build, list_catalog
from commspec.predictions import verify_group


@pytest.fixture(scope="session")
def grid():
    """Every catalog entry, built and validated once per session."""
    return [(name, spec, build(spec)) for name, spec in list_catalog()]


@pytest.fixture(scope="session")
def grid_reports(grid):
    """Full verification pipeline output for every grid group."""
    return [
        (name, spec, group, verify_group(group, name, spec))
        for name, spec, group in grid
    ]


@pytest.fixture(scope="session")
def d6():
    return build(FamilySpec.dihedral(3))


@pytest.fixture(scope="session")
def d8():
    return build(FamilySpec.dihedral(4))


@pytest.fixture(scope="session")
def d12():
    return build(FamilySpec.dihedral(6))


@pytest.fixture(scope="session")
def q8():
    return build(FamilySpec.dicyclic(2))


@pytest.fixture(scope="session")
def heis3():
    return build(FamilySpec.heis(3))
