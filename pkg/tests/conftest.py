import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hurwitzorbits import presentations as P
from hurwitzorbits.groups import RealizedGroup, symmetric_group
from hurwitzorbits.toddcoxeter import enumerate_cosets


def realize(pres, name):
    return RealizedGroup(enumerate_cosets(pres), name=name)


@pytest.fixture(scope="session")
def g4_group():
    return realize(P.g4(), "G4")


@pytest.fixture(scope="session")
def g6_group():
    return realize(P.g6(), "G6")


@pytest.fixture(scope="session")
def q8_ab_group():
    return realize(P.q8_ab(), "Q8-ab")


@pytest.fixture(scope="session")
def q8_ijk_group():
    return realize(P.q8_ijk(), "Q8-ijk")


@pytest.fixture(scope="session")
def d12_group():
    return realize(P.dihedral_rs(6), "D12")


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def s4():
    return symmetric_group(4)
