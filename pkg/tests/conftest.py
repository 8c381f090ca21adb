import pytest

from osgkit.enumeration import EnumerationOptions, enumerate_ordered_semigroups
from osgkit.fixtures import load_fixture
from osgkit.oracles import rz2 as build_rz2
from osgkit.structure import from_table


@pytest.fixture(scope="session")
def t1():
    return load_fixture("t1")


@pytest.fixture(scope="session")
def sl2():
    return load_fixture("sl2")


@pytest.fixture(scope="session")
def lz2():
    return load_fixture("lz2")


@pytest.fixture(scope="session")
def n2():
    return load_fixture("n2")


@pytest.fixture(scope="session")
def px3():
    return load_fixture("px3")


@pytest.fixture(scope="session")
def rz2():
    return build_rz2()


@pytest.fixture(scope="session")
def c2():
    # two-element group with 1 <= g; compatibility fails
    return from_table([[0, 1], [1, 0]], [(0, 1)])


@pytest.fixture(scope="session")
def valid_fixtures(t1, sl2, lz2, n2):
    return {"t1": t1, "sl2": sl2, "lz2": lz2, "n2": n2}


@pytest.fixture(scope="session")
def corpus_upto3_labelled():
    out = []
    for n in (1, 2, 3):
        out.extend(enumerate_ordered_semigroups(EnumerationOptions(n)))
    return out


@pytest.fixture(scope="session")
def corpus_upto3_iso():
    out = []
    for n in (1, 2, 3):
        out.extend(enumerate_ordered_semigroups(EnumerationOptions(n, mode="up_to_iso")))
    return out
