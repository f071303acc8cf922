import pytest

from superlink import build_root_datum


@pytest.fixture(scope="session")
def gl11():
    return build_root_datum("gl", m=1, n=1)


@pytest.fixture(scope="session")
def gl21():
    return build_root_datum("gl", m=2, n=1)


@pytest.fixture(scope="session")
def gl22():
    return build_root_datum("gl", m=2, n=2)


@pytest.fixture(scope="session")
def osp22():
    return build_root_datum("osp2", n=1)


@pytest.fixture(scope="session")
def osp24():
    return build_root_datum("osp2", n=2)


@pytest.fixture(scope="session")
def p2():
    return build_root_datum("p", n=2)


@pytest.fixture(scope="session")
def p3():
    return build_root_datum("p", n=3)


@pytest.fixture(scope="session")
def osp32():
    return build_root_datum("osp32")


@pytest.fixture(scope="session")
def red_a1():
    return build_root_datum("reductive", factors="A1")


@pytest.fixture(scope="session")
def red_a2():
    return build_root_datum("reductive", factors="A2")


@pytest.fixture(scope="session")
def red_c2():
    return build_root_datum("reductive", factors="C2")
