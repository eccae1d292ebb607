import pytest

import kummerlog as kl


@pytest.fixture(scope="session")
def f5():
    return kl.build_field(5)


@pytest.fixture(scope="session")
def f7():
    return kl.build_field(7)


@pytest.fixture(scope="session")
def f31():
    return kl.build_field(31)


@pytest.fixture(scope="session")
def f4():
    return kl.build_field(2, 2, [1, 1, 1])


@pytest.fixture(scope="session")
def f8():
    return kl.build_field(2, 3, rng_seed=1)


@pytest.fixture(scope="session")
def f9():
    return kl.build_field(3, 2, rng_seed=1)


@pytest.fixture(scope="session")
def kummer54(f5):
    # F_5[x]/(x^4 - 2), g = alpha + 1
    return kl.build_kummer(f5, 4, 2, 1)


@pytest.fixture(scope="session")
def kummer73(f7):
    return kl.build_kummer(f7, 3, 2, 1)


@pytest.fixture(scope="session")
def kummer3115(f31):
    return kl.build_kummer(f31, 15, 3, 1)


@pytest.fixture(scope="session")
def as5():
    return kl.build_artin_schreier(5, 1, 0)


@pytest.fixture(scope="session")
def as7():
    return kl.build_artin_schreier(7, 3, 2)
