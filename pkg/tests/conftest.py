import pytest

from superhopf import (polynomial_presentation, session_b_bosonized,
                       session_pl11, session_pl11_bosonized)


@pytest.fixture(scope="session")
def sess_u():
    return session_pl11()


@pytest.fixture(scope="session")
def sess_ubar():
    return session_pl11_bosonized()


@pytest.fixture(scope="session")
def sess_bbar():
    return session_b_bosonized()


@pytest.fixture(scope="session")
def kxy():
    return polynomial_presentation(["x", "y"])


@pytest.fixture(scope="session")
def ubar(sess_ubar):
    return sess_ubar.pres


@pytest.fixture(scope="session")
def bos(sess_ubar):
    return sess_ubar.bos
