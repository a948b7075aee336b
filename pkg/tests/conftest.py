from fractions import Fraction as F

import pytest

from dioph6 import triple_from_multiple


@pytest.fixture(scope="session")
def t2_triple():
    return triple_from_multiple(F(2), 2)


@pytest.fixture(scope="session")
def t6_triple():
    return triple_from_multiple(F(6), 2)


@pytest.fixture(scope="session")
def gibbs_sextuple():
    return (F(11, 192), F(35, 192), F(155, 27), F(512, 27), F(1235, 48), F(180873, 16))


@pytest.fixture(scope="session")
def t6_printed():
    return (
        F(3780, 73),
        F(26645, 252),
        F(7, 13140),
        F(791361752602550684660, 1827893092234556692801),
        F(95104852709815809228981184, 351041911654651335633266955),
        F(3210891270762333567521084544, 21712719223923581005355),
    )
