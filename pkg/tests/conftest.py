import pytest

from nichols_lie.cyclo import CyclotomicField


@pytest.fixture
def F12():
    return CyclotomicField(12)


@pytest.fixture
def F6():
    return CyclotomicField(6)
