import pytest
from click.testing import CliRunner
from hypothesis import settings

from grasscodes import create_cli
from grasscodes.algebra import MatrixFp, PrimeField
from grasscodes.ring import RingDescriptor

settings.register_profile('grasscodes', derandomize=True, max_examples=60, deadline=None)
settings.load_profile('grasscodes')


@pytest.fixture(scope='session')
def f2():
    return PrimeField(2)


@pytest.fixture(scope='session')
def f3():
    return PrimeField(3)


@pytest.fixture(scope='session')
def m2f2():
    return RingDescriptor(2)


@pytest.fixture(scope='session')
def m2f3():
    return RingDescriptor(3)


@pytest.fixture
def mat():
    """mat(p, rows) -> MatrixFp"""
    def build(p, rows):
        return MatrixFp(rows, PrimeField(p))
    return build


@pytest.fixture(scope='session')
def cli():
    return create_cli('testing')


@pytest.fixture
def runner():
    return CliRunner()
