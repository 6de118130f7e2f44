from __future__ import unicode_literals

import pytest

from hiddensym.utils import make_rng


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False,
                     help='Run the full census and the eleven-qubit family.')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: long running test, needs --runslow')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def rng():
    return make_rng(1234)
