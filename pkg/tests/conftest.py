import pathlib

import pytest

from qhadamard import make_field, skew_regular_qhm

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

_CTX_CACHE = {}
_S_CACHE = {}


def field(p):
    if p not in _CTX_CACHE:
        _CTX_CACHE[p] = make_field(p)
    return _CTX_CACHE[p]


def skew_regular(p):
    if p not in _S_CACHE:
        _S_CACHE[p] = skew_regular_qhm(field(p))
    return _S_CACHE[p]


@pytest.fixture
def fixtures_dir():
    return FIXTURES
