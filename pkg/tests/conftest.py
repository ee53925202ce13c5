from contextlib import contextmanager

import pytest
from mpmath import mp, mpf


@contextmanager
def oracle(dps: int = 200):
    """High-precision reference context; far finer than any enclosure under test."""
    old = mp.prec
    mp.dps = dps
    try:
        yield
    finally:
        mp.prec = old


def ref(s: str):
    return mpf(s)


@pytest.fixture
def hp():
    return oracle
