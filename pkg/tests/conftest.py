import functools

import pytest

from mumbounds.basis import standard_basis
from mumbounds.mums import build_f_blocks, build_mums, t_interval


@pytest.fixture(scope="session")
def family():
    """Cached construction of the Gell-Mann MUM family at (d, t)."""

    @functools.lru_cache(maxsize=None)
    def _family(d: int, t: float):
        return build_mums(standard_basis(d), t)

    return _family


@pytest.fixture(scope="session")
def t_range_of():
    """Cached admissible t interval for the standard basis at dimension d."""

    @functools.lru_cache(maxsize=None)
    def _interval(d: int):
        return t_interval(build_f_blocks(standard_basis(d)), d)

    return _interval
