import pytest

from colorperm.oracle import brute_tables


class OracleCache:
    """Memoized brute-force reports so each group is enumerated once."""

    def __init__(self):
        self._reports = {}

    def get(self, r, n):
        key = (r, n)
        if key not in self._reports:
            self._reports[key] = brute_tables(r, n)
        return self._reports[key]

    def cached(self):
        return dict(self._reports)


@pytest.fixture(scope="session")
def oracle_cache():
    return OracleCache()
