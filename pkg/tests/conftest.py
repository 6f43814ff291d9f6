import pytest

from jacobi49 import _kernels
from jacobi49.verify import PrimeBundle, prepare_prime


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # Compile (or load from cache) every jitted kernel before any timing runs.
    _kernels.warmup()


_BUNDLES: dict[tuple[int, int | None], PrimeBundle] = {}


@pytest.fixture(scope="session")
def bundle():
    """Memoized per-prime pipeline data, shared across the whole session."""

    def get(p: int, gamma: int | None = None) -> PrimeBundle:
        key = (p, gamma)
        if key not in _BUNDLES:
            _BUNDLES[key] = prepare_prime(p, gamma)
        return _BUNDLES[key]

    return get


def sieve_primes(limit: int) -> list[int]:
    marks = bytearray([1]) * (limit + 1)
    marks[0:2] = b"\x00\x00"
    for q in range(2, int(limit**0.5) + 1):
        if marks[q]:
            marks[q * q :: q] = b"\x00" * len(marks[q * q :: q])
    return [n for n in range(2, limit + 1) if marks[n]]
