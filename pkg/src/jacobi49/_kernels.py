"""Hot inner loops over F_p, compiled with numba when available.

Every kernel exists twice: an @njit version and a vectorized numpy
fallback.  Setting the environment variable JACOBI49_PURE_NUMPY=1 (or
running without numba installed) selects the fallbacks.  Both paths
return identical int64 arrays; benchmarks/bench_kernels.py compares
their throughput.

All values stay far below 2**63: p is capped at 10**7, table entries are
counts bounded by p, and histogram exponents are at most 48 * p.
"""

import os

import numpy as np

_CHUNK = 1 << 20

USING_NUMBA = False
if os.environ.get("JACOBI49_PURE_NUMPY", "") not in ("", "0"):
    njit = None
else:
    try:
        from numba import njit

        USING_NUMBA = True
    except ImportError:
        njit = None


def _index_table_np(p, gamma):
    n = p - 1
    powers = np.ones(1, dtype=np.int64)
    g = gamma % p
    while powers.size < n:
        powers = np.concatenate([powers, powers * g % p])[:n]
        g = g * g % p
    ind = np.full(p, -1, dtype=np.int64)
    ind[powers] = np.arange(n, dtype=np.int64)
    return ind


def _pair_counts_np(ind, e):
    p = ind.shape[0]
    a = ind[1 : p - 1] % e
    b = ind[2:p] % e
    return np.bincount(a * e + b, minlength=e * e).reshape(e, e).astype(np.int64)


def _power_pair_hist_np(ind, e, i, j):
    p = ind.shape[0]
    keys = (i * ind[1 : p - 1] + j * ind[2:p]) % e
    return np.bincount(keys, minlength=e).astype(np.int64)


def _power_pair_hist_variant_np(ind, e, i, j):
    # v runs over 2..p-1; the partner index is (1 - v) mod p = p + 1 - v,
    # which is ind[2:p] traversed backwards.
    p = ind.shape[0]
    keys = (i * ind[2:p] + j * ind[2:p][::-1]) % e
    return np.bincount(keys, minlength=e).astype(np.int64)


def _cubic_roots_np(p):
    # Roots of x^3 + x^2 - 2x - 1 modulo p, scanned in chunks.
    roots = []
    for start in range(0, p, _CHUNK):
        x = np.arange(start, min(p, start + _CHUNK), dtype=np.int64)
        vals = ((x * x % p) * x + x * x + (p - 2) * x + (p - 1)) % p
        roots.extend(int(start + k) for k in np.flatnonzero(vals == 0))
    return np.array(roots, dtype=np.int64)


if USING_NUMBA:

    @njit(cache=True)
    def index_table(p, gamma):
        ind = np.full(p, -1, np.int64)
        acc = 1
        for k in range(p - 1):
            ind[acc] = k
            acc = acc * gamma % p
        return ind

    @njit(cache=True)
    def pair_counts(ind, e):
        p = ind.shape[0]
        counts = np.zeros((e, e), np.int64)
        for v in range(1, p - 1):
            counts[ind[v] % e, ind[v + 1] % e] += 1
        return counts

    @njit(cache=True)
    def power_pair_hist(ind, e, i, j):
        p = ind.shape[0]
        out = np.zeros(e, np.int64)
        for v in range(1, p - 1):
            out[(i * ind[v] + j * ind[v + 1]) % e] += 1
        return out

    @njit(cache=True)
    def power_pair_hist_variant(ind, e, i, j):
        p = ind.shape[0]
        out = np.zeros(e, np.int64)
        for v in range(2, p):
            out[(i * ind[v] + j * ind[p + 1 - v]) % e] += 1
        return out

    @njit(cache=True)
    def cubic_roots(p):
        out = np.empty(4, np.int64)
        cnt = 0
        for x in range(p):
            if ((x * x % p) * x + x * x + (p - 2) * x + (p - 1)) % p == 0:
                if cnt < 4:
                    out[cnt] = x
                cnt += 1
        return out[: min(cnt, 4)].copy()

else:
    index_table = _index_table_np
    pair_counts = _pair_counts_np
    power_pair_hist = _power_pair_hist_np
    power_pair_hist_variant = _power_pair_hist_variant_np
    cubic_roots = _cubic_roots_np


def warmup():
    """Force compilation of every kernel on a tiny field (no-op without numba)."""
    ind = index_table(29, 2)
    pair_counts(ind, 7)
    power_pair_hist(ind, 7, 1, 1)
    power_pair_hist_variant(ind, 7, 1, 1)
    cubic_roots(29)
