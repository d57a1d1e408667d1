"""Hot numeric kernels with two interchangeable implementations.

Every kernel exists twice: a numba ``@njit`` version and a pure-numpy
fallback. The active set is chosen once at import time from the
``LENGRAM_BACKEND`` environment variable:

    LENGRAM_BACKEND=auto    use numba when importable, else numpy (default)
    LENGRAM_BACKEND=numba   require numba, fail loudly if unavailable
    LENGRAM_BACKEND=numpy   skip numba entirely

Both implementations are algorithm-identical where it matters for
reproducibility: window packing and the shuffle are exact integer
arithmetic (bit-identical across backends), and entropy accumulates
per-n-gram terms in ascending count order with compensated / exactly
rounded summation, so the two backends agree to a few ulp.

Kernels operate on plain int64 arrays; all domain typing lives upstream.
"""

from __future__ import annotations

import math
import os

import numpy as np

ENV_VAR = "LENGRAM_BACKEND"

_MASK64 = 0xFFFFFFFFFFFFFFFF
_SM_GOLDEN = 0x9E3779B97F4A7C15
_SM_MIX1 = 0xBF58476D1CE4E5B9
_SM_MIX2 = 0x94D049BB133111EB


# ---------------------------------------------------------------------------
# pure-numpy implementations
# ---------------------------------------------------------------------------

def _pack_windows_numpy(values: np.ndarray, order: int, base: int) -> np.ndarray:
    """Radix-pack every gliding window of `order` symbols into one int64 key.

    Keys preserve lexicographic order of the windows because all symbols
    are < base. Caller guarantees base**order fits in int64.
    """
    count = values.shape[0] - order + 1
    keys = values[:count].astype(np.int64, copy=True)
    for t in range(1, order):
        keys *= base
        keys += values[t:t + count]
    return keys


def _unique_counts_numpy(keys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    uniq, counts = np.unique(keys, return_counts=True)
    return uniq.astype(np.int64, copy=False), counts.astype(np.int64, copy=False)


def _entropy_nats_numpy(counts: np.ndarray, total: int) -> float:
    """Plug-in Shannon entropy -sum (c/K) ln(c/K) over observed counts.

    Terms are summed in ascending count order with math.fsum so the result
    is independent of the incoming count order and stable across platforms.
    """
    c = np.sort(counts).astype(np.float64)
    t = float(total)
    terms = (c / t) * (np.log(t) - np.log(c))
    return math.fsum(terms)


def _splitmix64(x: int) -> int:
    z = x & _MASK64
    z = ((z ^ (z >> 30)) * _SM_MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _SM_MIX2) & _MASK64
    return z ^ (z >> 31)


def _permute_numpy(values: np.ndarray, key: int) -> np.ndarray:
    """Fisher-Yates shuffle driven by a counter-based splitmix64 stream.

    Unbiased via power-of-two mask rejection; deterministic in `key` alone,
    so parallel callers cannot perturb each other's draws.
    """
    out = values.copy()
    n = out.shape[0]
    if n <= 1:
        return out
    key = int(key) & _MASK64
    counter = 0
    for i in range(n - 1, 0, -1):
        mask = i
        mask |= mask >> 1
        mask |= mask >> 2
        mask |= mask >> 4
        mask |= mask >> 8
        mask |= mask >> 16
        mask |= mask >> 32
        while True:
            counter += 1
            r = _splitmix64(key + counter * _SM_GOLDEN) & mask
            if r <= i:
                break
        out[i], out[r] = out[r], out[i]
    return out


_NUMPY_IMPL = {
    "pack_windows": _pack_windows_numpy,
    "unique_counts": _unique_counts_numpy,
    "entropy_nats": _entropy_nats_numpy,
    "permute": _permute_numpy,
}


# ---------------------------------------------------------------------------
# numba implementations (compiled lazily, only when the backend is wanted)
# ---------------------------------------------------------------------------

_numba_impl: dict | None = None


def _build_numba_impl() -> dict:
    from numba import njit

    @njit(cache=True)
    def pack_windows(values, order, base):
        count = values.shape[0] - order + 1
        keys = np.empty(count, np.int64)
        top = np.int64(1)
        for _ in range(order - 1):
            top *= base
        acc = np.int64(0)
        for t in range(order):
            acc = acc * base + values[t]
        keys[0] = acc
        for j in range(1, count):
            acc = (acc - values[j - 1] * top) * base + values[j + order - 1]
            keys[j] = acc
        return keys

    @njit(cache=True)
    def unique_counts(keys):
        sk = np.sort(keys)
        m = sk.shape[0]
        distinct = 1
        for i in range(1, m):
            if sk[i] != sk[i - 1]:
                distinct += 1
        uniq = np.empty(distinct, np.int64)
        counts = np.empty(distinct, np.int64)
        u = 0
        uniq[0] = sk[0]
        run = 1
        for i in range(1, m):
            if sk[i] == sk[i - 1]:
                run += 1
            else:
                counts[u] = run
                u += 1
                uniq[u] = sk[i]
                run = 1
        counts[u] = run
        return uniq, counts

    @njit(cache=True)
    def entropy_nats(counts, total):
        # ascending count order + Kahan compensation: stable and
        # order-independent, mirroring the numpy fsum path
        c = np.sort(counts)
        t = float(total)
        log_t = np.log(t)
        acc = 0.0
        comp = 0.0
        for i in range(c.shape[0]):
            ci = float(c[i])
            term = (ci / t) * (log_t - np.log(ci))
            y = term - comp
            s = acc + y
            comp = (s - acc) - y
            acc = s
        return acc

    @njit(cache=True)
    def permute(values, key):
        out = values.copy()
        n = out.shape[0]
        if n <= 1:
            return out
        k = np.uint64(key)
        golden = np.uint64(0x9E3779B97F4A7C15)
        mix1 = np.uint64(0xBF58476D1CE4E5B9)
        mix2 = np.uint64(0x94D049BB133111EB)
        counter = np.uint64(0)
        one = np.uint64(1)
        for i in range(n - 1, 0, -1):
            iu = np.uint64(i)
            mask = iu
            mask |= mask >> np.uint64(1)
            mask |= mask >> np.uint64(2)
            mask |= mask >> np.uint64(4)
            mask |= mask >> np.uint64(8)
            mask |= mask >> np.uint64(16)
            mask |= mask >> np.uint64(32)
            while True:
                counter += one
                z = k + counter * golden
                z = (z ^ (z >> np.uint64(30))) * mix1
                z = (z ^ (z >> np.uint64(27))) * mix2
                z = z ^ (z >> np.uint64(31))
                r = z & mask
                if r <= iu:
                    break
            j = np.int64(r)
            tmp = out[i]
            out[i] = out[j]
            out[j] = tmp
        return out

    return {
        "pack_windows": pack_windows,
        "unique_counts": unique_counts,
        "entropy_nats": entropy_nats,
        "permute": permute,
    }


def get_implementation(name: str) -> dict:
    """Return the kernel table for 'numpy' or 'numba' (compiling if needed)."""
    global _numba_impl
    if name == "numpy":
        return _NUMPY_IMPL
    if name == "numba":
        if _numba_impl is None:
            _numba_impl = _build_numba_impl()
        return _numba_impl
    raise ValueError(f"unknown backend {name!r}")


def available_backends() -> list[str]:
    names = ["numpy"]
    try:
        import numba  # noqa: F401
        names.append("numba")
    except ImportError:
        pass
    return names


def _select_backend() -> tuple[str, dict]:
    requested = os.environ.get(ENV_VAR, "auto").strip().lower() or "auto"
    if requested == "numpy":
        return "numpy", _NUMPY_IMPL
    if requested == "numba":
        return "numba", get_implementation("numba")
    if requested != "auto":
        raise ValueError(
            f"{ENV_VAR} must be one of auto|numba|numpy, got {requested!r}"
        )
    try:
        return "numba", get_implementation("numba")
    except ImportError:
        return "numpy", _NUMPY_IMPL


BACKEND, _impl = _select_backend()

pack_windows = _impl["pack_windows"]
unique_counts = _impl["unique_counts"]
entropy_nats = _impl["entropy_nats"]
permute = _impl["permute"]


def warm_up() -> None:
    """Trigger JIT compilation of the active kernels on tiny inputs."""
    demo = np.array([1, 2, 1, 2, 3], dtype=np.int64)
    keys = pack_windows(demo, 2, 4)
    _, counts = unique_counts(keys)
    entropy_nats(counts, int(counts.sum()))
    permute(demo, 12345)
