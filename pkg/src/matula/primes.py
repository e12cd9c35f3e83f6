"""Growable prime table: primality, factorization, nth prime and prime rank.

The table sieves in segments and doubles its range on demand, so callers can
treat ``nth_prime`` / ``prime_rank`` as total functions up to a configurable
hard cap (default 2**32).  Everything else in the package consumes one shared
table.
"""

from __future__ import annotations

import os
import struct
import threading
from math import isqrt, log

import numpy as np

from .errors import CapExceeded, NotPrime

DEFAULT_CAP = 2**32

_SEGMENT = 1 << 24          # sieve chunk size, keeps peak memory bounded
_AUTO_FACTOR_SIEVE = 1 << 22  # factorize() builds a smallest-factor sieve up to here


def _nth_prime_bound(n: int) -> int:
    """Upper bound for the n-th prime (Rosser: n(log n + log log n) for n >= 6)."""
    if n < 6:
        return 13
    x = float(n)
    return int(x * (log(x) + log(log(x)))) + 8


class PrimeTable:
    """Ascending primes up to a movable limit, with rank lookups.

    After construction or extension the table is effectively immutable and
    safe to share between concurrent readers; extension itself takes an
    internal lock and swaps in fresh arrays.
    """

    def __init__(self, limit: int = 0, cap: int = DEFAULT_CAP):
        if cap < 2:
            raise ValueError("cap must be at least 2")
        self.cap = cap
        self._limit = 1
        self._primes = np.empty(0, dtype=np.int64)
        self._spf: np.ndarray | None = None
        self._lock = threading.Lock()
        if limit > 1:
            self.extend_to(limit)

    # -- growth ------------------------------------------------------------

    @property
    def limit(self) -> int:
        return self._limit

    @property
    def count(self) -> int:
        """Number of primes currently stored."""
        return len(self._primes)

    def extend_to(self, new_limit: int) -> None:
        """Grow the sieved range to at least ``new_limit`` (never shrinks)."""
        if new_limit <= self._limit:
            return
        if new_limit > self.cap:
            raise CapExceeded(new_limit, self.cap)
        with self._lock:
            if new_limit <= self._limit:
                return
            target = min(max(new_limit, 2 * self._limit, 1 << 10), self.cap)
            primes = self._primes
            lo = self._limit + 1
            while lo <= target:
                hi = min(lo + _SEGMENT - 1, target)
                primes = np.concatenate([primes, self._sieve_segment(lo, hi, primes)])
                lo = hi + 1
            self._primes = primes
            self._limit = target

    @staticmethod
    def _simple_sieve(n: int) -> np.ndarray:
        """All primes <= n by a plain sieve (n stays tiny: sqrt of a segment end)."""
        if n < 2:
            return np.empty(0, dtype=np.int64)
        mask = np.ones(n + 1, dtype=bool)
        mask[:2] = False
        for p in range(2, isqrt(n) + 1):
            if mask[p]:
                mask[p * p :: p] = False
        return np.nonzero(mask)[0].astype(np.int64)

    @staticmethod
    def _sieve_segment(lo: int, hi: int, base: np.ndarray) -> np.ndarray:
        """Primes in [lo, hi], given all primes < lo in ``base``."""
        if hi < 2:
            return np.empty(0, dtype=np.int64)
        lo = max(lo, 2)
        mask = np.ones(hi - lo + 1, dtype=bool)
        root = isqrt(hi)
        if len(base) == 0 or base[-1] < root:
            base = PrimeTable._simple_sieve(root)
        for p in base[: np.searchsorted(base, root, side="right")]:
            p = int(p)
            first = max(p * p, ((lo + p - 1) // p) * p)
            if first <= hi:
                mask[first - lo :: p] = False
        return (lo + np.nonzero(mask)[0]).astype(np.int64)

    # -- queries -----------------------------------------------------------

    def nth_prime(self, n: int) -> int:
        """The n-th prime, 1-based (nth_prime(1) == 2)."""
        if n < 1:
            raise ValueError(f"prime index must be >= 1, got {n}")
        while n > len(self._primes):
            if self._limit >= self.cap:
                raise CapExceeded(_nth_prime_bound(n), self.cap)
            bound = max(_nth_prime_bound(n), 2 * self._limit)
            self.extend_to(min(bound, self.cap))
        return int(self._primes[n - 1])

    def first_n(self, n: int) -> np.ndarray:
        """Read-only array of the first n primes (for vectorised scans)."""
        self.nth_prime(n)
        view = self._primes[:n]
        view.flags.writeable = False
        return view

    def primes_up_to(self, x: int) -> np.ndarray:
        """Read-only array of all primes <= x."""
        if x > self._limit:
            self.extend_to(x)
        view = self._primes[: int(np.searchsorted(self._primes, x, side="right"))]
        view.flags.writeable = False
        return view

    def is_prime(self, k: int) -> bool:
        if k < 2:
            return False
        if k > self._limit:
            self.extend_to(k)
        i = np.searchsorted(self._primes, k)
        return i < len(self._primes) and int(self._primes[i]) == k

    def prime_rank(self, q: int) -> int:
        """Rank n such that nth_prime(n) == q; raises NotPrime otherwise."""
        if q > self._limit:
            self.extend_to(q)
        i = int(np.searchsorted(self._primes, q))
        if i >= len(self._primes) or int(self._primes[i]) != q:
            raise NotPrime(q)
        return i + 1

    # -- factorization -----------------------------------------------------

    def ensure_factor_sieve(self, limit: int) -> None:
        """Build (or grow) the smallest-prime-factor sieve up to ``limit``."""
        if self._spf is not None and len(self._spf) > limit:
            return
        with self._lock:
            if self._spf is not None and len(self._spf) > limit:
                return
            size = max(limit + 1, 1 << 20)
            spf = np.zeros(size, dtype=np.int32)
            spf[2::2] = 2
            for p in range(3, isqrt(size - 1) + 1, 2):
                if spf[p] == 0:
                    sl = spf[p * p :: 2 * p]
                    sl[sl == 0] = p
            left = np.nonzero(spf[3::2] == 0)[0]  # odd k with no factor found: prime
            spf[3::2][left] = (2 * left + 3).astype(np.int32)
            spf[1] = 1
            self._spf = spf

    def factorize(self, k: int) -> list[tuple[int, int]]:
        """Prime factorization of k >= 1 as ascending (prime, multiplicity)."""
        if k < 1:
            raise ValueError(f"factorize expects k >= 1, got {k}")
        if k == 1:
            return []
        if k <= _AUTO_FACTOR_SIEVE:
            self.ensure_factor_sieve(min(max(k, 1 << 20), _AUTO_FACTOR_SIEVE))
        spf = self._spf
        if spf is not None and k < len(spf):
            out: list[tuple[int, int]] = []
            while k > 1:
                p = int(spf[k])
                e = 0
                while k % p == 0:
                    k //= p
                    e += 1
                out.append((p, e))
            return out
        return self._factorize_trial(k)

    def _factorize_trial(self, k: int) -> list[tuple[int, int]]:
        out: list[tuple[int, int]] = []
        root = isqrt(k)
        if root > self._limit:
            self.extend_to(root)
        i = 0
        while i < len(self._primes):
            p = int(self._primes[i])
            if p * p > k:
                break
            if k % p == 0:
                e = 0
                while k % p == 0:
                    k //= p
                    e += 1
                out.append((p, e))
                root = isqrt(k)
            i += 1
        if k > 1:
            out.append((k, 1))
        return out

    def prime_factors(self, k: int) -> list[int]:
        """Distinct prime factors of k, ascending."""
        return [p for p, _ in self.factorize(k)]

    # -- persistence ---------------------------------------------------------

    def save(self, path: str | os.PathLike) -> None:
        """Write the prime list as little-endian 64-bit ints after a count."""
        data = self._primes.astype("<i8").tobytes()
        with open(path, "wb") as fh:
            fh.write(struct.pack("<Q", len(self._primes)))
            fh.write(data)

    @classmethod
    def load(cls, path: str | os.PathLike, cap: int = DEFAULT_CAP) -> "PrimeTable":
        """Restore a table from ``save``; a missing file yields an empty table."""
        table = cls(cap=cap)
        try:
            fh = open(path, "rb")
        except FileNotFoundError:
            return table
        with fh:
            (n,) = struct.unpack("<Q", fh.read(8))
            primes = np.frombuffer(fh.read(8 * n), dtype="<i8").astype(np.int64)
        if len(primes) != n or (n and (primes[0] != 2 or np.any(np.diff(primes) <= 0))):
            raise ValueError(f"corrupt prime cache: {path}")
        if n:
            if int(primes[-1]) > cap:
                raise CapExceeded(int(primes[-1]), cap)
            table._primes = primes
            table._limit = int(primes[-1])
        return table


_default: PrimeTable | None = None
_default_lock = threading.Lock()


def default_table() -> PrimeTable:
    """Shared process-wide table used when callers do not pass their own."""
    global _default
    if _default is None:
        with _default_lock:
            if _default is None:
                _default = PrimeTable()
    return _default
