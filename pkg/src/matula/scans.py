"""Exhaustive range verifiers for prime inequalities and related tables.

Every scan walks its whole parameter rectangle (no sampling) and returns a
ScanReport whose exception list is exactly the violation set.  Integer
comparisons are exact; only the log-based bounds use floats, with a relative
guard band and a high-precision recheck near the boundary.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import log

import mpmath
import numpy as np

from .primes import PrimeTable, default_table

GUARD_BAND = 1e-9  # relative width of the float comparison no-man's-land


@dataclass
class ScanReport:
    """Certificate for one exhaustive scan: the rectangle and its violations."""

    name: str
    range: dict[str, int]
    exceptions: list[tuple]
    elapsed: float = 0.0
    extra: dict = field(default_factory=dict)

    def to_json(self, with_elapsed: bool = True) -> str:
        doc = {
            "name": self.name,
            "range": self.range,
            "exceptions": [list(e) for e in self.exceptions],
            "elapsed_ms": round(self.elapsed * 1000.0, 3) if with_elapsed else None,
        }
        doc.update(self.extra)
        return json.dumps(doc, sort_keys=True, separators=(", ", ": "))


def scan_prime_rank_growth(
    a_max: int, n_max: int, table: PrimeTable | None = None
) -> ScanReport:
    """Check p_(a*n) > a * p_n over 2 <= a <= a_max, 1 <= n <= n_max.

    The only failures anywhere are (a, n) in {(2,1), (3,1), (4,1)}.
    """
    if a_max < 2 or n_max < 1:
        raise ValueError(f"empty scan range: a_max={a_max}, n_max={n_max}")
    table = table or default_table()
    started = time.perf_counter()
    primes = table.first_n(a_max * n_max)
    base = primes[:n_max]
    ns = np.arange(1, n_max + 1, dtype=np.int64)
    exceptions: list[tuple] = []
    for a in range(2, a_max + 1):
        bad = np.nonzero(primes[a * ns - 1] <= a * base)[0]
        exceptions.extend((a, int(n)) for n in ns[bad])
    exceptions.sort()
    return ScanReport(
        name="prime-rank-growth",
        range={"a_min": 2, "a_max": a_max, "n_min": 1, "n_max": n_max},
        exceptions=exceptions,
        elapsed=time.perf_counter() - started,
    )


def scan_fusion(m_max: int, n_max: int, table: PrimeTable | None = None) -> ScanReport:
    """Check p_(m*n) < p_m * p_n over unordered {m, n} in the rectangle.

    The only failures anywhere are {3,4} and {4,4}.
    """
    if m_max < 1 or n_max < 1:
        raise ValueError(f"empty scan range: m_max={m_max}, n_max={n_max}")
    table = table or default_table()
    started = time.perf_counter()
    lo, hi = min(m_max, n_max), max(m_max, n_max)
    primes = table.first_n(lo * hi)
    exceptions: list[tuple] = []
    for m in range(1, lo + 1):
        ns = np.arange(m, hi + 1, dtype=np.int64)
        pm = primes[m - 1]
        bad = np.nonzero(primes[m * ns - 1] >= pm * primes[ns - 1])[0]
        exceptions.extend((m, int(n)) for n in ns[bad])
    exceptions.sort()
    return ScanReport(
        name="fusion",
        range={"m_max": m_max, "n_max": n_max},
        exceptions=exceptions,
        elapsed=time.perf_counter() - started,
    )


def ratio_table(
    k_max: int, l_max: int, table: PrimeTable | None = None
) -> dict[tuple[int, int], Fraction]:
    """Exact rationals p_k * p_l / p_(k*l) for the whole rectangle."""
    if k_max < 1 or l_max < 1:
        raise ValueError(f"empty table range: k_max={k_max}, l_max={l_max}")
    table = table or default_table()
    primes = table.first_n(k_max * l_max)
    out: dict[tuple[int, int], Fraction] = {}
    for k in range(1, k_max + 1):
        pk = int(primes[k - 1])
        for l in range(1, l_max + 1):
            out[(k, l)] = Fraction(pk * int(primes[l - 1]), int(primes[k * l - 1]))
    return out


def _float_bound_scan(
    name: str,
    ns: np.ndarray,
    primes: np.ndarray,
    bound: np.ndarray,
    kind: str,
    exact_bound,
) -> list[tuple]:
    """Compare primes against a float bound with a guard band.

    kind "lower": pass means p_n >= bound; kind "upper": p_n <= bound.
    Cases within GUARD_BAND relative distance of the boundary are re-decided
    with 60-digit arithmetic via exact_bound(n).
    """
    band = GUARD_BAND * np.abs(bound)
    p = primes.astype(np.float64)
    if kind == "lower":
        clear_fail = p < bound - band
    else:
        clear_fail = p > bound + band
    near = np.abs(p - bound) <= band
    failures = [int(n) for n in ns[clear_fail]]
    with mpmath.workdps(60):
        for i in np.nonzero(near)[0]:
            n = int(ns[i])
            b = exact_bound(n)
            pn = mpmath.mpf(int(primes[i]))
            if (kind == "lower" and pn < b) or (kind == "upper" and pn > b):
                failures.append(n)
    return [(name, n) for n in sorted(failures)]


def scan_prime_size_bounds(n_max: int, table: PrimeTable | None = None) -> ScanReport:
    """Check the sharp bounds on the n-th prime.

    lower (n >= 2):        p_n >= n(log n + log log n - 1)
    upper-refined (n>=13): p_n <= n(log n + log log n - 1 + 1.8 log log n / log n)
    upper-const (n>=13):   p_n <= n(log n + log log n - 0.337)
    """
    if n_max < 2:
        raise ValueError(f"need n_max >= 2, got {n_max}")
    table = table or default_table()
    started = time.perf_counter()
    primes = table.first_n(n_max)

    ns = np.arange(2, n_max + 1, dtype=np.int64)
    x = ns.astype(np.float64)
    lg, lglg = np.log(x), np.log(np.log(x))
    exceptions = _float_bound_scan(
        "lower",
        ns,
        primes[1:n_max],
        x * (lg + lglg - 1.0),
        "lower",
        lambda n: n * (mpmath.log(n) + mpmath.log(mpmath.log(n)) - 1),
    )

    if n_max >= 13:
        ns = np.arange(13, n_max + 1, dtype=np.int64)
        x = ns.astype(np.float64)
        lg, lglg = np.log(x), np.log(np.log(x))
        exceptions += _float_bound_scan(
            "upper-refined",
            ns,
            primes[12:n_max],
            x * (lg + lglg - 1.0 + 1.8 * lglg / lg),
            "upper",
            lambda n: n
            * (
                mpmath.log(n)
                + mpmath.log(mpmath.log(n))
                - 1
                + mpmath.mpf("1.8") * mpmath.log(mpmath.log(n)) / mpmath.log(n)
            ),
        )
        exceptions += _float_bound_scan(
            "upper-const",
            ns,
            primes[12:n_max],
            x * (lg + lglg - 0.337),
            "upper",
            lambda n: n
            * (mpmath.log(n) + mpmath.log(mpmath.log(n)) - mpmath.mpf("0.337")),
        )

    return ScanReport(
        name="prime-size-bounds",
        range={"n_min": 2, "n_max": n_max},
        exceptions=sorted(exceptions),
        elapsed=time.perf_counter() - started,
    )


def scan_rank_ratio_monotone(n_max: int, table: PrimeTable | None = None) -> ScanReport:
    """Check p_n / n <= p_(p_n) / p_n for 2 <= n <= n_max.

    Compared exactly as p_n * p_n <= n * p_(p_n); no floats involved.
    """
    if n_max < 2:
        raise ValueError(f"need n_max >= 2, got {n_max}")
    table = table or default_table()
    started = time.perf_counter()
    primes = table.first_n(n_max)
    deep = table.first_n(int(primes[-1]))
    ns = np.arange(2, n_max + 1, dtype=np.int64)
    p = primes[1:n_max]
    bad = np.nonzero(p * p > ns * deep[p - 1])[0]
    return ScanReport(
        name="rank-ratio-monotone",
        range={"n_min": 2, "n_max": n_max},
        exceptions=[(int(n),) for n in ns[bad]],
        elapsed=time.perf_counter() - started,
    )


def scan_cut_decrease(q_max: int, table: PrimeTable | None = None) -> ScanReport:
    """Certify which cuts of primes <= q_max increase the value.

    Exceptions are (q, product) pairs with product > q; everywhere else a cut
    strictly decreases the value.
    """
    if q_max < 3:
        raise ValueError(f"need q_max >= 3, got {q_max}")
    from .algebra import value_increasing_cuts

    table = table or default_table()
    started = time.perf_counter()
    exceptions = value_increasing_cuts(q_max, table)
    return ScanReport(
        name="cut-decrease",
        range={"q_max": q_max},
        exceptions=exceptions,
        elapsed=time.perf_counter() - started,
    )


def scan_nap_law(p_max: int, table: PrimeTable | None = None) -> ScanReport:
    """Check the graft-exchange law x>(y>z) = y>(x>z) for all prime triples
    with values <= p_max (expected to hold identically)."""
    if p_max < 2:
        raise ValueError(f"need p_max >= 2, got {p_max}")
    from .algebra import nap_law_holds

    table = table or default_table()
    started = time.perf_counter()
    ps = [int(p) for p in table.primes_up_to(p_max)]
    exceptions = [
        (a, b, c)
        for a in ps
        for b in ps
        for c in ps
        if not nap_law_holds(a, b, c, table)
    ]
    return ScanReport(
        name="nap-law",
        range={"p_max": p_max},
        exceptions=exceptions,
        elapsed=time.perf_counter() - started,
    )


def scan_three_n(n_max: int, table: PrimeTable | None = None) -> ScanReport:
    """Check p_n > 3n for n >= 12; n = 11 fails (31 < 33) and is reported
    as the boundary witness."""
    if n_max < 12:
        raise ValueError(f"need n_max >= 12, got {n_max}")
    table = table or default_table()
    started = time.perf_counter()
    primes = table.first_n(n_max)
    ns = np.arange(12, n_max + 1, dtype=np.int64)
    bad = np.nonzero(primes[11:n_max] <= 3 * ns)[0]
    p11 = int(primes[10])
    return ScanReport(
        name="three-n",
        range={"n_min": 12, "n_max": n_max},
        exceptions=[(int(n),) for n in ns[bad]],
        elapsed=time.perf_counter() - started,
        extra={"boundary_witness": {"n": 11, "prime": p11, "three_n": 33}},
    )


# -- admissible constellations ------------------------------------------------


@dataclass(frozen=True)
class ConstellationWidth:
    """Minimal diameter of an admissible k-tuple plus one witness pattern."""

    k: int
    width: int
    pattern: tuple[int, ...]


MAX_CONSTELLATION_K = 13


def is_admissible(pattern: tuple[int, ...], small_primes: list[int]) -> bool:
    """For every prime in small_primes, the offsets miss >= 1 residue class."""
    for p in small_primes:
        if len({o % p for o in pattern}) == p:
            return False
    return True


def min_constellation_width(k: int, table: PrimeTable | None = None) -> ConstellationWidth:
    """Minimal diameter of k integer offsets that, for every prime p <= k,
    avoid at least one residue class mod p.

    Branch-and-bound over even offsets ascending (with 0 fixed first): an
    initial greedy completion seeds the incumbent, then the search prunes any
    branch whose best possible diameter reaches it.
    """
    if not (2 <= k <= MAX_CONSTELLATION_K):
        raise ValueError(
            f"k must be between 2 and {MAX_CONSTELLATION_K}, got {k}"
        )
    table = table or default_table()
    small = [int(p) for p in table.primes_up_to(k)]
    odd = [p for p in small if p > 2]  # even offsets handle p = 2 already

    def fills(counts: list[int], o: int, masks: list[int]) -> bool:
        # would adding offset o cover all residues of some tracked prime?
        for i, p in enumerate(odd):
            bit = 1 << (o % p)
            if not masks[i] & bit and counts[i] + 1 == p:
                return True
        return False

    def add(o: int, masks: list[int], counts: list[int]) -> tuple[list[int], list[int]]:
        m2, c2 = masks[:], counts[:]
        for i, p in enumerate(odd):
            bit = 1 << (o % p)
            if not m2[i] & bit:
                m2[i] |= bit
                c2[i] += 1
        return m2, c2

    # greedy incumbent: always take the next admissible even offset
    masks = [0] * len(odd)
    counts = [0] * len(odd)
    masks, counts = add(0, masks, counts)
    greedy = [0]
    while len(greedy) < k:
        o = greedy[-1] + 2
        while fills(counts, o, masks):
            o += 2
        masks, counts = add(o, masks, counts)
        greedy.append(o)

    best_width = greedy[-1]
    best_pattern = tuple(greedy)

    def dfs(chosen: list[int], masks: list[int], counts: list[int]) -> None:
        nonlocal best_width, best_pattern
        if len(chosen) == k:
            if chosen[-1] < best_width:
                best_width = chosen[-1]
                best_pattern = tuple(chosen)
            return
        slots_left = k - len(chosen) - 1
        o = chosen[-1] + 2
        while o + 2 * slots_left < best_width:
            if not fills(counts, o, masks):
                m2, c2 = add(o, masks, counts)
                chosen.append(o)
                dfs(chosen, m2, c2)
                chosen.pop()
            o += 2

    start_masks = [0] * len(odd)
    start_counts = [0] * len(odd)
    start_masks, start_counts = add(0, start_masks, start_counts)
    dfs([0], start_masks, start_counts)

    assert is_admissible(best_pattern, small), "search produced an inadmissible tuple"
    assert best_pattern[0] == 0 and best_pattern[-1] == best_width
    return ConstellationWidth(k=k, width=best_width, pattern=best_pattern)


def check_tuple_width_bound(n_max: int, table: PrimeTable | None = None) -> ScanReport:
    """Verify that the minimal admissible (n+1)-tuple diameter is >= p_n
    for 1 <= n <= n_max (n_max at most 12)."""
    if not (1 <= n_max <= MAX_CONSTELLATION_K - 1):
        raise ValueError(f"need 1 <= n_max <= {MAX_CONSTELLATION_K - 1}, got {n_max}")
    table = table or default_table()
    started = time.perf_counter()
    exceptions: list[tuple] = []
    widths: dict[str, int] = {}
    for n in range(1, n_max + 1):
        width = min_constellation_width(n + 1, table).width
        widths[str(n)] = width
        if width < table.nth_prime(n):
            exceptions.append((n,))
    return ScanReport(
        name="tuple-width-vs-prime",
        range={"n_min": 1, "n_max": n_max},
        exceptions=exceptions,
        elapsed=time.perf_counter() - started,
        extra={"widths": widths},
    )
