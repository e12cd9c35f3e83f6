"""Mobius/Liouville sums bounded by pairing integers of opposite sign.

Every edge cut turns one prime factor into two and every root fusion turns
two into one, so both moves flip the parity of the factor count.  Pairing
each k with a smaller partner reached by one such move cancels the two signs;
whatever stays unpaired bounds the summatory function in absolute value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .algebra import CutPair, cuts, fuse
from .primes import PrimeTable, default_table

MOBIUS = "mobius"
LIOUVILLE = "liouville"
MODES = (MOBIUS, LIOUVILLE)

POLICIES = ("largest", "smallest", "first")


def _check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    return mode


def factor_count(k: int, table: PrimeTable | None = None) -> int:
    """Number of prime factors of k with multiplicity."""
    table = table or default_table()
    return sum(e for _, e in table.factorize(k))


def is_squarefree(k: int, table: PrimeTable | None = None) -> bool:
    table = table or default_table()
    return all(e == 1 for _, e in table.factorize(k))


def mobius(k: int, table: PrimeTable | None = None) -> int:
    """0 on a square factor, else (-1)**(number of prime factors)."""
    if k < 1:
        raise ValueError(f"mobius expects k >= 1, got {k}")
    table = table or default_table()
    sign = 1
    for _, e in table.factorize(k):
        if e > 1:
            return 0
        sign = -sign
    return sign


def liouville(k: int, table: PrimeTable | None = None) -> int:
    """(-1)**(number of prime factors with multiplicity)."""
    if k < 1:
        raise ValueError(f"liouville expects k >= 1, got {k}")
    return -1 if factor_count(k, table) % 2 else 1


def sign_of(k: int, mode: str, table: PrimeTable | None = None) -> int:
    return mobius(k, table) if mode == MOBIUS else liouville(k, table)


def summatory(n: int, mode: str, table: PrimeTable | None = None) -> int:
    """Partial sum of the mode's sign function over 1..n, by direct summation."""
    _check_mode(mode)
    if n < 1:
        raise ValueError(f"summatory expects n >= 1, got {n}")
    table = table or default_table()
    return sum(sign_of(k, mode, table) for k in range(1, n + 1))


def _squarefree_mask(n: int) -> np.ndarray:
    mask = np.ones(n + 1, dtype=bool)
    mask[0] = False
    p = 2
    while p * p <= n:
        mask[p * p :: p * p] = False
        p += 1
    return mask


# -- partner moves -------------------------------------------------------------


def partner_moves(
    k: int, mode: str, table: PrimeTable | None = None
) -> list[tuple[int, dict]]:
    """All (l, move) with l < k reachable by one cut or one root fusion.

    Cut: pick a prime factor q >= 3 of k and an edge cut (s, r) of q; the
    factor q becomes s*r.  Fusion: pick primes q, r with q*r | k (q == r only
    if q**2 | k); the two factors merge into their fused prime.  Both flip
    the sign; in mobius mode k must be squarefree and candidates with square
    factors are dropped.  Generation order is deterministic: cuts first by
    ascending factor then ascending pair, fusions after, smaller factor first.
    """
    _check_mode(mode)
    if k < 2:
        raise ValueError(f"partner moves need k >= 2, got {k}")
    table = table or default_table()
    factors = table.factorize(k)
    if mode == MOBIUS and any(e > 1 for _, e in factors):
        raise ValueError(f"mobius pairing is over squarefree integers, got {k}")
    moves: list[tuple[int, dict]] = []
    for q, _e in factors:
        if q < 3:
            continue
        for s, r in sorted(cuts(q, table)):
            l = (k // q) * s * r
            if l < k:
                moves.append(
                    (l, {"kind": "cut", "factor": q, "detached": s, "remaining": r})
                )
    primes = [p for p, _ in factors]
    for i, q in enumerate(primes):
        for j in range(i, len(primes)):
            r = primes[j]
            if q == r and factors[i][1] < 2:
                continue
            l = (k // (q * r)) * fuse(q, r, table)
            if l < k:
                moves.append((l, {"kind": "fusion", "left": q, "right": r}))
    if mode == MOBIUS:
        moves = [(l, mv) for l, mv in moves if is_squarefree(l, table)]
    return moves


def partner_candidates(
    k: int, mode: str, table: PrimeTable | None = None
) -> list[int]:
    """De-duplicated ascending list of possible partners l < k of k."""
    return sorted({l for l, _ in partner_moves(k, mode, table)})


# -- the pairing engine ---------------------------------------------------------


@dataclass
class PairingReport:
    """Outcome of pairing 1..n: matched pairs, leftovers, and the sign bound.

    pairs hold (k, l) with l < k and opposite signs; singletons are the
    unpaired members of the pairable universe (1 is always among them) and
    bound is the absolute signed count of the singletons, an upper bound for
    the summatory function's absolute value at n.
    """

    n: int
    mode: str
    policy: str
    pairs: list[tuple[int, int]]
    singletons: list[int]
    bound: int
    exact: int
    move_log: dict[int, dict] = field(default_factory=dict)

    def to_json(self, with_moves: bool = True) -> str:
        doc = {
            "N": self.n,
            "mode": self.mode,
            "policy": self.policy,
            "pairs": [list(p) for p in self.pairs],
            "singletons": self.singletons,
            "bound": self.bound,
            "exact": self.exact,
        }
        if with_moves and self.move_log:
            doc["move_log"] = {str(k): mv for k, mv in self.move_log.items()}
        return json.dumps(doc, sort_keys=True, separators=(", ", ": "))


def pair_range(
    n: int,
    mode: str = LIOUVILLE,
    policy: str = "largest",
    table: PrimeTable | None = None,
) -> PairingReport:
    """Greedily pair n..2 downward with one-move partners of opposite sign.

    In mobius mode only squarefree integers take part (square-bearing ones
    contribute 0 and stay out of the report); in liouville mode everything
    does.  A number whose candidates are all taken becomes a singleton; no
    backtracking is attempted.  Deterministic for fixed (n, mode, policy).
    """
    _check_mode(mode)
    if policy not in POLICIES:
        raise ValueError(f"policy must be one of {POLICIES}, got {policy!r}")
    if n < 1:
        raise ValueError(f"pair_range expects n >= 1, got {n}")
    table = table or default_table()
    in_universe = (
        _squarefree_mask(n) if mode == MOBIUS else np.ones(n + 1, dtype=bool)
    )
    matched = np.zeros(n + 1, dtype=bool)
    pairs: list[tuple[int, int]] = []
    move_log: dict[int, dict] = {}
    for k in range(n, 1, -1):
        if not in_universe[k] or matched[k]:
            continue
        moves = [
            (l, mv)
            for l, mv in partner_moves(k, mode, table)
            if not matched[l]
        ]
        if not moves:
            continue
        if policy == "largest":
            l, mv = max(moves, key=lambda item: item[0])
        elif policy == "smallest":
            l, mv = min(moves, key=lambda item: item[0])
        else:  # first in generation order
            l, mv = moves[0]
        matched[k] = matched[l] = True
        pairs.append((k, l))
        move_log[k] = mv
    singletons = [
        m for m in range(1, n + 1) if in_universe[m] and not matched[m]
    ]
    bound = abs(sum(sign_of(m, mode, table) for m in singletons))
    return PairingReport(
        n=n,
        mode=mode,
        policy=policy,
        pairs=pairs,
        singletons=singletons,
        bound=bound,
        exact=summatory(n, mode, table),
        move_log=move_log,
    )


# -- validation ------------------------------------------------------------------


def validation_errors(
    report: PairingReport, table: PrimeTable | None = None
) -> list[str]:
    """Re-check every report invariant; empty list means the report is valid."""
    table = table or default_table()
    errs: list[str] = []
    if report.mode not in MODES:
        return [f"unknown mode {report.mode!r}"]
    n, mode = report.n, report.mode

    seen: set[int] = set()
    for k, l in report.pairs:
        for m in (k, l):
            if not (1 <= m <= n):
                errs.append(f"pair member {m} outside 1..{n}")
            elif m in seen:
                errs.append(f"{m} appears more than once")
            seen.add(m)
        if not l < k:
            errs.append(f"pair ({k}, {l}) is not descending")
        if sign_of(k, mode, table) + sign_of(l, mode, table) != 0:
            errs.append(f"pair ({k}, {l}) signs do not cancel")
    for m in report.singletons:
        if not (1 <= m <= n):
            errs.append(f"singleton {m} outside 1..{n}")
        elif m in seen:
            errs.append(f"{m} appears both paired and as a singleton")
        seen.add(m)

    universe = {
        m
        for m in range(1, n + 1)
        if mode == LIOUVILLE or is_squarefree(m, table)
    }
    missing = universe - seen
    alien = seen - universe
    if missing:
        errs.append(f"universe members unaccounted for: {sorted(missing)[:10]}")
    if alien:
        errs.append(f"members outside the pairable universe: {sorted(alien)[:10]}")

    bound = abs(sum(sign_of(m, mode, table) for m in report.singletons))
    if report.bound != bound:
        errs.append(f"bound {report.bound} != recomputed {bound}")
    exact = summatory(n, mode, table)
    if report.exact != exact:
        errs.append(f"exact {report.exact} != recomputed {exact}")
    if abs(exact) > bound:
        errs.append(f"|summatory| {abs(exact)} exceeds bound {bound}")

    for k, l in report.pairs:
        mv = report.move_log.get(k)
        if mv is None:
            continue
        if _replay_move(k, mv, table) != l:
            errs.append(f"move log for {k} does not reach {l}: {mv}")
    return errs


def _replay_move(k: int, move: dict, table: PrimeTable) -> int | None:
    try:
        if move["kind"] == "cut":
            q, s, r = move["factor"], move["detached"], move["remaining"]
            if q < 3 or k % q != 0:
                return None
            if CutPair(s, r) not in cuts(q, table):
                return None
            return (k // q) * s * r
        if move["kind"] == "fusion":
            q, r = move["left"], move["right"]
            if k % (q * r) != 0:
                return None
            return (k // (q * r)) * fuse(q, r, table)
    except Exception:
        return None
    return None


def validate_report(report: PairingReport, table: PrimeTable | None = None) -> bool:
    """True iff the report passes every invariant re-check."""
    return not validation_errors(report, table)


# -- fixtures ----------------------------------------------------------------------


def load_pairs(text: str) -> list[tuple[int, int]]:
    """Parse a hand-written pair list: two integers per line, '#' comments."""
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}")
        k, l = int(parts[0]), int(parts[1])
        pairs.append((k, l))
    return pairs


def report_from_pairs(
    n: int,
    mode: str,
    pairs: list[tuple[int, int]],
    policy: str = "fixture",
    table: PrimeTable | None = None,
) -> PairingReport:
    """Wrap an externally supplied pairing of 1..n into a checkable report."""
    _check_mode(mode)
    table = table or default_table()
    taken = {m for pair in pairs for m in pair}
    singletons = [
        m
        for m in range(1, n + 1)
        if m not in taken and (mode == LIOUVILLE or is_squarefree(m, table))
    ]
    bound = abs(sum(sign_of(m, mode, table) for m in singletons))
    return PairingReport(
        n=n,
        mode=mode,
        policy=policy,
        pairs=list(pairs),
        singletons=singletons,
        bound=bound,
        exact=summatory(n, mode, table),
    )
