"""Products and cuts on primes seen as rooted trees.

Grafting one prime's tree onto the root of another's (the Butcher product)
and merging two roots (fusion) act on prime ranks; cutting an edge splits a
prime into a pair of primes.  All three are computed purely on ranks, so no
tree objects are built here; the tests cross-check against the forest model.
"""

from __future__ import annotations

from typing import NamedTuple

from .primes import PrimeTable, default_table


class CutPair(NamedTuple):
    """Result of cutting one edge: the detached subtree's prime and the
    prime of what remains.  Their product is the composite the cut creates
    when applied inside a factor."""

    detached: int
    remaining: int

    @property
    def product(self) -> int:
        return self.detached * self.remaining


def butcher(s: int, t: int, table: PrimeTable | None = None) -> int:
    """Graft the tree of prime s onto the root of prime t's tree.

    With t the n-th prime, the result is the (s*n)-th prime.
    """
    table = table or default_table()
    table.prime_rank(s)  # raises NotPrime on bad input
    return table.nth_prime(s * table.prime_rank(t))


def fuse(q: int, r: int, table: PrimeTable | None = None) -> int:
    """Merge the roots of two primes' trees: ranks multiply.

    Commutative and associative; the rank-1 prime (2) is the identity.
    """
    table = table or default_table()
    return table.nth_prime(table.prime_rank(q) * table.prime_rank(r))


_cuts_cache: dict[int, frozenset[CutPair]] = {}


def cuts(q: int, table: PrimeTable | None = None) -> frozenset[CutPair]:
    """All single-edge cuts of prime q's tree, as de-duplicated CutPairs.

    For q the n-th prime: cutting a root edge detaches a prime factor d of n
    and leaves the (n/d)-th prime; cutting deeper inside the branch of d
    relays a cut of d.  The single-vertex tree (q == 2) has no edges and
    yields the empty set.
    """
    got = _cuts_cache.get(q)
    if got is None:
        table = table or default_table()
        n = table.prime_rank(q)
        acc: set[CutPair] = set()
        if n > 1:
            for d in table.prime_factors(n):
                rest = n // d
                acc.add(CutPair(d, table.nth_prime(rest)))
                for s, r in cuts(d, table):
                    acc.add(CutPair(s, table.nth_prime(rest * r)))
        got = frozenset(acc)
        _cuts_cache[q] = got
    return got


def cut_chains(
    q: int, table: PrimeTable | None = None
) -> list[tuple[CutPair, tuple[int, ...]]]:
    """Cuts of q with their display chains.

    A deep cut moves the detached subtree down one level per step; the chain
    lists the intermediate primes and ends at the two-factor product, e.g.
    59 -> 41 -> 29 -> 22.  Root cuts have a single step.
    """
    table = table or default_table()
    n = table.prime_rank(q)
    out: list[tuple[CutPair, tuple[int, ...]]] = []
    if n == 1:
        return out
    for d in sorted(table.prime_factors(n)):
        rest = n // d
        root_pair = CutPair(d, table.nth_prime(rest))
        out.append((root_pair, (q, root_pair.product)))
        for pair, inner in cut_chains(d, table):
            chain = [q]
            chain.extend(table.nth_prime(rest * c) for c in inner[1:])
            relayed = CutPair(pair.detached, table.nth_prime(rest * pair.remaining))
            chain.append(relayed.product)
            out.append((relayed, tuple(chain)))
    out.sort(key=lambda item: (item[0], item[1]))
    return out


def nap_law_holds(p: int, q: int, r: int, table: PrimeTable | None = None) -> bool:
    """Whether grafting p then q onto r equals grafting q then p onto r."""
    table = table or default_table()
    return butcher(p, butcher(q, r, table), table) == butcher(
        q, butcher(p, r, table), table
    )


def value_increasing_cuts(
    limit: int, table: PrimeTable | None = None
) -> list[tuple[int, int]]:
    """All (q, product) with q prime <= limit and some cut of q whose
    two-factor product exceeds q.  Cuts normally decrease the value; the
    exceptions are rare and this scan certifies them for a range."""
    table = table or default_table()
    out: set[tuple[int, int]] = set()
    for q in map(int, table.primes_up_to(limit)):
        for pair in cuts(q, table):
            if pair.product > q:
                out.add((q, pair.product))
    return sorted(out)
