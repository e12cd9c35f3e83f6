"""The arborification bijection between positive integers and rooted forests.

The map sends 1 to the empty forest, a product to the multiset union of the
factors' forests, and the n-th prime to the tree obtained by putting a root
below the forest of n.  Vertex/edge/leaf statistics and the induced degree
grading are computed arithmetically (they are completely additive), with the
forest path kept as an independent cross-check in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forests import Forest, Tree, attach_root, detach_root
from .primes import PrimeTable, default_table

# Math values below do not depend on which table computed them, so the caches
# are module-global; dict reads/writes are atomic under CPython.
_tree_of_prime: dict[int, Tree] = {}
_number_of_tree: dict[Tree, int] = {}
_vaf_of_prime: dict[int, tuple[int, int, int]] = {}


def arborify(n: int, table: PrimeTable | None = None) -> Forest:
    """Forest of n: empty for 1, one tree per prime factor (with multiplicity)."""
    if n < 1:
        raise ValueError(f"arborify expects n >= 1, got {n}")
    table = table or default_table()
    trees: list[Tree] = []
    for p, e in table.factorize(n):
        t = _prime_tree(p, table)
        trees.extend([t] * e)
    return Forest(trees)


def _prime_tree(p: int, table: PrimeTable) -> Tree:
    t = _tree_of_prime.get(p)
    if t is None:
        t = attach_root(arborify(table.prime_rank(p), table))
        _tree_of_prime[p] = t
        _number_of_tree[t] = p
    return t


def number_of(obj: Forest | Tree, table: PrimeTable | None = None) -> int:
    """Inverse of arborify: a tree maps to a prime, a forest to the product."""
    table = table or default_table()
    if isinstance(obj, Tree):
        return _tree_number(obj, table)
    n = 1
    for t in obj.trees:
        n *= _tree_number(t, table)
    return n


def _tree_number(t: Tree, table: PrimeTable) -> int:
    p = _number_of_tree.get(t)
    if p is None:
        p = table.nth_prime(number_of(detach_root(t), table))
        _number_of_tree[t] = p
        _tree_of_prime[p] = t
    return p


@dataclass(frozen=True)
class Stats:
    """Forest statistics of an integer.

    factors is the number of prime factors with multiplicity and always
    equals vertices - edges; degree is vertices + edges.  Both are
    completely additive, and degree has the parity of factors.
    """

    vertices: int
    edges: int
    leaves: int
    factors: int
    degree: int


def _prime_vaf(p: int, table: PrimeTable) -> tuple[int, int, int]:
    got = _vaf_of_prime.get(p)
    if got is None:
        v, _a, f = _int_vaf(table.prime_rank(p), table)
        # adding a root gives one new vertex and one edge per tree of the
        # forest: edges go from a(k) to a(k) + (v(k) - a(k)) = v(k)
        got = (v + 1, v, max(f, 1))
        _vaf_of_prime[p] = got
    return got


def _int_vaf(k: int, table: PrimeTable) -> tuple[int, int, int]:
    v = a = f = 0
    for p, e in table.factorize(k):
        pv, pa, pf = _prime_vaf(p, table)
        v += e * pv
        a += e * pa
        f += e * pf
    return v, a, f


def stats_of(n: int, table: PrimeTable | None = None) -> Stats:
    """Vertex/edge/leaf counts plus factor count and degree, arithmetically."""
    if n < 1:
        raise ValueError(f"stats_of expects n >= 1, got {n}")
    v, a, f = _int_vaf(n, table or default_table())
    return Stats(v, a, f, v - a, v + a)


# -- degree and leaf enumeration ---------------------------------------------

_vertex_level_cache: dict[int, list[int]] = {}


def _integers_with_vertex_count(c: int, table: PrimeTable) -> list[int]:
    """All n whose forest has exactly c vertices, ascending (finite)."""
    got = _vertex_level_cache.get(c)
    if got is None:
        if c == 0:
            got = [1]
        else:
            pool: list[tuple[int, int]] = []
            for j in range(1, c + 1):  # primes whose tree has j vertices
                for k in _integers_with_vertex_count(j - 1, table):
                    pool.append((table.nth_prime(k), j))
            pool.sort()
            got = sorted(_multiset_products(pool, c))
        _vertex_level_cache[c] = got
    return got


def _multiset_products(pool: list[tuple[int, int]], total: int) -> list[int]:
    """Products over multisets drawn from (value, weight) with weights summing
    to total.  Distinct multisets give distinct products (unique factorization),
    so no de-duplication is needed."""
    out: list[int] = []

    def rec(i: int, remaining: int, acc: int) -> None:
        if remaining == 0:
            out.append(acc)
            return
        for j in range(i, len(pool)):
            val, w = pool[j]
            if w <= remaining:
                rec(j, remaining - w, acc * val)

    rec(0, total, 1)
    return out


def integers_of_degree(m: int, table: PrimeTable | None = None) -> list[int]:
    """All n with degree m, ascending.  Each degree level is a finite set:
    every prime factor contributes an odd degree >= 1."""
    if m < 0:
        raise ValueError(f"degree must be >= 0, got {m}")
    table = table or default_table()
    if m == 0:
        return [1]
    pool: list[tuple[int, int]] = []
    for d in range(1, m + 1, 2):  # a prime of degree d has (d+1)//2 vertices
        for k in _integers_with_vertex_count((d + 1) // 2 - 1, table):
            pool.append((table.nth_prime(k), d))
    pool.sort()
    return sorted(_multiset_products(pool, m))


def integers_with_leaf_count(
    leaf_count: int, bound: int, table: PrimeTable | None = None
) -> list[int]:
    """All n <= bound whose forest has exactly leaf_count leaves, ascending."""
    if leaf_count < 1:
        raise ValueError(f"leaf count must be >= 1, got {leaf_count}")
    table = table or default_table()
    return [
        n for n in range(2, bound + 1) if _int_vaf(n, table)[2] == leaf_count
    ]
