"""Independent brute-force oracles used by the tests.

Everything here works on explicit tree/forest objects (or plain integer
arithmetic) so that the rank-recursion implementations are checked against a
second, structurally different computation path.
"""

from math import isqrt

from matula import Forest, Tree, arborify, is_squarefree, number_of


def trial_factor_count(k: int) -> int:
    """Prime factors with multiplicity, by plain trial division."""
    count = 0
    d = 2
    while d * d <= k:
        while k % d == 0:
            k //= d
            count += 1
        d += 1
    return count + (1 if k > 1 else 0)


def trial_squarefree(k: int) -> bool:
    d = 2
    while d * d <= k:
        if k % (d * d) == 0:
            return False
        d += 1
    return True


def mobius_brute(k: int) -> int:
    if not trial_squarefree(k):
        return 0
    return -1 if trial_factor_count(k) % 2 else 1


def liouville_brute(k: int) -> int:
    return -1 if trial_factor_count(k) % 2 else 1


def tree_cuts(tr: Tree) -> list[tuple[Tree, Tree]]:
    """All (detached, remaining) pairs from cutting one edge of a tree."""
    out = []
    kids = tr.children
    for i, child in enumerate(kids):
        rest = kids[:i] + kids[i + 1 :]
        out.append((child, Tree(rest)))
        for detached, kept in tree_cuts(child):
            out.append((detached, Tree(rest + (kept,))))
    return out


def forest_cut_pairs(q: int, table) -> set[tuple[int, int]]:
    """Cut pairs of a prime, via explicit edge removal on its tree."""
    (tree,) = arborify(q, table).trees
    return {
        (number_of(d, table), number_of(r, table)) for d, r in tree_cuts(tree)
    }


def forest_partners(k: int, mode: str, table) -> set[int]:
    """Partners of k reachable by one edge-detachment or one root-fusion,
    enumerated on the actual forest of k."""
    trees = arborify(k, table).trees
    out: set[int] = set()
    for i, tr in enumerate(trees):
        rest = trees[:i] + trees[i + 1 :]
        for detached, kept in tree_cuts(tr):
            out.add(number_of(Forest(rest + (detached, kept)), table))
    for i in range(len(trees)):
        for j in range(i + 1, len(trees)):
            rest = tuple(t for idx, t in enumerate(trees) if idx not in (i, j))
            fused = Tree(trees[i].children + trees[j].children)
            out.add(number_of(Forest(rest + (fused,)), table))
    out = {l for l in out if l < k}
    if mode == "mobius":
        out = {l for l in out if is_squarefree(l, table)}
    return out


def primes_below(n: int) -> list[int]:
    """Plain list-based sieve, independent of the package's numpy one."""
    if n < 2:
        return []
    flags = [True] * (n + 1)
    flags[0] = flags[1] = False
    for p in range(2, isqrt(n) + 1):
        if flags[p]:
            for m in range(p * p, n + 1, p):
                flags[m] = False
    return [i for i, ok in enumerate(flags) if ok]
