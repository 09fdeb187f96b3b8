"""Brute-force reference implementations used only by the tests.

Nothing here shares code with the package's DP paths.
"""

from itertools import combinations, permutations


def bar_int(a, n):
    return a % n or n


def all_sub_sums_int(terms, n):
    out = set()
    for r in range(1, len(terms) + 1):
        for c in combinations(terms, r):
            out.add(sum(bar_int(x, n) for x in c))
    return out


def all_sub_sums_mod(terms, n):
    out = set()
    for r in range(1, len(terms) + 1):
        for c in combinations(terms, r):
            out.add(sum(c) % n)
    return out


def dmul(u, v, n):
    # (eps, a) pairs for x^eps y^a
    return (u[0] ^ v[0], ((-u[1] if v[0] else u[1]) + v[1]) % n)


def all_products(pairs, n):
    out = set()
    for r in range(1, len(pairs) + 1):
        for p in permutations(pairs, r):
            acc = (0, 0)
            for e in p:
                acc = dmul(acc, e, n)
            out.add(acc)
    return out
