"""Finite groups given by multiplication tables.

A table is a list of lists with ``table[a][b]`` the index of ``a*b``.
"""
from __future__ import annotations

from itertools import permutations, product


class GroupTableError(ValueError):
    pass


def check_group_table(table) -> tuple[int, list[int]]:
    """Validate a group table; return ``(identity, inverses)``."""
    n = len(table)
    if n == 0:
        raise GroupTableError("empty table")
    if any(len(row) != n for row in table):
        raise GroupTableError("table must be square")
    if any(not isinstance(x, int) or not 0 <= x < n for row in table for x in row):
        raise GroupTableError("entries must be indices in range(n)")
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise GroupTableError(f"not associative at ({a}, {b}, {c})")
    ids = [e for e in range(n) if all(table[e][a] == a == table[a][e] for a in range(n))]
    if not ids:
        raise GroupTableError("no identity element")
    e = ids[0]
    inverses = []
    for a in range(n):
        inv = [b for b in range(n) if table[a][b] == e == table[b][a]]
        if not inv:
            raise GroupTableError(f"element {a} has no inverse")
        inverses.append(inv[0])
    return e, inverses


def cyclic_group(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def abelian_group(orders) -> list[list[int]]:
    """Table of Z/d1 x ... x Z/dk; elements in lexicographic order of coordinates."""
    elems = list(product(*(range(d) for d in orders))) if orders else [()]
    index = {g: i for i, g in enumerate(elems)}
    return [[index[tuple((x + y) % d for x, y, d in zip(g, h, orders))] for h in elems] for g in elems]


def symmetric_group(k: int) -> list[list[int]]:
    """S_k with elements in itertools order (identity first), ``(s*t)(x) = s(t(x))``."""
    elems = list(permutations(range(k)))
    index = {g: i for i, g in enumerate(elems)}
    return [[index[tuple(s[t[x]] for x in range(k))] for t in elems] for s in elems]


def direct_product(t1, t2) -> list[list[int]]:
    """Table of G1 x G2; the pair ``(a, b)`` has index ``a*len(t2) + b``."""
    n2 = len(t2)
    n = len(t1) * n2
    return [[t1[i // n2][j // n2] * n2 + t2[i % n2][j % n2] for j in range(n)] for i in range(n)]


def conjugacy_classes(table) -> list[list[int]]:
    e, inv = check_group_table(table)
    n = len(table)
    seen = set()
    classes = []
    for a in range(n):
        if a in seen:
            continue
        cls = sorted({table[table[g][a]][inv[g]] for g in range(n)})
        seen.update(cls)
        classes.append(cls)
    return classes


def is_abelian(table) -> bool:
    n = len(table)
    return all(table[a][b] == table[b][a] for a in range(n) for b in range(n))
