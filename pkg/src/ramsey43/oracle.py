"""Independent brute-force reference for clique counts.

This module must stay naive and share no enumeration code with the bitmask
engine: edge colors are rebuilt directly from the recipe, and every C(n, k)
vertex subset is scanned with an all-pairs color test.  It exists so the fast
engine can be cross-validated against something too simple to be wrong.
"""

from __future__ import annotations

from itertools import combinations

from .coloring import BLUE, ColoringSpec, EdgeColor


def blue_table(spec: ColoringSpec) -> list[list[bool]]:
    """Symmetric lookup table: blue_table[u][v] is True iff edge (u, v) is blue."""
    n = spec.order
    table = [[False] * n for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            d = (u - v) % n
            is_blue = min(d, n - d) in spec.blue_lengths
            table[u][v] = table[v][u] = is_blue
    for a, b in spec.flips:
        table[a][b] = table[b][a] = not table[a][b]
    return table


def oracle_enumerate(spec: ColoringSpec, color: EdgeColor, k: int) -> list[tuple[int, ...]]:
    """All monochromatic k-subsets, by scanning every combination of active
    vertices and testing all pairs."""
    table = blue_table(spec)
    want_blue = color is BLUE
    active = [v for v in range(spec.order) if v not in spec.deletions]
    found = []
    for subset in combinations(active, k):
        ok = True
        for i in range(k):
            row = table[subset[i]]
            for j in range(i + 1, k):
                if row[subset[j]] != want_blue:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(subset)
    return found


def oracle_count(spec: ColoringSpec, color: EdgeColor, k: int) -> int:
    return len(oracle_enumerate(spec, color, k))
