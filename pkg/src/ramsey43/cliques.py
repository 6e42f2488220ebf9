"""Exact enumeration and counting of monochromatic k-cliques.

The engine extends partial cliques recursively, intersecting per-vertex color
bitmasks and restricting candidates to vertices above the last chosen one, so
every clique is produced exactly once in ascending lexicographic order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .coloring import BLUE, Coloring, EdgeColor


@dataclass(frozen=True)
class Clique:
    """A vertex set asserted monochromatic in one color; vertices sorted."""

    vertices: tuple[int, ...]
    color: EdgeColor


@dataclass(frozen=True)
class CliqueReport:
    k: int
    red_count: int
    blue_count: int
    red_cliques: tuple[Clique, ...] | None
    blue_cliques: tuple[Clique, ...] | None
    elapsed: float  # seconds


def _above(v: int) -> int:
    # bitmask of all vertices strictly greater than v
    return -(1 << (v + 1))


def _count_extensions(masks: tuple[int, ...], cand: int, need: int) -> int:
    """Number of `need`-subsets of the candidate mask forming a clique."""
    if need == 1:
        return cand.bit_count()
    total = 0
    m = cand
    while m:
        if m.bit_count() < need:
            break
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        total += _count_extensions(masks, cand & masks[v] & _above(v), need - 1)
    return total


def _collect_extensions(
    masks: tuple[int, ...],
    prefix: list[int],
    cand: int,
    need: int,
    out: list[tuple[int, ...]],
) -> None:
    if need == 0:
        out.append(tuple(prefix))
        return
    m = cand
    while m:
        if m.bit_count() < need:
            break
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        prefix.append(v)
        _collect_extensions(masks, prefix, cand & masks[v] & _above(v), need - 1, out)
        prefix.pop()


def _check_k(c: Coloring, k: int) -> None:
    if not (2 <= k <= c.active_count):
        raise ValueError(f"k must be in [2, {c.active_count}], got {k}")


def enumerate_mono(c: Coloring, color: EdgeColor, k: int) -> list[Clique]:
    """All k-cliques of the given color among active vertices, in ascending
    lexicographic order."""
    _check_k(c, k)
    masks = c.mask_for(color)
    out: list[tuple[int, ...]] = []
    for v in c.active_vertices():
        _collect_extensions(masks, [v], masks[v] & _above(v), k - 1, out)
    return [Clique(t, color) for t in out]


def count_mono(c: Coloring, color: EdgeColor, k: int) -> int:
    """Count-only variant of enumerate_mono (no materialization)."""
    _check_k(c, k)
    masks = c.mask_for(color)
    total = 0
    for v in c.active_vertices():
        total += _count_extensions(masks, masks[v] & _above(v), k - 1)
    return total


def common_color_neighbors(c: Coloring, color: EdgeColor, vs) -> set[int]:
    """Active vertices outside vs joined to every member of vs in the color."""
    vs = list(vs)
    if not vs:
        raise ValueError("vs must be non-empty")
    masks = c.mask_for(color)
    m = c.active
    for v in vs:
        if not c.is_active(v):
            raise ValueError(f"vertex {v} is not active")
        m &= masks[v]
    result = set()
    while m:
        low = m & -m
        result.add(low.bit_length() - 1)
        m ^= low
    return result


def cliques_through_edge(
    c: Coloring, color: EdgeColor, a: int, b: int, k: int
) -> list[Clique]:
    """All monochromatic k-cliques of the color containing both a and b.

    Computed locally: (k-2)-cliques inside the common color neighborhood of
    {a, b} are completed with the edge. The edge must already have the color.
    """
    if c.color_of(a, b) is not color:
        raise ValueError(f"edge ({a}, {b}) is not {color}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    masks = c.mask_for(color)
    common = masks[a] & masks[b]
    subs: list[tuple[int, ...]] = []
    _collect_extensions(masks, [], common, k - 2, subs)
    pair = (a, b) if a < b else (b, a)
    cliques = [Clique(tuple(sorted(pair + t)), color) for t in subs]
    cliques.sort(key=lambda q: q.vertices)
    return cliques


def mono_report(c: Coloring, k: int, materialize: bool = False) -> CliqueReport:
    """Count both colors (optionally keeping the clique lists) with timing."""
    start = time.perf_counter()
    if materialize:
        red = enumerate_mono(c, EdgeColor.RED, k)
        blue = enumerate_mono(c, BLUE, k)
        report = CliqueReport(k, len(red), len(blue), tuple(red), tuple(blue),
                              time.perf_counter() - start)
    else:
        r = count_mono(c, EdgeColor.RED, k)
        b = count_mono(c, BLUE, k)
        report = CliqueReport(k, r, b, None, None, time.perf_counter() - start)
    return report
