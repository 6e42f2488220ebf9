"""Circulant two-colorings of complete graphs and their edit operators.

A coloring is described by a small declarative recipe (:class:`ColoringSpec`):
a circulant base coloring given by the set of blue distances, followed by a
list of single-edge flips, followed by vertex deletions.  Materialized
colorings (:class:`Coloring`) are immutable; the edit operators return fresh
values, so colorings are safe to share across concurrent readers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

MAX_ORDER = 64  # one machine word per neighbor mask keeps the clique engine branch-free


class SpecError(ValueError):
    """A coloring recipe violates its own constraints."""


class EdgeColor(enum.Enum):
    RED = "red"
    BLUE = "blue"

    @property
    def opposite(self) -> "EdgeColor":
        return EdgeColor.BLUE if self is EdgeColor.RED else EdgeColor.RED

    def __str__(self) -> str:
        return self.value


RED = EdgeColor.RED
BLUE = EdgeColor.BLUE


def dist(n: int, a: int, b: int) -> int:
    """Circular distance between distinct vertices a, b on n points: the unique
    m in [1, n//2] with a-b = +-m (mod n)."""
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError(f"vertex out of range for order {n}: ({a}, {b})")
    if a == b:
        raise ValueError("distance undefined for equal vertices")
    d = (a - b) % n
    return min(d, n - d)


def _normalize_pair(pair: tuple[int, int]) -> tuple[int, int]:
    a, b = pair
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class ColoringSpec:
    """Declarative recipe: circulant base, then edge flips, then deletions.

    blue_lengths must lie in {1, ..., order//2}; the complementary lengths are
    red.  Flips are unordered vertex pairs, applied in list order (each toggles
    one edge).  Deleted vertices keep their labels; they are only masked out.
    """

    order: int
    blue_lengths: frozenset[int]
    flips: tuple[tuple[int, int], ...] = ()
    deletions: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "blue_lengths", frozenset(self.blue_lengths))
        object.__setattr__(self, "deletions", frozenset(self.deletions))
        object.__setattr__(
            self, "flips", tuple(_normalize_pair(tuple(p)) for p in self.flips)
        )
        n = self.order
        if not (2 <= n <= MAX_ORDER):
            raise SpecError(f"order must be in [2, {MAX_ORDER}], got {n}")
        for length in self.blue_lengths:
            if not (1 <= length <= n // 2):
                raise SpecError(f"blue length {length} outside [1, {n // 2}]")
        seen: set[tuple[int, int]] = set()
        for a, b in self.flips:
            if a == b:
                raise SpecError(f"degenerate flip edge ({a}, {b})")
            if not (0 <= a < n and 0 <= b < n):
                raise SpecError(f"flip vertex out of range: ({a}, {b})")
            if (a, b) in seen:
                raise SpecError(f"duplicate flip ({a}, {b})")
            seen.add((a, b))
        for v in self.deletions:
            if not (0 <= v < n):
                raise SpecError(f"deleted vertex out of range: {v}")

    @property
    def red_lengths(self) -> frozenset[int]:
        return frozenset(range(1, self.order // 2 + 1)) - self.blue_lengths

    @property
    def is_circulant(self) -> bool:
        """True when the recipe is a pure circulant coloring (no edits)."""
        return not self.flips and not self.deletions


@dataclass(frozen=True)
class Coloring:
    """Materialized two-coloring with per-vertex, per-color neighbor bitmasks.

    Invariant: for every active pair u != v exactly one of the two masks holds
    the edge, symmetrically; masks never contain inactive vertices or loops.
    """

    order: int
    active: int  # bitmask of surviving vertices
    blue_mask: tuple[int, ...]
    red_mask: tuple[int, ...]
    spec: ColoringSpec

    def is_active(self, v: int) -> bool:
        return 0 <= v < self.order and bool(self.active >> v & 1)

    def active_vertices(self) -> list[int]:
        return [v for v in range(self.order) if self.active >> v & 1]

    @property
    def active_count(self) -> int:
        return self.active.bit_count()

    def mask_for(self, color: EdgeColor) -> tuple[int, ...]:
        return self.blue_mask if color is BLUE else self.red_mask

    def is_blue(self, a: int, b: int) -> bool:
        self._require_edge(a, b)
        return bool(self.blue_mask[a] >> b & 1)

    def color_of(self, a: int, b: int) -> EdgeColor:
        return BLUE if self.is_blue(a, b) else RED

    def _require_edge(self, a: int, b: int) -> None:
        if a == b:
            raise ValueError(f"no edge from vertex {a} to itself")
        if not (self.is_active(a) and self.is_active(b)):
            raise ValueError(f"edge ({a}, {b}) touches an inactive vertex")

    def active_pairs(self):
        """Active edges (a, b) with a < b, lexicographic."""
        verts = self.active_vertices()
        for i, a in enumerate(verts):
            for b in verts[i + 1 :]:
                yield a, b


def build(spec: ColoringSpec) -> Coloring:
    """Materialize a recipe: circulant base, then flips, then deletions."""
    n = spec.order
    blue = [0] * n
    red = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if dist(n, u, v) in spec.blue_lengths:
                blue[u] |= 1 << v
                blue[v] |= 1 << u
            else:
                red[u] |= 1 << v
                red[v] |= 1 << u
    for a, b in spec.flips:
        for m in (blue, red):
            m[a] ^= 1 << b
            m[b] ^= 1 << a
    active = (1 << n) - 1
    for v in spec.deletions:
        active &= ~(1 << v)
        blue[v] = red[v] = 0
    if spec.deletions:
        for u in range(n):
            blue[u] &= active
            red[u] &= active
    return Coloring(n, active, tuple(blue), tuple(red), spec)


def flip_edge(c: Coloring, a: int, b: int) -> Coloring:
    """New coloring with the one edge (a, b) toggled; the input is unchanged.

    Provenance is kept exact: the pair is appended to the recipe's flip list,
    or removed from it if already present (a double flip restores the recipe).
    """
    c._require_edge(a, b)
    blue = list(c.blue_mask)
    red = list(c.red_mask)
    for m in (blue, red):
        m[a] ^= 1 << b
        m[b] ^= 1 << a
    pair = _normalize_pair((a, b))
    if pair in c.spec.flips:
        flips = tuple(p for p in c.spec.flips if p != pair)
    else:
        flips = c.spec.flips + (pair,)
    return Coloring(c.order, c.active, tuple(blue), tuple(red), replace(c.spec, flips=flips))


def delete_vertex(c: Coloring, v: int) -> Coloring:
    """New coloring with v masked out of the active set and all masks.

    Remaining vertex labels are unchanged (no relabeling)."""
    if not c.is_active(v):
        raise ValueError(f"vertex {v} is not active")
    active = c.active & ~(1 << v)
    blue = [m & active for m in c.blue_mask]
    red = [m & active for m in c.red_mask]
    blue[v] = red[v] = 0
    spec = replace(c.spec, deletions=c.spec.deletions | {v})
    return Coloring(c.order, active, tuple(blue), tuple(red), spec)


# The stock order-43 construction and its variants.
BLUE_LENGTHS_43 = frozenset({3, 4, 5, 6, 8, 9, 11, 15, 17, 19})

# Fifteen length-1 edges plus the single length-21 edge (11, 32).
FLIPS_42: tuple[tuple[int, int], ...] = (
    (4, 5),
    (5, 6),
    (6, 7),
    (7, 8),
    (11, 32),
    (13, 14),
    (14, 15),
    (15, 16),
    (16, 17),
    (23, 24),
    (24, 25),
    (30, 31),
    (33, 34),
    (39, 40),
    (40, 41),
    (41, 42),
)

PRESETS: dict[str, ColoringSpec] = {
    "cyc43": ColoringSpec(43, BLUE_LENGTHS_43),
    "exoo42": ColoringSpec(43, BLUE_LENGTHS_43, FLIPS_42, frozenset({0})),
    "variant-a": ColoringSpec(43, BLUE_LENGTHS_43, FLIPS_42),
    "variant-b": ColoringSpec(43, BLUE_LENGTHS_43, FLIPS_42 + ((21, 22),)),
}


def preset(name: str) -> ColoringSpec:
    """Look up a named construction: cyc43, exoo42, variant-a, variant-b."""
    key = name.strip().lower().replace("_", "-")
    if key in ("varianta", "variantb"):
        key = f"variant-{key[-1]}"
    try:
        return PRESETS[key]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
