"""Replayable correctness checks for the order-43 constructions.

Each check re-derives one structural fact about the stock colorings (the
canonical red 5-clique family, its disruption by the edits, reflection
symmetry, common-neighbor patterns, flip safety) and returns a
:class:`CheckResult` with explicit witnesses on failure, so the fast clique
engine and the hand-derivable structure cross-validate each other.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from itertools import combinations

from .coloring import (
    BLUE,
    RED,
    Coloring,
    EdgeColor,
    FLIPS_42,
    build,
    dist,
    flip_edge,
    preset,
)
from .cliques import (
    Clique,
    _collect_extensions,
    cliques_through_edge,
    common_color_neighbors,
    count_mono,
    enumerate_mono,
)
from .oracle import oracle_count

_MAX_REPORTED_FAILURES = 20


@dataclass
class CheckResult:
    name: str
    passed: bool
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}"
        if not self.passed and self.failures:
            line += f": {self.failures[0]}"
            if len(self.failures) > 1:
                line += f" (+{len(self.failures) - 1} more)"
        return line


def _result(name: str, failures: list[str], notes: list[str] | None = None) -> CheckResult:
    return CheckResult(name, not failures, failures[:_MAX_REPORTED_FAILURES],
                       notes or [])


# ---------------------------------------------------------------------------
# The canonical red 5-clique family of the order-43 circulant coloring.

@dataclass(frozen=True)
class CanonicalRedK5:
    """The i-th member of the rotation family {i, i+1, i+2, i+22, i+23} mod 43."""

    i: int
    vertices: tuple[int, ...]


def canonical_red_k5(i: int) -> CanonicalRedK5:
    if not (0 <= i <= 42):
        raise ValueError(f"index must be in [0, 42], got {i}")
    verts = tuple(sorted((i % 43, (i + 1) % 43, (i + 2) % 43, (i + 22) % 43, (i + 23) % 43)))
    return CanonicalRedK5(i, verts)


def verify_canonical_red_family() -> CheckResult:
    """The 43 canonical tuples are distinct red 5-cliques of cyc43 and are
    exactly its red 5-cliques."""
    c = build(preset("cyc43"))
    failures: list[str] = []
    family = [canonical_red_k5(i) for i in range(43)]
    for member in family:
        bad = [(u, v) for u, v in combinations(member.vertices, 2)
               if c.color_of(u, v) is not RED]
        if bad:
            failures.append(f"tuple i={member.i} has non-red edges {bad}")
    lengths = {dist(43, u, v) for u, v in combinations(family[0].vertices, 2)}
    if not lengths <= {1, 2, 20, 21}:
        failures.append(f"tuple i=0 has unexpected edge lengths {sorted(lengths)}")
    distinct = {frozenset(m.vertices) for m in family}
    if len(distinct) != 43:
        failures.append(f"only {len(distinct)} distinct tuples out of 43")
    enumerated = {frozenset(q.vertices) for q in enumerate_mono(c, RED, 5)}
    if distinct != enumerated:
        extra = enumerated - distinct
        missing = distinct - enumerated
        failures.append(f"family mismatch: extra={sorted(map(sorted, extra))} "
                        f"missing={sorted(map(sorted, missing))}")
    return _result("canonical-red-family", failures,
                   [f"{len(enumerated)} red 5-cliques"])


class WitnessKind(enum.Enum):
    DELETED_VERTEX = "deleted-vertex"
    FLIPPED_EDGE = "flipped-edge"


@dataclass(frozen=True)
class DisruptionWitness:
    """Why canonical red 5-clique i is no longer red in exoo42: a deleted
    vertex it uses, or one of its edges that was flipped blue."""

    i: int
    kind: WitnessKind
    detail: int | tuple[int, int]


def disruption_witness(i: int) -> DisruptionWitness:
    spec = preset("exoo42")
    verts = canonical_red_k5(i).vertices
    deleted = sorted(set(verts) & spec.deletions)
    if deleted:
        return DisruptionWitness(i, WitnessKind.DELETED_VERTEX, deleted[0])
    flips = set(spec.flips)
    for pair in combinations(verts, 2):
        if pair in flips:
            return DisruptionWitness(i, WitnessKind.FLIPPED_EDGE, pair)
    raise LookupError(
        f"canonical red 5-clique {i} survives the edits: {verts} "
        "contains no deleted vertex and no flipped edge"
    )


def verify_disruption_witnesses() -> CheckResult:
    """Every canonical red 5-clique is disrupted in exoo42, so no red
    5-cliques remain."""
    spec = preset("exoo42")
    flips = set(spec.flips)
    failures: list[str] = []
    for i in range(43):
        verts = canonical_red_k5(i).vertices
        try:
            w = disruption_witness(i)
        except LookupError as exc:
            failures.append(str(exc))
            continue
        if w.kind is WitnessKind.DELETED_VERTEX:
            if w.detail not in spec.deletions or w.detail not in verts:
                failures.append(f"i={i}: bogus deleted-vertex witness {w.detail}")
        else:
            a, b = w.detail
            if w.detail not in flips or a not in verts or b not in verts:
                failures.append(f"i={i}: bogus flipped-edge witness {w.detail}")
    remaining = count_mono(build(spec), RED, 5)
    if remaining:
        failures.append(f"exoo42 still has {remaining} red 5-cliques")
    return _result("disruption-witnesses", failures, ["43/43 tuples disrupted"])


# ---------------------------------------------------------------------------
# Reflection symmetry of circulant colorings.

def symmetric_vertex(n: int, a: int, b: int, u: int) -> int:
    """The mirror image of u under the reflection that swaps a and b:
    v = a + b - u (mod n). Self-inverse in u."""
    if a == b:
        raise ValueError("reflection axis needs two distinct vertices")
    return (a + b - u) % n


def verify_reflection_symmetry(
    c: Coloring, samples: int | None = None, seed: int = 0
) -> CheckResult:
    """In a circulant coloring, edge (x, a) matches the color of (y, b) and
    (x, b) matches (y, a), where y mirrors x across (a, b).

    Exhaustive over all (a, b, x) when samples is None, otherwise a seeded
    random sample.  Edited colorings are checked as-is; violations are
    reported, not raised, so this doubles as a negative control.
    """
    n = c.order
    verts = c.active_vertices()
    failures: list[str] = []
    checked = 0

    def check(a: int, b: int, x: int) -> None:
        nonlocal checked
        y = symmetric_vertex(n, a, b, x)
        if not c.is_active(y):
            return
        checked += 1
        if c.color_of(x, a) is not c.color_of(y, b) or c.color_of(x, b) is not c.color_of(y, a):
            failures.append(f"(a={a}, b={b}, x={x}, y={y})")

    if samples is None:
        for a, b in combinations(verts, 2):
            for x in verts:
                if x != a and x != b:
                    check(a, b, x)
    else:
        rng = random.Random(seed)
        while checked < samples:
            a, b, x = rng.sample(verts, 3)
            check(a, b, x)
    return _result("reflection-symmetry", failures, [f"{checked} triples checked"])


# ---------------------------------------------------------------------------
# Common-neighbor patterns of consecutive vertices.

def _eight_formula(n: int, a: int) -> set[int]:
    return {(a + d) % n for d in (4, 5, 6, 9, -8, -5, -4, -3)}


def verify_eight_common_neighbors(c: Coloring, a: int) -> CheckResult:
    """Vertices a and a+1 share exactly eight blue neighbors, at offsets
    {+4, +5, +6, +9, -8, -5, -4, -3}, and (when the coloring carries flips)
    no pair of the eight is a flipped edge.

    Holds for the stock blue-length table; a coloring with vertex 0 deleted
    will miss members of the formula set, so pass the vertex-0-kept variant.
    """
    n = c.order
    b = (a + 1) % n
    expected = _eight_formula(n, a)
    actual = common_color_neighbors(c, BLUE, {a, b})
    failures: list[str] = []
    if actual != expected:
        failures.append(
            f"a={a}: missing={sorted(expected - actual)} extra={sorted(actual - expected)}"
        )
    flips = set(c.spec.flips)
    if flips:
        flipped_inside = [p for p in combinations(sorted(expected), 2) if p in flips]
        if flipped_inside:
            failures.append(f"a={a}: flipped edges inside the eight: {flipped_inside}")
    return _result(f"eight-common-neighbors[a={a}]", failures)


def verify_flip_edges_blue_safe() -> CheckResult:
    """None of the sixteen flipped edges of exoo42 lies in a blue 5-clique."""
    c = build(preset("exoo42"))
    failures: list[str] = []
    for a, b in FLIPS_42:
        found = cliques_through_edge(c, BLUE, a, b, 5)
        if found:
            failures.append(f"edge ({a}, {b}) lies in {[q.vertices for q in found]}")
    return _result("flip-edges-blue-safe", failures, ["16/16 flipped edges clean"])


def counterfactual_zero_one_cliques() -> list[Clique]:
    """Blue 5-cliques through edge (0, 1) if it were flipped blue with vertex 0
    kept: the edge choice in the construction is not arbitrary."""
    c = flip_edge(build(preset("variant-a")), 0, 1)
    return cliques_through_edge(c, BLUE, 0, 1, 5)


def verify_zero_one_counterfactual() -> CheckResult:
    found = {q.vertices for q in counterfactual_zero_one_cliques()}
    required = {(0, 1, 4, 5, 39), (0, 1, 4, 5, 9)}
    failures = [f"expected blue 5-clique {t} not found" for t in sorted(required - found)]
    return _result("zero-one-counterfactual", failures,
                   [f"blue 5-cliques through (0, 1): {sorted(found)}"])


# ---------------------------------------------------------------------------
# Dihedral symmetry reduction.

def dihedral_orbit(n: int, q) -> set[frozenset[int]]:
    """Orbit of a vertex set under v -> v + t and v -> t - v (mod n)."""
    verts = tuple(q.vertices) if isinstance(q, Clique) else tuple(q)
    orbit: set[frozenset[int]] = set()
    for t in range(n):
        orbit.add(frozenset((v + t) % n for v in verts))
        orbit.add(frozenset((t - v) % n for v in verts))
    return orbit


def standard_enumerate(c: Coloring, color: EdgeColor) -> list[Clique]:
    """Representatives of all monochromatic 5-cliques of a pure circulant
    coloring, up to rotations and reflections.

    A clique is standard when it contains vertex 1 and its minimum circular
    gap is realized clockwise from vertex 1 and is at most n // 5 (five gaps
    summing to n force the minimum that low).  Every 5-clique normalizes to a
    standard one by rotating its tightest pair onto vertex 1.
    """
    if not c.spec.is_circulant:
        raise ValueError("standard enumeration requires a pure circulant coloring")
    n = c.order
    if n % 2 == 0:
        raise ValueError("standard enumeration requires odd order")
    bound = n // 5
    masks = c.mask_for(color)
    subs: list[tuple[int, ...]] = []
    _collect_extensions(masks, [], masks[1], 4, subs)
    reps: list[Clique] = []
    for t in subs:
        verts = tuple(sorted(t + (1,)))
        d = min(dist(n, u, v) for u, v in combinations(verts, 2))
        if d <= bound and any(v != 1 and (v - 1) % n == d for v in verts):
            reps.append(Clique(verts, color))
    reps.sort(key=lambda q: q.vertices)
    return reps


def verify_standard_reduction(c: Coloring) -> CheckResult:
    """Orbit expansion of the standard representatives reproduces the full
    brute-force enumeration, for both colors."""
    failures: list[str] = []
    notes: list[str] = []
    for color in (RED, BLUE):
        reps = standard_enumerate(c, color)
        expanded: set[frozenset[int]] = set()
        for rep in reps:
            expanded |= dihedral_orbit(c.order, rep)
        full = {frozenset(q.vertices) for q in enumerate_mono(c, color, 5)}
        if expanded != full:
            failures.append(
                f"{color}: {len(reps)} representatives expand to {len(expanded)} "
                f"cliques but enumeration finds {len(full)}"
            )
        notes.append(f"{color}: {len(reps)} representatives, {len(full)} cliques")
    return _result("standard-reduction", failures, notes)


# ---------------------------------------------------------------------------
# Text diagrams of color neighborhoods.

def render_diagram(
    c: Coloring,
    color: EdgeColor,
    rows,
    mark_common: bool | None = None,
) -> str:
    """Fixed-width chart of the color neighborhoods of the listed vertices.

    Columns 1..n stand for vertices 1, ..., n-1, 0 (column j is vertex
    j mod n).  Each row shows 'o' at its own vertex, 'x' at vertices joined
    to it in the color ('X' if via a flipped edge), spaces elsewhere.  With
    two or more rows a final 'E' line marks the columns where every row has
    a mark.  Lines are LF-terminated ASCII.
    """
    rows = list(rows)
    if not rows:
        raise ValueError("rows must be non-empty")
    n = c.order
    for v in rows:
        if not c.is_active(v):
            raise ValueError(f"row vertex {v} is not active")
    tens = "".join(
        "0" if col == 1 else (str(col // 10 % 10) if col % 10 == 0 else " ")
        for col in range(1, n + 1)
    )
    units = "".join(str(col % 10) for col in range(1, n + 1))
    flips = set(c.spec.flips)
    masks = c.mask_for(color)
    lines = [tens, units]
    body: list[str] = []
    for v in rows:
        chars = []
        for col in range(1, n + 1):
            u = col % n
            if u == v:
                chars.append("o")
            elif c.is_active(u) and masks[v] >> u & 1:
                pair = (u, v) if u < v else (v, u)
                chars.append("X" if pair in flips else "x")
            else:
                chars.append(" ")
        body.append("".join(chars))
    lines.extend(body)
    if mark_common is None:
        mark_common = len(rows) >= 2
    if mark_common:
        lines.append("".join(
            "E" if all(line[col] in "xX" for line in body) else " "
            for col in range(n)
        ))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Exact counts for the undeleted variants, engine vs. brute force.

VARIANT_A_RED_K5S = frozenset({
    (0, 1, 2, 22, 23),
    (0, 1, 21, 22, 23),
    (0, 1, 21, 22, 42),
    (0, 20, 21, 22, 42),
})

VARIANT_A_BLUE_K5S = frozenset({
    (0, 6, 11, 15, 32),
    (0, 6, 11, 17, 32),
    (0, 8, 11, 17, 32),
    (0, 11, 15, 26, 32),
    (0, 11, 17, 26, 32),
    (0, 11, 17, 28, 32),
    (0, 11, 26, 32, 35),
    (0, 11, 26, 32, 37),
    (0, 11, 28, 32, 37),
})


def verify_variant_a_examples() -> CheckResult:
    """variant-a has exactly the four red and nine blue 5-cliques."""
    c = build(preset("variant-a"))
    failures: list[str] = []
    red = {q.vertices for q in enumerate_mono(c, RED, 5)}
    blue = {q.vertices for q in enumerate_mono(c, BLUE, 5)}
    if red != VARIANT_A_RED_K5S:
        failures.append(f"red set mismatch: {sorted(red)}")
    if blue != VARIANT_A_BLUE_K5S:
        failures.append(f"blue set mismatch: {sorted(blue)}")
    return _result("variant-a-examples", failures,
                   [f"red={len(red)} blue={len(blue)}"])


def verify_variant_b_counts() -> CheckResult:
    """Exact variant-b counts, cross-checked engine vs. brute force.

    Flipping a red edge blue cannot destroy blue 5-cliques, so variant-b's
    blue count is at least variant-a's nine; the report carries the computed
    values rather than trusting any quoted figure.
    """
    spec = preset("variant-b")
    c = build(spec)
    failures: list[str] = []
    red = count_mono(c, RED, 5)
    blue = count_mono(c, BLUE, 5)
    oracle_red = oracle_count(spec, RED, 5)
    oracle_blue = oracle_count(spec, BLUE, 5)
    if (red, blue) != (oracle_red, oracle_blue):
        failures.append(
            f"engine ({red}, {blue}) disagrees with brute force ({oracle_red}, {oracle_blue})"
        )
    red_set = {q.vertices for q in enumerate_mono(c, RED, 5)}
    if red_set != {(0, 1, 2, 22, 23)}:
        failures.append(f"red set is {sorted(red_set)}")
    floor = len(VARIANT_A_BLUE_K5S)
    if blue < floor:
        failures.append(
            f"blue count {blue} below the monotonicity floor {floor}"
        )
    notes = [
        f"variant-b exact counts: red={red} blue={blue} (engine and brute force agree)",
        f"red->blue flips cannot remove blue 5-cliques, so blue >= variant-a's {floor}; "
        f"measured excess over the floor: {blue - floor}",
    ]
    return _result("variant-b-counts", failures, notes)


def verify_color_partition(c: Coloring) -> CheckResult:
    """Every active pair is exactly one color, symmetrically; masks carry no
    inactive vertices or loops."""
    failures: list[str] = []
    for v in range(c.order):
        blue, red = c.blue_mask[v], c.red_mask[v]
        if not c.is_active(v):
            if blue or red:
                failures.append(f"inactive vertex {v} has mask bits")
            continue
        if blue & red:
            failures.append(f"vertex {v}: colors overlap")
        if (blue | red) != c.active & ~(1 << v):
            failures.append(f"vertex {v}: masks do not cover the active set")
        for u in c.active_vertices():
            if u != v and (blue >> u & 1) != (c.blue_mask[u] >> v & 1):
                failures.append(f"asymmetric edge ({u}, {v})")
    return _result("color-partition", failures)


# ---------------------------------------------------------------------------
# Suite assembly.

def _consecutive_flip_anchors() -> list[int]:
    return sorted(a for a, b in FLIPS_42 if b == a + 1)


def run_suite(spec) -> list[CheckResult]:
    """All checks applicable to the given recipe (richest for the presets)."""
    c = build(spec)
    results = [verify_color_partition(c)]
    if spec == preset("cyc43"):
        results.append(verify_canonical_red_family())
        results.append(verify_reflection_symmetry(c))
        eight = [verify_eight_common_neighbors(c, a) for a in range(43)]
        results.append(_merge("eight-common-neighbors[all a]", eight))
        results.append(verify_standard_reduction(c))
    elif spec == preset("exoo42"):
        results.append(verify_disruption_witnesses())
        results.append(verify_flip_edges_blue_safe())
        allowed = build(preset("variant-a"))  # vertex 0 kept
        eight = [verify_eight_common_neighbors(allowed, a)
                 for a in _consecutive_flip_anchors()]
        results.append(_merge("eight-common-neighbors[flip anchors]", eight))
        results.append(verify_zero_one_counterfactual())
    elif spec == preset("variant-a"):
        results.append(verify_variant_a_examples())
        eight = [verify_eight_common_neighbors(c, a)
                 for a in _consecutive_flip_anchors()]
        results.append(_merge("eight-common-neighbors[flip anchors]", eight))
        results.append(verify_zero_one_counterfactual())
    elif spec == preset("variant-b"):
        results.append(verify_variant_b_counts())
    elif spec.is_circulant and spec.order % 2 == 1 and spec.order >= 5:
        results.append(verify_reflection_symmetry(c))
        results.append(verify_standard_reduction(c))
    return results


def _merge(name: str, parts: list[CheckResult]) -> CheckResult:
    failures = [f for part in parts for f in part.failures]
    return _result(name, failures, [f"{sum(p.passed for p in parts)}/{len(parts)} passed"])
