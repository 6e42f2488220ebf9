"""Flip-based local search minimizing the number of monochromatic 5-cliques.

The move set is single-edge recolorings of the current coloring.  Move costs
are evaluated locally: flipping an edge only creates or destroys 5-cliques
that contain it, so each candidate costs two small neighborhood counts rather
than a full recount.  Runs are deterministic given (start, budget, seed,
policy).
"""

from __future__ import annotations

import enum
import random
from collections import deque
from dataclasses import dataclass, field

from .coloring import BLUE, RED, Coloring, ColoringSpec, build, flip_edge
from .cliques import _above, _count_extensions, count_mono

K = 5  # clique size the objective counts


class Policy(enum.Enum):
    GREEDY = "greedy"
    TABU = "tabu"
    RANDOM_RESTART = "restart"

    @classmethod
    def parse(cls, name: str) -> "Policy":
        for member in cls:
            if member.value == name.strip().lower():
                return member
        raise ValueError(f"unknown policy {name!r}; choose from "
                         f"{[m.value for m in cls]}")


def objective(c: Coloring) -> int:
    """Total monochromatic 5-cliques, both colors weighted equally."""
    return count_mono(c, RED, K) + count_mono(c, BLUE, K)


@dataclass(frozen=True)
class FlipDelta:
    """Exact change in (red, blue) 5-clique counts if the edge were flipped."""

    edge: tuple[int, int]
    d_red: int
    d_blue: int

    @property
    def total(self) -> int:
        return self.d_red + self.d_blue


def _cliques_through(c: Coloring, color, a: int, b: int) -> int:
    # number of (K-2)-cliques of the color inside the common neighborhood
    masks = c.mask_for(color)
    return _count_extensions(masks, masks[a] & masks[b], K - 2)


def flip_delta(c: Coloring, a: int, b: int, k: int = K) -> FlipDelta:
    """Delta from 5-cliques through (a, b) only; no coloring is materialized."""
    if k != K:
        raise ValueError(f"only k={K} objectives are supported")
    old = c.color_of(a, b)
    lost = _cliques_through(c, old, a, b)
    # Gained cliques pair the flipped edge with (K-2)-cliques of the new color
    # in its common neighborhood, which the flip itself does not alter.
    gained = _cliques_through(c, old.opposite, a, b)
    edge = (a, b) if a < b else (b, a)
    if old is RED:
        return FlipDelta(edge, -lost, gained)
    return FlipDelta(edge, gained, -lost)


def best_single_flip(
    c: Coloring, red_to_blue_only: bool = False
) -> tuple[tuple[int, int], FlipDelta]:
    """Scan all eligible edges; return the flip minimizing the total delta,
    ties broken by lexicographically least edge."""
    best: FlipDelta | None = None
    for a, b in c.active_pairs():
        if red_to_blue_only and c.is_blue(a, b):
            continue
        d = flip_delta(c, a, b)
        if best is None or d.total < best.total:
            best = d
    if best is None:
        raise ValueError("no eligible edges to flip")
    return best.edge, best


@dataclass(frozen=True)
class MoveRecord:
    step: int  # 1-based index of the applied move
    edge: tuple[int, int]
    d_red: int
    d_blue: int
    red: int
    blue: int
    objective: int

    @property
    def improving(self) -> bool:
        return self.d_red + self.d_blue < 0

    def log_line(self) -> str:
        a, b = self.edge
        return (f"step={self.step} flip={a}-{b} red={self.red} "
                f"blue={self.blue} objective={self.objective}")


@dataclass(frozen=True)
class Snapshot:
    coloring: Coloring
    objective: int


@dataclass
class SearchState:
    coloring: Coloring
    objective: int
    trace: list[MoveRecord]
    seed: int
    best: Snapshot
    evaluations: int = 0
    restarts: int = 0

    def log(self) -> str:
        """One LF-terminated record per improving applied move."""
        lines = [m.log_line() for m in self.trace if m.improving]
        return "".join(line + "\n" for line in lines)


def _random_spec(order: int, deletions: frozenset[int], rng: random.Random) -> ColoringSpec:
    # any coloring is an all-red base plus flips of its blue edges
    active = [v for v in range(order) if v not in deletions]
    flips = []
    for i, u in enumerate(active):
        for v in active[i + 1 :]:
            if rng.random() < 0.5:
                flips.append((u, v))
    return ColoringSpec(order, frozenset(), tuple(flips), deletions)


def local_search(
    start: ColoringSpec,
    budget: int,
    seed: int,
    policy: Policy,
    *,
    red_to_blue_only: bool = False,
    tabu_tenure: int = 50,
    recount_every: int = 100,
) -> SearchState:
    """Run the policy for at most `budget` flip evaluations.

    greedy: apply the best improving flip each round, stop at a local optimum.
    tabu: apply the best non-tabu flip even when worsening; recently flipped
    edges stay tabu for `tabu_tenure` moves.
    restart: greedy, but local optima draw a fresh seeded random coloring.

    A truncated scan (budget exhausted mid-round) applies no move.  Every
    `recount_every` applied moves the incremental objective is validated
    against a full recount.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    rng = random.Random(seed)
    coloring = build(start)
    red = count_mono(coloring, RED, K)
    blue = count_mono(coloring, BLUE, K)
    current = red + blue
    state = SearchState(coloring, current, [], seed, Snapshot(coloring, current))
    tabu: deque[tuple[int, int]] = deque(maxlen=tabu_tenure)

    while state.evaluations < budget:
        best: FlipDelta | None = None
        truncated = False
        for a, b in coloring.active_pairs():
            if red_to_blue_only and coloring.is_blue(a, b):
                continue
            if policy is Policy.TABU and (a, b) in tabu:
                continue
            if state.evaluations >= budget:
                truncated = True
                break
            d = flip_delta(coloring, a, b)
            state.evaluations += 1
            if best is None or d.total < best.total:
                best = d
        if truncated or best is None:
            break
        if policy is not Policy.TABU and best.total >= 0:
            if policy is Policy.RANDOM_RESTART and state.evaluations < budget:
                coloring = build(_random_spec(start.order, start.deletions, rng))
                red = count_mono(coloring, RED, K)
                blue = count_mono(coloring, BLUE, K)
                current = red + blue
                state.restarts += 1
                if current < state.best.objective:
                    state.best = Snapshot(coloring, current)
                continue
            break
        coloring = flip_edge(coloring, *best.edge)
        red += best.d_red
        blue += best.d_blue
        current = red + blue
        record = MoveRecord(len(state.trace) + 1, best.edge, best.d_red,
                            best.d_blue, red, blue, current)
        state.trace.append(record)
        if policy is Policy.TABU:
            tabu.append(best.edge)
        if current < state.best.objective:
            state.best = Snapshot(coloring, current)
        if recount_every and record.step % recount_every == 0:
            assert current == objective(coloring), "incremental objective drifted"

    state.coloring = coloring
    state.objective = current
    return state
