import random
import time

import pytest

from ramsey43 import BLUE, RED, ColoringSpec, build, preset
from ramsey43.oracle import oracle_count


@pytest.fixture(scope="session")
def cyc43():
    return build(preset("cyc43"))


@pytest.fixture(scope="session")
def exoo42():
    return build(preset("exoo42"))


@pytest.fixture(scope="session")
def variant_a():
    return build(preset("variant-a"))


@pytest.fixture(scope="session")
def variant_b():
    return build(preset("variant-b"))


@pytest.fixture(scope="session")
def oracle_counts():
    """Brute-force k=5 counts and elapsed seconds per preset, computed once."""
    results = {}
    for name in ("cyc43", "exoo42", "variant-a", "variant-b"):
        spec = preset(name)
        start = time.perf_counter()
        red = oracle_count(spec, RED, 5)
        red_elapsed = time.perf_counter() - start
        start = time.perf_counter()
        blue = oracle_count(spec, BLUE, 5)
        blue_elapsed = time.perf_counter() - start
        results[name] = {
            "red": red,
            "blue": blue,
            "red_elapsed": red_elapsed,
            "blue_elapsed": blue_elapsed,
        }
    return results


def random_spec(
    rng: random.Random,
    min_order: int = 8,
    max_order: int = 25,
    odd: bool = False,
    circulant: bool = False,
) -> ColoringSpec:
    """Seeded random recipe with roughly balanced colors (keeps clique counts
    small enough for brute-force cross-checks)."""
    n = rng.randrange(min_order, max_order + 1)
    if odd and n % 2 == 0:
        n = n + 1 if n < max_order else n - 1
    half = n // 2
    size = rng.randint(max(1, half // 2 - 1), min(half, half // 2 + 2))
    lengths = frozenset(rng.sample(range(1, half + 1), size))
    if circulant:
        return ColoringSpec(n, lengths)
    deletions = frozenset(rng.sample(range(n), rng.randint(0, 2)))
    flips = set()
    for _ in range(rng.randint(0, 8)):
        a, b = rng.sample(range(n), 2)
        flips.add((min(a, b), max(a, b)))
    return ColoringSpec(n, lengths, tuple(sorted(flips)), deletions)


def canonical_family() -> set[tuple[int, ...]]:
    """The 43 rotations of {0, 1, 2, 22, 23} mod 43, as sorted tuples."""
    return {
        tuple(sorted((i % 43, (i + 1) % 43, (i + 2) % 43, (i + 22) % 43, (i + 23) % 43)))
        for i in range(43)
    }
