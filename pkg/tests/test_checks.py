import random
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import canonical_family, random_spec

from ramsey43 import (
    BLUE,
    RED,
    WitnessKind,
    build,
    canonical_red_k5,
    counterfactual_zero_one_cliques,
    dihedral_orbit,
    disruption_witness,
    enumerate_mono,
    flip_edge,
    preset,
    render_diagram,
    standard_enumerate,
    symmetric_vertex,
    verify_canonical_red_family,
    verify_disruption_witnesses,
    verify_eight_common_neighbors,
    verify_flip_edges_blue_safe,
    verify_reflection_symmetry,
    verify_standard_reduction,
    verify_variant_a_examples,
    verify_variant_b_counts,
    verify_zero_one_counterfactual,
)
from ramsey43.coloring import FLIPS_42
from ramsey43.oracle import oracle_enumerate

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "docs" / "diagrams"

# Which edit disrupts each canonical red 5-clique, by family index.
WITNESS_TABLE = {
    **{i: ("edge", (i, i + 1)) for i in (4, 5, 6, 7, 13, 14, 15, 16, 23, 24, 30, 33, 39, 40)},
    **{i: ("edge", (i + 1, i + 2)) for i in (3, 12, 22, 29, 32, 38)},
    **{i: ("edge", (i + 22, i + 23)) for i in (1, 2, 8, 11, 17, 18, 19, 25, 26, 27, 28, 34, 35, 36, 37)},
    **{i: ("edge", (11, 32)) for i in (9, 10, 31)},
    **{i: ("vertex", 0) for i in (0, 20, 21, 41, 42)},
}


def test_canonical_red_k5_values():
    assert canonical_red_k5(0).vertices == (0, 1, 2, 22, 23)
    assert canonical_red_k5(1).vertices == (1, 2, 3, 23, 24)
    assert canonical_red_k5(41).vertices == (0, 20, 21, 41, 42)
    with pytest.raises(ValueError):
        canonical_red_k5(43)
    with pytest.raises(ValueError):
        canonical_red_k5(-1)


def test_verify_canonical_red_family():
    result = verify_canonical_red_family()
    assert result.passed, result.failures


def test_disruption_witness_examples():
    w = disruption_witness(4)
    assert (w.kind, w.detail) == (WitnessKind.FLIPPED_EDGE, (4, 5))
    w = disruption_witness(9)
    assert (w.kind, w.detail) == (WitnessKind.FLIPPED_EDGE, (11, 32))
    w = disruption_witness(0)
    assert (w.kind, w.detail) == (WitnessKind.DELETED_VERTEX, 0)
    with pytest.raises(ValueError):
        disruption_witness(43)


def test_disruption_witnesses_all_indices():
    result = verify_disruption_witnesses()
    assert result.passed, result.failures
    deleted = {i for i in range(43)
               if disruption_witness(i).kind is WitnessKind.DELETED_VERTEX}
    assert deleted == {0, 20, 21, 41, 42}


def test_witness_table_is_itself_valid():
    """The frozen per-index witness table covers all 43 tuples with edits that
    really lie inside them."""
    assert set(WITNESS_TABLE) == set(range(43))
    flips = set(FLIPS_42)
    for i, (kind, detail) in WITNESS_TABLE.items():
        verts = set(canonical_red_k5(i).vertices)
        if kind == "vertex":
            assert detail in verts, i
        else:
            a, b = sorted(x % 43 for x in detail)
            assert (a, b) in flips, i
            assert {a, b} <= verts, i


def test_symmetric_vertex_values():
    assert symmetric_vertex(43, 1, 2, 0) == 3
    assert symmetric_vertex(43, 1, 4, 7) == 41
    assert symmetric_vertex(43, 10, 20, 10) == 20  # endpoint maps to endpoint
    with pytest.raises(ValueError):
        symmetric_vertex(43, 5, 5, 1)


@given(st.integers(2, 64), st.data())
def test_symmetric_vertex_involution(n, data):
    a = data.draw(st.integers(0, n - 1))
    b = data.draw(st.integers(0, n - 1).filter(lambda x: x != a))
    u = data.draw(st.integers(0, n - 1))
    v = symmetric_vertex(n, a, b, u)
    assert 0 <= v < n
    assert symmetric_vertex(n, a, b, v) == u


def test_reflection_symmetry_exhaustive(cyc43):
    result = verify_reflection_symmetry(cyc43)
    assert result.passed, result.failures[:3]


def test_reflection_symmetry_sampled(cyc43):
    result = verify_reflection_symmetry(cyc43, samples=500, seed=11)
    assert result.passed


def test_reflection_symmetry_negative_control(variant_a):
    """An edited coloring violates the proposition at some flip-adjacent
    triple; the check reports it instead of passing."""
    result = verify_reflection_symmetry(variant_a)
    assert not result.passed
    assert result.failures


def test_eight_common_neighbors_cyc43(cyc43):
    result = verify_eight_common_neighbors(cyc43, 1)
    assert result.passed, result.failures
    from ramsey43 import common_color_neighbors

    assert common_color_neighbors(cyc43, BLUE, {1, 2}) == {5, 6, 7, 10, 36, 39, 40, 41}
    for a in range(43):
        assert verify_eight_common_neighbors(cyc43, a).passed, a


def test_eight_common_neighbors_with_vertex_zero(variant_a):
    from ramsey43 import common_color_neighbors

    assert common_color_neighbors(variant_a, BLUE, {4, 5}) == {8, 9, 10, 13, 39, 42, 0, 1}
    anchors = sorted(a for a, b in FLIPS_42 if b == a + 1)
    assert anchors == [4, 5, 6, 7, 13, 14, 15, 16, 23, 24, 30, 33, 39, 40, 41]
    for a in anchors:
        result = verify_eight_common_neighbors(variant_a, a)
        assert result.passed, (a, result.failures)


def test_flip_edges_blue_safe():
    result = verify_flip_edges_blue_safe()
    assert result.passed, result.failures


def test_zero_one_counterfactual_cliques():
    """Flipping (0, 1) blue while keeping vertex 0 creates blue 5-cliques;
    the exact set is frozen here and cross-checked against brute force."""
    found = {q.vertices for q in counterfactual_zero_one_cliques()}
    assert (0, 1, 4, 5, 39) in found
    assert (0, 1, 4, 5, 9) in found
    expected = {
        (0, 1, 4, 5, 9),
        (0, 1, 4, 5, 39),
        (0, 1, 5, 6, 9),
        (0, 1, 5, 6, 40),
        (0, 1, 5, 39, 40),
        (0, 1, 35, 39, 40),
    }
    assert found == expected
    spec = preset("variant-a")
    cf_spec = type(spec)(spec.order, spec.blue_lengths, spec.flips + ((0, 1),))
    brute = {t for t in oracle_enumerate(cf_spec, BLUE, 5) if 0 in t and 1 in t}
    assert found == brute
    assert verify_zero_one_counterfactual().passed


def test_dihedral_orbit_of_canonical_tuple():
    orbit = dihedral_orbit(43, (0, 1, 2, 22, 23))
    assert len(orbit) == 43
    assert orbit == {frozenset(t) for t in canonical_family()}
    assert frozenset({0, 20, 21, 41, 42}) in orbit  # reflection through vertex 0


def test_dihedral_orbit_contains_itself():
    assert frozenset({1, 5, 9}) in dihedral_orbit(12, (1, 5, 9))


def test_standard_enumerate_cyc43(cyc43):
    reps = standard_enumerate(cyc43, RED)
    assert [q.vertices for q in reps] == [
        (0, 1, 2, 22, 23),
        (1, 2, 3, 23, 24),
        (1, 2, 22, 23, 24),
    ]
    assert standard_enumerate(cyc43, BLUE) == []


def test_standard_enumerate_rejects_edited_or_even(exoo42):
    with pytest.raises(ValueError, match="circulant"):
        standard_enumerate(exoo42, RED)
    from ramsey43 import ColoringSpec

    even = build(ColoringSpec(12, frozenset({1, 2})))
    with pytest.raises(ValueError, match="odd"):
        standard_enumerate(even, RED)


def test_standard_reduction_cyc43(cyc43):
    result = verify_standard_reduction(cyc43)
    assert result.passed, result.failures


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_standard_reduction_random_circulants(seed):
    rng = random.Random(seed)
    spec = random_spec(rng, min_order=9, max_order=27, odd=True, circulant=True)
    result = verify_standard_reduction(build(spec))
    assert result.passed, result.failures


def test_render_diagram_known_row(cyc43):
    text = render_diagram(cyc43, BLUE, [1])
    lines = text.split("\n")
    assert lines[2] == "o  xxxx xx x   x x x    x x x   x xx xxxx  "
    assert lines[2].count("o") == 1
    assert len(lines) == 4 and lines[3] == ""  # header, units, row, trailing LF


def test_render_diagram_common_row(cyc43):
    text = render_diagram(cyc43, BLUE, [1, 2])
    e_row = text.split("\n")[4]
    marks = {col + 1 for col, ch in enumerate(e_row) if ch == "E"}
    assert marks == {5, 6, 7, 10, 36, 39, 40, 41}


def test_render_diagram_flip_marks(variant_a):
    text = render_diagram(variant_a, BLUE, [4, 5])
    row4, row5 = text.split("\n")[2:4]
    assert row4[3] == "o" and row4[4] == "X"  # columns 4 and 5
    assert row5[3] == "X" and row5[4] == "o"


def test_render_diagram_errors(cyc43, exoo42):
    with pytest.raises(ValueError, match="non-empty"):
        render_diagram(cyc43, BLUE, [])
    with pytest.raises(ValueError, match="not active"):
        render_diagram(exoo42, BLUE, [0])


def test_render_diagram_round_trip(variant_a):
    """Parsing the marks of a rendered row recovers the color neighborhood."""
    n = variant_a.order
    for v in (1, 4, 11, 32):
        for color in (RED, BLUE):
            row = render_diagram(variant_a, color, [v], mark_common=False).split("\n")[2]
            parsed = {col % n for col in range(1, n + 1) if row[col - 1] in "xX"}
            expected = {u for u in range(n) if u != v
                        and variant_a.color_of(v, u) is color}
            assert parsed == expected
            assert row[v - 1] == "o"


@pytest.mark.parametrize(
    "filename,preset_name,color,rows",
    [
        ("cyc43-blue-1.txt", "cyc43", BLUE, [1]),
        ("cyc43-blue-1-2.txt", "cyc43", BLUE, [1, 2]),
        ("cyc43-red-1-2.txt", "cyc43", RED, [1, 2]),
        ("variant-a-blue-4-5.txt", "variant-a", BLUE, [4, 5]),
        ("variant-a-blue-11-32.txt", "variant-a", BLUE, [11, 32]),
    ],
)
def test_diagram_golden_files(filename, preset_name, color, rows):
    golden = (GOLDEN_DIR / filename).read_text()
    assert render_diagram(build(preset(preset_name)), color, rows) == golden


def test_variant_a_examples_check():
    result = verify_variant_a_examples()
    assert result.passed, result.failures


def test_variant_b_counts_report():
    result = verify_variant_b_counts()
    assert result.passed, result.failures
    assert any("red=1" in note and "blue=11" in note for note in result.notes)
    assert any("cannot remove blue" in note for note in result.notes)
