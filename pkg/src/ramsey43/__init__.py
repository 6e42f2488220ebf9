"""Two-colorings of complete graphs with exact monochromatic 5-clique counts.

Core pieces: circulant coloring recipes and edit operators (`coloring`), a
bitmask clique engine (`cliques`), an independent brute-force oracle
(`oracle`), replayable structure checks (`checks`), flip local search
(`search`), and text certificates plus a CLI (`certificate`, `cli`).
"""

from .coloring import (
    BLUE,
    RED,
    BLUE_LENGTHS_43,
    Coloring,
    ColoringSpec,
    EdgeColor,
    FLIPS_42,
    PRESETS,
    SpecError,
    build,
    delete_vertex,
    dist,
    flip_edge,
    preset,
)
from .cliques import (
    Clique,
    CliqueReport,
    cliques_through_edge,
    common_color_neighbors,
    count_mono,
    enumerate_mono,
    mono_report,
)
from .checks import (
    CanonicalRedK5,
    CheckResult,
    DisruptionWitness,
    WitnessKind,
    canonical_red_k5,
    counterfactual_zero_one_cliques,
    dihedral_orbit,
    disruption_witness,
    render_diagram,
    run_suite,
    standard_enumerate,
    symmetric_vertex,
    verify_canonical_red_family,
    verify_color_partition,
    verify_disruption_witnesses,
    verify_eight_common_neighbors,
    verify_flip_edges_blue_safe,
    verify_reflection_symmetry,
    verify_standard_reduction,
    verify_variant_a_examples,
    verify_variant_b_counts,
    verify_zero_one_counterfactual,
)
from .search import (
    FlipDelta,
    MoveRecord,
    Policy,
    SearchState,
    Snapshot,
    best_single_flip,
    flip_delta,
    local_search,
    objective,
)
from .certificate import (
    Certificate,
    CertificateError,
    ClaimCheck,
    certify,
    check_claims,
    decode_certificate,
    encode_certificate,
)
from .oracle import oracle_count, oracle_enumerate

__version__ = "0.1.0"
