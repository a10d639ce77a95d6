"""Signed-index string lattices, weight functions and boolean maps with a
prescribed number of non-negative partial sums."""

from .lattice import (
    N_MAX,
    Lattice,
    LatticeString,
    ParseError,
    Shape,
    ShapeError,
    bottom,
    complement,
    covers,
    downset,
    enumerate_strings,
    is_antichain,
    join,
    lattice,
    leq,
    make_string,
    meet,
    parse_string,
    rank,
    render_string,
    to_subset,
    top,
    upset,
)
from .regions import Region, check_lemma_properties, classify, region_size, special
from .boolmaps import (
    Basis,
    BasisError,
    BooleanMap,
    check_basis,
    check_bm_axioms,
    map_from_basis,
    positive_count,
)
from .weights import (
    WeightFunction,
    alpha,
    eta,
    gamma,
    induced_map,
    maximizer,
    minimizer,
    sample_random,
    search_realizing,
    sigma,
    validate,
)
from .synthesis import (
    decompose,
    rank_levels,
    synthesize_basis,
    synthesize_map,
    verify_synthesis,
)
from .census import (
    RealMultiset,
    classify_signature,
    count_nonneg_subsets_mitm,
    count_nonneg_subsets_naive,
)

__version__ = "0.1.0"
