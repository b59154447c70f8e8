"""Finite racks, 4-Legendrian structures, and Legendrian front colorings."""

__version__ = "0.1.0"

from .perms import (
    PermGroup,
    burnside_pair_count,
    centralizer,
    compose,
    cycle_string,
    diagonal_pair_orbits,
    identity,
    inverse,
    parse_cycles,
    subgroup_closure,
    symmetric_group,
)
from .racks import (
    RackError,
    RackFlags,
    RackTable,
    automorphism_group,
    find_isomorphism,
    inner_group,
    make_family,
    rack_flags,
    validate_rack,
)
from .fourleg import (
    FourLegRack,
    FourLegStructure,
    check_kimura_axioms,
    classify_structures,
    derive_down_maps,
    enumerate_structures,
    gl_center,
    make_fourleg,
)
from .census import census_counts, dedupe_racks, enumerate_racks
from .front import (
    ClassicalInvariants,
    FrontCode,
    FrontError,
    Presentation,
    builtin_fixtures,
    classical_invariants,
    fundamental_presentation,
    stabilize,
    validate_front,
)
from .coloring import (
    ReducedLoop,
    brute_force_colorings,
    count_colorings,
    perm_fast_count,
    permutation_fourleg,
    reduce_cusp_word,
    verify_indistinguishability,
)
