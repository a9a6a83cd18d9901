"""Mobile sets, extended mobile sets, and i-components in the binary
hypercube: constructions, verification predicates, and exact searches."""

from .budget import BudgetExceededError, SearchBudget
from .constructions import (
    StandardVector,
    grid36,
    hamming_code,
    icomponent_from_pair,
    linear_ems_iterated,
    linear_extension,
    linear_extension_checked,
    linear_ms,
    pair_from_icomponent,
    pair_index,
    perfect_pair,
    standard_partition,
    standard_vectors,
    star,
    theorem_ms,
)
from .core import (
    DistGraph,
    Isometry,
    Word,
    WordSet,
    affine_rank,
    apply_isometry,
    ball,
    components,
    distance,
    distance_graph,
    extend,
    is_bipartite,
    is_one_code,
    is_regular,
    neighborhood,
    parity,
    puncture,
    sphere,
    spherical_neighborhood,
)
from .exactcover import CoverInstance, CoverSolution, solve_all, solve_first
from .mobility import (
    EmsConditionReport,
    ReducibilityWitness,
    SplitSearchResult,
    ems_conditions,
    find_alternative_ems,
    find_alternative_ms,
    is_ems,
    is_icomponent,
    is_mobile,
    is_mobile_pair,
    is_reducible_ems,
    is_splittable_ems,
    min_ems_cardinality,
    random_parity_pair,
    reducibility_witnesses,
    split_search,
)
from .symmetry import (
    compose,
    find_coordinate_permutation,
    identity,
    invert,
    is_transitive,
    stabilizer,
)

__version__ = "0.1.0"
