"""Interval sets, tableaux and symbols behind almost special Weyl group representations."""

from .basis_sets import (
    IntervalSet,
    brute_force_enumerate,
    catalan,
    descent_chain,
    enumerate_sets,
    fibre,
    growth_set,
    maximal_runs,
    multiplicity,
    reduce_set,
    saturate,
    validate,
)
from .errors import ConsistencyError, InvalidInput, NotAMember, NotRealizable, ResourceLimit
from .intervals import Interval, admissible_kappa, kappa, relate
from .symplectic import (
    F2Subspace,
    F2Vector,
    UnorderedSymbol,
    epsilon,
    epsilon_by_multiplicity,
    epsilon_rows,
    f_map,
    form,
    l_max,
    phi,
    shriek,
    span_parts,
    vector_of,
)
from .tableaux import (
    DistinguishedSymbol,
    DottedSet,
    PairTableau,
    ShiftedTableau,
    almost_special_symbols,
    dot,
    pairs_to_symbol,
    shift,
    symbol_to_pairs,
    tableau_to_pairs,
    undot,
    unshift,
)

__version__ = "0.1.0"
