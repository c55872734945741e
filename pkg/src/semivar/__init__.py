"""Identity criteria, finite oracles and congruence machinery for
semigroup varieties, plus a verification CLI."""

from .words import (
    PartitionLambda,
    Word,
    apply_permutation,
    apply_substitution,
    content,
    contains_instance,
    first_letter,
    is_balanced,
    last_letter,
    letter,
    letter_counts,
    occurrences,
    partition_of,
    render_word,
    word,
)
from .varieties import (
    COM,
    LZ,
    P,
    PREV,
    RZ,
    SL,
    T,
    CheckResult,
    Equation,
    Identity,
    UnsupportedQueryError,
    Variety,
    ZeroIdentity,
    cm,
    holds,
    holds_in_join,
    join_contains_p_scan,
    parse_identity,
    parse_variety,
    zero_reduced,
)
from .semigroups import FiniteSemigroup, builtin, direct_product, satisfies, validate
from .deduction import (
    Bounds,
    DeductionResult,
    IdentitySystem,
    SapirSystem,
    consistency_scan,
    derive,
    derive_power_chain,
    parse_system_lines,
    power_chain_goal,
    refute,
    sapir_system,
    sapir_with_verbal,
    system,
    validate_trace,
)
from .gsets import (
    GCongruence,
    GSet,
    build_word_gset,
    check_modular_instance,
    congruence_from_pairs,
    enumerate_congruences,
    is_congruence,
    replay_balanced_identity,
)
from .lattices import (
    ElementClassification,
    FiniteLattice,
    LatticeCongruence,
    boolean,
    catalog,
    chain,
    check_lower_modular_lift,
    check_upper_modular_preservation,
    classify_all,
    classify_element,
    dual,
    enumerate_lattice_congruences,
    from_covers,
    from_order,
    is_zero_distributive,
    m3,
    n5,
    principal_coideal,
    product,
    quotient,
)

__version__ = "0.1.0"
