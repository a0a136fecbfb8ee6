"""Local testability of finite semigroups given by multiplication tables."""

from .automaton import Dfa, parse_dfa, transition_semigroup
from .catalog import (
    CatalogEntry,
    catalog,
    enumerate_semigroups,
    random_transformation_semigroups,
    transformation_subsemigroup,
)
from .decision import (
    Verdict,
    check_ses_identities,
    common_unit_violation,
    is_locally_testable,
    is_locally_testable_semilattice,
)
from .errors import (
    AssociativityError,
    ClosureTooLarge,
    InvariantError,
    NotLocallyTestable,
    ParseError,
    SemigroupError,
)
from .identities import (
    holds_alpha,
    holds_beta,
    holds_gamma,
    in_variety_B,
    in_variety_T,
    is_locally_idempotent,
    min_level,
    word_probe,
)
from .level import LevelBreakdown, alpha_bound, divisor_bound, generator_levels, level
from .semigroup import (
    IdempotentBlocks,
    PowerProfile,
    ProductChain,
    Semigroup,
    format_semigroup,
    idempotents,
    multiply_word,
    parse_semigroup,
    power_profile,
    product_chain,
    zero_blocks,
)

__version__ = "0.1.0"
