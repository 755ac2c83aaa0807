"""Index theory for bijections between cofinite sets of naturals."""

from ._kernels import BACKEND
from .algebra import (
    compose,
    extend_to_permutation,
    factor_left,
    factor_right,
    inverse,
    permutation_sandwich_index,
    power,
    sandwich_identities,
)
from .errors import (
    HoleExceptionOverlap,
    IndexMismatch,
    MalformedMap,
    NegativeValue,
    NonZeroIndex,
    NotInjective,
    PBIndexError,
    PreconditionError,
    ValidationError,
    WindowTooSmall,
)
from .finite_sets import FiniteNatSet, card_identity_check, difference, intersection, union
from .near_bijection import (
    NearBijection,
    legacy_index,
    monoset_complement,
    range_complement,
    reconciliation_check,
    restrict_to_partial,
)
from .partial_bijection import (
    INFINITE,
    PartialBijection,
    Permutation,
    almost_equal,
    apply,
    codomain_complement,
    disagreement_set,
    identity,
    index,
    restrict,
    shift_map,
    structural_bound,
    transposition,
    validate_and_canonicalize,
)
from .quotient import U, GermClass, Ind, class_inv, class_mul, class_of, section, u_power

__version__ = "0.1.0"
