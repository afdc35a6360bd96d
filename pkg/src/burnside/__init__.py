"""Exact symbol calculus for equivariant Burnside groups of finite groups."""

from .abelian import (
    AbelianGroup,
    Projection,
    SubgroupOfAbelian,
    generates,
    kernel_of_characters,
    quotient_with_projection,
    wedge_equivalent,
)
from .bng import (
    BnGClass,
    BnGPresentation,
    enumerate_generators,
    equal_classes,
    group_structure,
    project_symbol,
    project_sum,
    reduce_class,
)
from .errors import (
    BurnsideError,
    DomainError,
    InputError,
    InvariantError,
    PreconditionError,
    ProvenanceError,
    SizeError,
)
from .groups import (
    FiniteGroup,
    SubgroupRef,
    apply_dual,
    character_action,
    transport_characters,
)
from .relations import (
    ExpansionReport,
    apply_b1,
    expand_b2,
    expand_prop46,
    relation_rows,
)
from .symbols import (
    Atom,
    ConstrA,
    Symbol,
    SymbolSum,
    canonicalize_symbol,
    combine,
    conjugate_symbol,
    construction_a,
    restrict_character,
)
from .zlinalg import (
    IntMatrix,
    cokernel_invariants,
    det,
    hermite_normal_form,
    row_space_equal,
    smith_normal_form,
)

__all__ = [
    "AbelianGroup",
    "Atom",
    "BnGClass",
    "BnGPresentation",
    "BurnsideError",
    "ConstrA",
    "DomainError",
    "ExpansionReport",
    "FiniteGroup",
    "InputError",
    "IntMatrix",
    "InvariantError",
    "PreconditionError",
    "Projection",
    "ProvenanceError",
    "SizeError",
    "SubgroupOfAbelian",
    "SubgroupRef",
    "Symbol",
    "SymbolSum",
    "apply_b1",
    "apply_dual",
    "canonicalize_symbol",
    "character_action",
    "cokernel_invariants",
    "combine",
    "conjugate_symbol",
    "construction_a",
    "det",
    "enumerate_generators",
    "equal_classes",
    "expand_b2",
    "expand_prop46",
    "generates",
    "group_structure",
    "hermite_normal_form",
    "kernel_of_characters",
    "project_symbol",
    "project_sum",
    "quotient_with_projection",
    "reduce_class",
    "relation_rows",
    "restrict_character",
    "row_space_equal",
    "smith_normal_form",
    "transport_characters",
    "wedge_equivalent",
]

__version__ = "0.1.0"
