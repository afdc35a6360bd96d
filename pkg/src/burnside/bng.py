"""The tuple group of a finite abelian group at a fixed dimension.

Generators are size-``n`` multisets of characters generating the group
(zero entries allowed); the presentation uses the two-position relation
rows, which suffice.  Classes get a unique normal form from the Smith
decomposition of the relation matrix, so equality is a tuple comparison.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from functools import cached_property

from .abelian import AbelianGroup
from .errors import DomainError, InputError, ProvenanceError, SizeError
from .symbols import Atom, ConstrA, Symbol
from .zlinalg import IntMatrix, smith_normal_form

DEFAULT_MAX_CANDIDATES = 10**6


def _candidate_bound() -> int:
    value = os.environ.get("BURNSIDE_MAX_CANDIDATES")
    if value is None:
        return DEFAULT_MAX_CANDIDATES
    try:
        return int(value)
    except ValueError as exc:
        raise InputError(
            f"BURNSIDE_MAX_CANDIDATES must be an integer, got {value!r}"
        ) from exc


def enumerate_generators(A: AbelianGroup, n: int, max_candidates=None):
    """All size-``n`` multisets of characters of ``A`` that generate ``A``.

    Zero entries are allowed; the output order is deterministic (sorted
    tuples of character vectors, lexicographic).
    """
    if n < 1:
        raise InputError(f"dimension n = {n} must be positive")
    if max_candidates is None:
        max_candidates = _candidate_bound()
    count = math.comb(A.order + n - 1, n)
    if count > max_candidates:
        raise SizeError(
            f"{count} candidate multisets exceed the bound {max_candidates}"
        )
    gens = []
    for combo in itertools.combinations_with_replacement(A.elements(), n):
        if len(A.subgroup_generated(combo)) == A.order:
            gens.append(combo)
    return gens


def _relation_matrix(A: AbelianGroup, n: int, j_max: int) -> IntMatrix:
    from .relations import relation_rows

    if n == 1:
        return IntMatrix.from_rows([], len(enumerate_generators(A, 1)))
    return relation_rows(A, n, j_max)


@dataclass(eq=False)
class BnGPresentation:
    """Generators and relation matrix of the tuple group, with cached SNF."""

    A: AbelianGroup
    n: int

    @cached_property
    def generators(self) -> list[tuple]:
        return enumerate_generators(self.A, self.n)

    @cached_property
    def generator_index(self) -> dict:
        return {g: k for k, g in enumerate(self.generators)}

    @cached_property
    def relation_matrix(self) -> IntMatrix:
        return _relation_matrix(self.A, self.n, 2)

    @cached_property
    def snf_data(self):
        return smith_normal_form(self.relation_matrix)

    @cached_property
    def _divisors(self) -> list[int]:
        S, _, _ = self.snf_data
        diag = S.diagonal()
        return [
            diag[i] if i < len(diag) else 0 for i in range(len(self.generators))
        ]

    def structure(self) -> tuple[int, list[int]]:
        divisors = self._divisors
        free_rank = sum(1 for d in divisors if d == 0)
        torsion = [d for d in divisors if d > 1]
        return free_rank, torsion

    def coerce_generator(self, multiset) -> tuple:
        key = tuple(sorted(self.A.reduce(c) for c in multiset))
        if key not in self.generator_index:
            raise InputError(f"tuple {key} is not a generator (must generate A)")
        return key


@dataclass(frozen=True)
class BnGClass:
    """Normal-form coordinates of a class: free part exact, torsion reduced."""

    free: tuple[int, ...]
    torsion: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)

    def to_json_obj(self):
        return {"free": list(self.free), "torsion": list(self.torsion)}


def group_structure(A: AbelianGroup, n: int) -> tuple[int, list[int]]:
    """Structure (free rank, torsion) of the tuple group at dimension ``n``."""
    return BnGPresentation(A, n).structure()


def reduce_class(P: BnGPresentation, x) -> BnGClass:
    """Normal form of an integer combination of generators.

    ``x`` maps generator multisets to coefficients.  Two combinations get
    the same normal form exactly when they differ by a relation row.
    """
    vec = [0] * len(P.generators)
    items = x.items() if isinstance(x, dict) else x
    for gen, coeff in items:
        vec[P.generator_index[P.coerce_generator(gen)]] += int(coeff)
    _, _, V = P.snf_data
    image = [
        sum(vec[i] * V.entries[i][k] for i in range(len(vec)))
        for k in range(len(vec))
    ]
    free = []
    torsion = []
    for y, d in zip(image, P._divisors):
        if d == 0:
            free.append(y)
        elif d > 1:
            torsion.append(y % d)
    return BnGClass(free=tuple(free), torsion=tuple(torsion))


def equal_classes(P: BnGPresentation, x, y) -> bool:
    """Whether two combinations of generators define the same class."""
    return reduce_class(P, x) == reduce_class(P, y)


def _resolve_degree(label) -> int:
    if isinstance(label, Atom):
        return label.alg_closure_degree
    if isinstance(label, ConstrA):
        if any(any(x for x in c) for c in label.chars):
            raise ProvenanceError(
                "algebraic closure degree is unresolved for a construction "
                "label with nonzero characters"
            )
        return _resolve_degree(label.base)
    raise ProvenanceError(f"unknown field label {label!r}")


def project_symbol(s: Symbol, P: BnGPresentation) -> dict:
    """Image of a symbol in the tuple group, as generator coefficients.

    Symbols over a proper subgroup map to zero; full-subgroup symbols map
    to the algebraic-closure degree times the zero-padded weight tuple.
    """
    G = s.group
    if not G.is_abelian:
        raise DomainError("projection is defined for abelian ambient groups")
    if s.ambient_n != P.n:
        raise InputError(
            f"symbol dimension {s.ambient_n} != presentation dimension {P.n}"
        )
    if len(s.subgroup.elements) != G.order:
        return {}
    if s.subgroup.structure.invariant_factors != P.A.invariant_factors:
        raise DomainError(
            "symbol character group does not match the presentation group"
        )
    coeff = _resolve_degree(s.field_label)
    padded = tuple(
        sorted(s.beta + (P.A.zero(),) * (P.n - len(s.beta)))
    )
    return {padded: coeff}


def project_sum(x, P: BnGPresentation) -> dict:
    """Image of a symbol sum: sum of the projections of its terms."""
    out: dict = {}
    for sym, coeff in x.terms.items():
        for gen, c in project_symbol(sym, P).items():
            out[gen] = out.get(gen, 0) + coeff * c
    return out
