"""The blow-up relation engine.

Expands a symbol by the two-term blow-up move, by the general multi-index
move (enumerating admissible index sets with their unique admissible
coset), and generates the relation rows presenting the tuple group of a
finite abelian group at a given dimension.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .abelian import AbelianGroup
from .errors import InputError
from .symbols import (
    Symbol,
    SymbolSum,
    canonicalize_symbol,
    construction_a,
    restrict_character,
)
from .zlinalg import IntMatrix

VANISHED_NONE = "none"
VANISHED_B1 = "B1"
VANISHED_EQUAL_WEIGHTS = "equal_weights"
VANISHED_COSET = "coset_condition"


@dataclass(frozen=True)
class ExpansionReport:
    """Result of one blow-up expansion.

    ``theta1``/``theta2`` hold the canonicalized sums; ``raw_theta1`` and
    ``raw_theta2`` keep the symbols exactly as the defining relation
    produces them, before any conjugation normalization.
    """

    theta1: SymbolSum
    theta2: SymbolSum
    raw_theta1: tuple[Symbol, ...]
    raw_theta2: tuple[Symbol, ...]
    vanished_by: str

    def total(self) -> SymbolSum:
        terms = dict(self.theta1.terms)
        for sym, c in self.theta2.terms.items():
            terms[sym] = terms.get(sym, 0) + c
        return SymbolSum(terms, _canonical=True)

    def to_json_obj(self):
        return {
            "theta1": self.theta1.to_json_obj(),
            "theta2": self.theta2.to_json_obj(),
            "vanished_by": self.vanished_by,
        }


def _has_inverse_pair(A: AbelianGroup, beta) -> bool:
    for i, a in enumerate(beta):
        neg = A.neg(a)
        rest = beta[:i] + beta[i + 1 :]
        if neg in rest:
            return True
    return False


def apply_b1(x: SymbolSum) -> SymbolSum:
    """Drop every symbol whose weights contain a character and its inverse."""
    kept = {
        sym: c
        for sym, c in x.terms.items()
        if not _has_inverse_pair(sym.subgroup.structure, sym.beta)
    }
    return SymbolSum(kept, _canonical=True)


def expand_b2(s: Symbol, i: int, j: int) -> ExpansionReport:
    """Blow-up expansion of a symbol at the weight pair ``(i, j)``."""
    beta = s.beta
    if not (0 <= i < len(beta)) or not (0 <= j < len(beta)) or i == j:
        raise InputError(f"invalid weight positions ({i}, {j})")
    A = s.subgroup.structure
    a1, a2 = beta[i], beta[j]
    rest = tuple(b for k, b in enumerate(beta) if k not in (i, j))

    raw_theta1: tuple[Symbol, ...] = ()
    if a1 != a2:
        raw_theta1 = (
            Symbol(
                group=s.group,
                subgroup=s.subgroup,
                field_label=s.field_label,
                beta=(a1, A.sub(a2, a1)) + rest,
                ambient_n=s.ambient_n,
            ),
            Symbol(
                group=s.group,
                subgroup=s.subgroup,
                field_label=s.field_label,
                beta=(a2, A.sub(a1, a2)) + rest,
                ambient_n=s.ambient_n,
            ),
        )

    diff = A.sub(a1, a2)
    span = A.subgroup_generated([diff])
    raw_theta2: tuple[Symbol, ...] = ()
    if not any(b in span for b in beta):
        Hbar, Kbar = construction_a(s.group, s.subgroup, s.field_label, [diff])
        bbar = tuple(
            restrict_character(s.subgroup, Hbar, b) for b in (a2,) + rest
        )
        raw_theta2 = (
            Symbol(
                group=s.group,
                subgroup=Hbar,
                field_label=Kbar,
                beta=bbar,
                ambient_n=s.ambient_n,
            ),
        )

    if not raw_theta1:
        vanished = VANISHED_EQUAL_WEIGHTS
    elif not raw_theta2:
        vanished = VANISHED_COSET
    elif _has_inverse_pair(A, beta):
        vanished = VANISHED_B1
    else:
        vanished = VANISHED_NONE
    return ExpansionReport(
        theta1=SymbolSum.of(*raw_theta1),
        theta2=SymbolSum.of(*raw_theta2),
        raw_theta1=raw_theta1,
        raw_theta2=raw_theta2,
        vanished_by=vanished,
    )


def expand_prop46(s: Symbol, j: int) -> SymbolSum:
    """Multi-index expansion acting on the first ``j`` weights of a symbol.

    Sums over admissible pairs of an index set and a zero-avoiding coset;
    each admissible index set determines at most one coset, but cosets are
    enumerated and filtered literally.
    """
    beta = s.beta
    if not (2 <= j <= len(beta)):
        raise InputError(f"j = {j} out of range for {len(beta)} weights")
    A = s.subgroup.structure
    elements = list(A.elements())
    out: dict[Symbol, int] = {}
    for size in range(1, j + 1):
        for I in itertools.combinations(range(j), size):
            i0 = I[0]
            diffs = [A.sub(beta[i], beta[i0]) for i in I[1:]]
            span = A.subgroup_generated(diffs)
            # enumerate cosets of the difference subgroup
            seen = set()
            for rep in elements:
                coset = frozenset(A.add(rep, u) for u in span)
                if coset in seen:
                    continue
                seen.add(coset)
                if A.zero() in coset:
                    continue
                if {i for i in range(j) if beta[i] in coset} != set(I):
                    continue
                if any(beta[k] in span for k in range(j, len(beta))):
                    continue
                if diffs:
                    Hbar, Kbar = construction_a(
                        s.group, s.subgroup, s.field_label, diffs
                    )
                else:
                    # singleton index set: nothing is blown down, keep the label
                    Hbar, Kbar = s.subgroup, s.field_label
                complement = [i for i in range(j) if i not in I]
                new_beta = (
                    (restrict_character(s.subgroup, Hbar, beta[i0]),)
                    + tuple(
                        restrict_character(
                            s.subgroup, Hbar, A.sub(beta[i], beta[i0])
                        )
                        for i in complement
                    )
                    + tuple(
                        restrict_character(s.subgroup, Hbar, beta[k])
                        for k in range(j, len(beta))
                    )
                )
                term = canonicalize_symbol(
                    Symbol(
                        group=s.group,
                        subgroup=Hbar,
                        field_label=Kbar,
                        beta=new_beta,
                        ambient_n=s.ambient_n,
                    )
                )
                out[term] = out.get(term, 0) + 1
    return SymbolSum(out, _canonical=True)


def relation_rows(A: AbelianGroup, n: int, j_max: int) -> IntMatrix:
    """Relation matrix over the tuple generators of ``A`` at dimension ``n``.

    One deduplicated row per generator, ``j <= j_max`` and choice of ``j``
    positions: the generator minus the sum of its transformed tuples, with
    coordinates indexed by the generator enumeration.
    """
    from .bng import enumerate_generators

    if not (2 <= j_max <= n):
        raise InputError(f"j_max = {j_max} must satisfy 2 <= j_max <= {n}")
    gens = enumerate_generators(A, n)
    index = {g: k for k, g in enumerate(gens)}
    rows = set()
    for gen in gens:
        for j in range(2, j_max + 1):
            for positions in itertools.combinations(range(n), j):
                head = [gen[p] for p in positions]
                tail = [gen[p] for p in range(n) if p not in positions]
                row = [0] * len(gens)
                row[index[gen]] += 1
                for t, a_i in enumerate(head):
                    if a_i in head[:t]:
                        continue
                    transformed = [
                        a_m if m == t else A.sub(a_m, a_i)
                        for m, a_m in enumerate(head)
                    ] + tail
                    row[index[tuple(sorted(transformed))]] -= 1
                if any(row):
                    rows.add(tuple(row))
    return IntMatrix.from_rows(sorted(rows), len(gens))
