"""Symbol generators of the equivariant symbol group and their arithmetic.

A symbol is a triple (abelian subgroup, formal field label, weight
multiset) inside an ambient finite group, at a fixed ambient dimension.
Field labels are syntactic terms: an atom carrying transcendence-degree
and algebraic-closure-degree metadata, or a construction node recording
which characters were fed to the kernel construction.  Equality of labels
is structural; no attempt is made to decide isomorphism of the underlying
algebras.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .abelian import AbelianGroup
from .errors import InputError, InvariantError
from .groups import (
    FiniteGroup,
    SubgroupRef,
    apply_dual,
    character_action,
    transport_characters,
)


@dataclass(frozen=True)
class Atom:
    """A leaf field label: a named function field with inert metadata."""

    name: str
    trdeg: int
    alg_closure_degree: int = 1
    num_components: int = 1

    def __post_init__(self):
        if self.trdeg < 0:
            raise InvariantError("trdeg must be nonnegative")
        if self.alg_closure_degree < 1 or self.num_components < 1:
            raise InvariantError("degree and component count must be positive")


@dataclass(frozen=True)
class ConstrA:
    """Label for the field produced by the kernel construction.

    Records the base label and the characters the construction was applied
    to; each adjoined parameter raises the transcendence degree by one.
    Characters are stored sign-normalized and sorted, so labels built from
    the same character subgroup data compare equal.
    """

    base: "FieldLabel"
    chars: tuple[tuple[int, ...], ...]

    @property
    def trdeg(self) -> int:
        return self.base.trdeg + len(self.chars)


FieldLabel = Atom | ConstrA


def normalize_chars(A: AbelianGroup, chars) -> tuple[tuple[int, ...], ...]:
    """Canonical form of a character list: sign-normalized, sorted."""
    out = []
    for c in chars:
        c = A.reduce(c)
        out.append(min(c, A.neg(c)))
    return tuple(sorted(out))


def field_to_json_obj(f: FieldLabel):
    if isinstance(f, Atom):
        return {
            "atom": {
                "name": f.name,
                "trdeg": f.trdeg,
                "deg": f.alg_closure_degree,
                "components": f.num_components,
            }
        }
    return {
        "constr_a": {
            "base": field_to_json_obj(f.base),
            "chars": [list(c) for c in f.chars],
        }
    }


def field_from_json_obj(obj) -> FieldLabel:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise InputError("field label must be an object with one key")
    if "atom" in obj:
        a = obj["atom"]
        try:
            return Atom(
                name=a["name"],
                trdeg=a["trdeg"],
                alg_closure_degree=a.get("deg", 1),
                num_components=a.get("components", 1),
            )
        except (KeyError, TypeError, InvariantError) as exc:
            raise InputError(f"bad atom field label: {exc}") from exc
    if "constr_a" in obj:
        node = obj["constr_a"]
        try:
            base = field_from_json_obj(node["base"])
            chars = tuple(tuple(int(x) for x in c) for c in node["chars"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad constr_a field label: {exc}") from exc
        return ConstrA(base=base, chars=chars)
    raise InputError('field label key must be "atom" or "constr_a"')


@dataclass(frozen=True, eq=False)
class Symbol:
    """A generator symbol inside an ambient group at dimension ``ambient_n``."""

    group: FiniteGroup = field(compare=False)
    subgroup: SubgroupRef
    field_label: FieldLabel
    beta: tuple[tuple[int, ...], ...]
    ambient_n: int

    def __post_init__(self):
        A = self.subgroup.structure
        beta = tuple(A.reduce(b) for b in self.beta)
        object.__setattr__(self, "beta", beta)
        if len(beta) != self.ambient_n - self.field_label.trdeg:
            raise InvariantError(
                f"weight count {len(beta)} != n - trdeg = "
                f"{self.ambient_n - self.field_label.trdeg}"
            )
        if any(all(x == 0 for x in b) for b in beta):
            raise InvariantError("weights must be nonzero characters")
        if len(A.subgroup_generated(beta)) != A.order:
            raise InvariantError("weights do not generate the character group")

    def key(self):
        return (self.subgroup.elements, self.field_label, self.beta, self.ambient_n)

    def __hash__(self):
        return hash((id(self.group),) + self.key())

    def __eq__(self, other):
        return (
            isinstance(other, Symbol)
            and self.group is other.group
            and self.key() == other.key()
        )

    def to_json_obj(self):
        return {
            "subgroup": list(self.subgroup.elements),
            "field": field_to_json_obj(self.field_label),
            "beta": [list(b) for b in self.beta],
            "n": self.ambient_n,
        }

    @staticmethod
    def from_json_obj(group: FiniteGroup, obj) -> "Symbol":
        for key in ("subgroup", "field", "beta", "n"):
            if key not in obj:
                raise InputError(f'symbol JSON is missing "{key}"')
        sub = group.subgroup(obj["subgroup"])
        try:
            return Symbol(
                group=group,
                subgroup=sub,
                field_label=field_from_json_obj(obj["field"]),
                beta=tuple(tuple(int(x) for x in b) for b in obj["beta"]),
                ambient_n=int(obj["n"]),
            )
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad symbol JSON: {exc}") from exc

    @staticmethod
    def from_json(group: FiniteGroup, text: str) -> "Symbol":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid symbol JSON: {exc}") from exc
        return Symbol.from_json_obj(group, obj)


class SymbolSum:
    """A finite integer combination of canonical symbols."""

    __slots__ = ("terms",)

    def __init__(self, terms=None, _canonical=False):
        data: dict[Symbol, int] = {}
        if terms:
            for sym, coeff in (
                terms.items() if isinstance(terms, dict) else terms
            ):
                if not _canonical:
                    sym = canonicalize_symbol(sym)
                coeff = int(coeff)
                if coeff:
                    data[sym] = data.get(sym, 0) + coeff
                    if not data[sym]:
                        del data[sym]
        self.terms = data

    @staticmethod
    def zero() -> "SymbolSum":
        return SymbolSum()

    @staticmethod
    def of(*symbols: Symbol) -> "SymbolSum":
        return SymbolSum([(s, 1) for s in symbols])

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: _term_sort_key(kv[0]))

    def __eq__(self, other):
        return isinstance(other, SymbolSum) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"SymbolSum({len(self.terms)} terms)"

    def to_json_obj(self):
        return [
            {"symbol": sym.to_json_obj(), "coeff": coeff}
            for sym, coeff in self.items()
        ]


def _term_sort_key(sym: Symbol):
    return (sym.subgroup.elements, sym.beta, _field_sort_key(sym.field_label))


def _field_sort_key(f: FieldLabel):
    if isinstance(f, Atom):
        return (0, f.name, f.trdeg, f.alg_closure_degree, f.num_components)
    return (1, _field_sort_key(f.base), f.chars)


def combine(x: SymbolSum, y: SymbolSum, cx: int, cy: int) -> SymbolSum:
    """The combination ``cx*x + cy*y`` with canonical keys merged."""
    terms = {sym: cx * c for sym, c in x.terms.items()}
    for sym, c in y.terms.items():
        terms[sym] = terms.get(sym, 0) + cy * c
    return SymbolSum(terms, _canonical=True)


def conjugate_symbol(s: Symbol, g: int) -> Symbol:
    """Transport a symbol along conjugation by ``g`` (field label kept)."""
    G = s.group
    dst = G.subgroup(G.conj(g, h) for h in s.subgroup.elements)
    mat = transport_characters(G, s.subgroup, dst, g)
    facs = dst.structure.invariant_factors
    return Symbol(
        group=G,
        subgroup=dst,
        field_label=s.field_label,
        beta=tuple(apply_dual(mat, facs, b) for b in s.beta),
        ambient_n=s.ambient_n,
    )


def canonicalize_symbol(s: Symbol) -> Symbol:
    """Canonical representative of a symbol under the conjugation relations.

    First the subgroup is replaced by its conjugacy-class representative via
    the least conjugating element, transporting the weights; then the weight
    multiset is replaced by the lexicographically least element of its orbit
    under the normalizer action.  Idempotent.
    """
    G = s.group
    rep, conjugator = G.class_representative(s.subgroup.elements)
    if rep != s.subgroup.elements:
        s = conjugate_symbol(s, conjugator)
    H = s.subgroup
    facs = H.structure.invariant_factors
    mats = []
    seen = set()
    for g in H.normalizer:
        mat = character_action(G, g, H)
        key = tuple(tuple(row) for row in mat)
        if key not in seen:
            seen.add(key)
            mats.append(mat)
    best = min(
        tuple(sorted(apply_dual(mat, facs, b) for b in s.beta)) for mat in mats
    )
    if best == s.beta:
        return s
    return Symbol(
        group=G,
        subgroup=H,
        field_label=s.field_label,
        beta=best,
        ambient_n=s.ambient_n,
    )


def construction_a(
    G: FiniteGroup, H: SubgroupRef, K: FieldLabel, chars
) -> tuple[SubgroupRef, ConstrA]:
    """Kernel construction: cut ``H`` down to the joint kernel of ``chars``.

    The returned subgroup is the honest intersection of kernels inside
    ``G`` (with its normalizer recomputed there); the field part is purely
    formal and only records the construction.
    """
    A = H.structure
    chars = [A.reduce(c) for c in chars]
    kernel = [
        h
        for h in H.elements
        if all(H.char_value(c, h) == 0 for c in chars)
    ]
    Hbar = G.subgroup(kernel)
    Kbar = ConstrA(base=K, chars=normalize_chars(A, chars))
    return Hbar, Kbar


def restrict_character(H: SubgroupRef, Hbar: SubgroupRef, char) -> tuple[int, ...]:
    """Restriction of a character of ``H`` to a subgroup ``Hbar`` of it."""
    A = H.structure
    char = A.reduce(char)
    Abar = Hbar.structure
    e = A.exponent
    weights = [e // n for n in A.invariant_factors]
    out = []
    for b, m in zip(Hbar.basis, Abar.invariant_factors):
        c = H.coords(b)
        val = sum(a_i * c_i * w for a_i, c_i, w in zip(char, c, weights)) % e
        num = val * m
        if num % e:
            raise InvariantError("restriction is not a character of the subgroup")
        out.append((num // e) % m)
    return tuple(out)
