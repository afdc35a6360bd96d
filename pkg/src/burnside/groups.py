"""Finite groups as Cayley tables, with the abelian-subgroup machinery.

Elements are plain indices into the multiplication table.  Groups are
immutable once built; derived data (abelian subgroup classes, normalizers,
invariant-factor bases) is cached on first use and never mutated after.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from functools import cached_property

from .abelian import AbelianGroup
from .errors import InputError, InvariantError, PreconditionError, SizeError

DEFAULT_CLOSURE_BOUND = 10**5


class FiniteGroup:
    """A finite group given by its Cayley table over element indices."""

    def __init__(self, cayley, identity=None, _trusted=False):
        table = tuple(tuple(int(x) for x in row) for row in cayley)
        n = len(table)
        if any(len(row) != n for row in table):
            raise InputError("Cayley table must be square")
        if any(x < 0 or x >= n for row in table for x in row):
            raise InputError("Cayley table entries out of range")
        self.cayley = table
        self.order = n
        if identity is None:
            identity = self._find_identity()
        self.identity = identity
        if not _trusted:
            self._check_axioms()
        self.inverse = tuple(self._find_inverse(g) for g in range(n))
        self.exponent_lcm = self._exponent_lcm()

    # construction helpers ------------------------------------------------

    def _find_identity(self) -> int:
        for e in range(self.order):
            if all(
                self.cayley[e][g] == g == self.cayley[g][e]
                for g in range(self.order)
            ):
                return e
        raise InputError("Cayley table has no identity element")

    def _check_axioms(self):
        n = self.order
        tab = self.cayley
        for a in range(n):
            for b in range(n):
                ab = tab[a][b]
                for c in range(n):
                    if tab[ab][c] != tab[a][tab[b][c]]:
                        raise InputError("Cayley table is not associative")
        for g in range(n):
            if self.identity not in tab[g]:
                raise InputError(f"element {g} has no inverse")

    def _find_inverse(self, g: int) -> int:
        for h in range(self.order):
            if self.cayley[g][h] == self.identity:
                return h
        raise InputError(f"element {g} has no inverse")

    def _exponent_lcm(self) -> int:
        # lcm of exponents of the abelian subgroups = lcm of element orders
        return math.lcm(1, *(self.element_order(g) for g in range(self.order)))

    # elementary queries --------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, h: int) -> int:
        """g h g^-1"""
        return self.mul(self.mul(g, h), self.inv(g))

    def element_order(self, g: int) -> int:
        k, cur = 1, g
        while cur != self.identity:
            cur = self.mul(cur, g)
            k += 1
        return k

    def commute(self, a: int, b: int) -> bool:
        return self.mul(a, b) == self.mul(b, a)

    def closure(self, gens) -> frozenset:
        seen = {self.identity}
        frontier = [self.identity]
        gens = sorted(set(gens))
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = self.mul(cur, g)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return frozenset(seen)

    def normalizer(self, elems) -> tuple[int, ...]:
        elems = frozenset(elems)
        return tuple(
            g
            for g in range(self.order)
            if frozenset(self.conj(g, h) for h in elems) == elems
        )

    def is_abelian_subset(self, elems) -> bool:
        elems = tuple(elems)
        return all(
            self.commute(a, b) for a, b in itertools.combinations(elems, 2)
        )

    @property
    def is_abelian(self) -> bool:
        return self.is_abelian_subset(range(self.order))

    # constructors --------------------------------------------------------

    @staticmethod
    def from_permutations(degree, perms, max_order=DEFAULT_CLOSURE_BOUND):
        """Closure of permutations on ``{0..degree-1}`` under composition.

        Elements are indexed breadth-first from the identity, applying the
        generators in their given order, so the indexing is deterministic.
        """
        gens = []
        for p in perms:
            p = tuple(int(x) for x in p)
            if sorted(p) != list(range(degree)):
                raise InputError(f"not a permutation of {degree} points: {p}")
            gens.append(p)
        ident = tuple(range(degree))
        elems = [ident]
        index = {ident: 0}
        queue = [ident]
        while queue:
            cur = queue.pop(0)
            for g in gens:
                nxt = tuple(g[cur[i]] for i in range(degree))
                if nxt not in index:
                    if len(elems) >= max_order:
                        raise SizeError(
                            f"permutation closure exceeds bound {max_order}"
                        )
                    index[nxt] = len(elems)
                    elems.append(nxt)
                    queue.append(nxt)
        table = [
            [
                index[tuple(p[q[i]] for i in range(degree))]
                for q in elems
            ]
            for p in elems
        ]
        return FiniteGroup(table, identity=0, _trusted=True)

    @staticmethod
    def from_invariant_factors(factors) -> "FiniteGroup":
        """Direct product of cyclic groups, elements in mixed-radix order."""
        A = AbelianGroup(tuple(factors))
        elems = list(A.elements())
        index = {e: i for i, e in enumerate(elems)}
        table = [
            [index[A.add(x, y)] for y in elems] for x in elems
        ]
        return FiniteGroup(table, identity=index[A.zero()], _trusted=True)

    @staticmethod
    def from_json(text: str) -> "FiniteGroup":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid group JSON: {exc}") from exc
        if not isinstance(data, dict) or "type" not in data:
            raise InputError('group JSON must be an object with a "type" field')
        kind = data["type"]
        if kind == "permutation":
            if "degree" not in data or "generators" not in data:
                raise InputError(
                    'permutation group JSON needs "degree" and "generators"'
                )
            return FiniteGroup.from_permutations(
                data["degree"], data["generators"]
            )
        if kind == "table":
            if "cayley" not in data:
                raise InputError('table group JSON needs "cayley"')
            return FiniteGroup(data["cayley"])
        if kind == "abelian":
            if "invariant_factors" not in data:
                raise InputError('abelian group JSON needs "invariant_factors"')
            try:
                return FiniteGroup.from_invariant_factors(
                    data["invariant_factors"]
                )
            except InvariantError as exc:
                raise InputError(str(exc)) from exc
        raise InputError(f"unknown group type {kind!r}")

    # abelian subgroup machinery ------------------------------------------

    @cached_property
    def _abelian_subgroups(self) -> list[tuple[int, ...]]:
        """All abelian subgroups, as sorted element-index tuples."""
        trivial = (self.identity,)
        found = {frozenset(trivial)}
        frontier = [frozenset(trivial)]
        while frontier:
            sub = frontier.pop()
            for g in range(self.order):
                if g in sub:
                    continue
                if not all(self.commute(g, h) for h in sub):
                    continue
                ext = self.closure(set(sub) | {g})
                if ext not in found and self.is_abelian_subset(ext):
                    found.add(ext)
                    frontier.append(ext)
        return sorted(tuple(sorted(s)) for s in found)

    @cached_property
    def _class_info(self) -> dict:
        """subgroup -> (canonical class representative, least conjugator)."""
        info = {}
        for sub in self._abelian_subgroups:
            if sub in info:
                continue
            orbit = {}
            for g in range(self.order):
                img = tuple(sorted(self.conj(g, h) for h in sub))
                if img not in orbit:
                    orbit[img] = g
            rep = min(orbit)
            for img, _ in orbit.items():
                # least conjugator sending img to rep
                conjugator = min(
                    g
                    for g in range(self.order)
                    if tuple(sorted(self.conj(g, h) for h in img)) == rep
                )
                info[img] = (rep, conjugator)
        return info

    @cached_property
    def _subgroup_refs(self) -> dict:
        return {}

    def subgroup(self, elems) -> "SubgroupRef":
        """The SubgroupRef for an abelian subgroup given by its elements."""
        key = tuple(sorted(set(elems)))
        refs = self._subgroup_refs
        if key not in refs:
            if self.closure(key) != frozenset(key):
                raise InputError("element set is not closed under the group law")
            if not self.is_abelian_subset(key):
                raise InvariantError("subgroup is not abelian")
            refs[key] = SubgroupRef(group=self, elements=key)
        return refs[key]

    def full_subgroup(self) -> "SubgroupRef":
        return self.subgroup(range(self.order))

    def abelian_subgroup_classes(self) -> list["SubgroupRef"]:
        """One representative per conjugacy class of abelian subgroups."""
        reps = sorted(
            {rep for rep, _ in self._class_info.values()},
            key=lambda s: (len(s), s),
        )
        return [self.subgroup(r) for r in reps]

    def class_representative(self, elems) -> tuple[tuple[int, ...], int]:
        """Canonical class representative of an abelian subgroup + conjugator."""
        key = tuple(sorted(set(elems)))
        if key not in self._class_info:
            raise InputError("not an abelian subgroup of this group")
        return self._class_info[key]


def _split_abelian_basis(elems, mul, identity, order_of):
    """Basis of a finite abelian group by splitting off maximal-order elements.

    ``elems`` is an ordered list of hashable element handles.  Returns a list
    of ``(element, order)`` pairs with decreasing orders; ties in the choice
    of the maximal-order element are broken by position in ``elems``.
    """
    nontrivial = [x for x in elems if x != identity]
    if not nontrivial:
        return []
    orders = {x: order_of(x) for x in elems}
    g = max(nontrivial, key=lambda x: (orders[x], -elems.index(x)))
    m = orders[g]
    # cosets of <g>
    cyc = [identity]
    cur = g
    while cur != identity:
        cyc.append(cur)
        cur = mul(cur, g)
    coset_of = {}
    cosets = []
    for x in elems:
        if x in coset_of:
            continue
        coset = frozenset(mul(x, c) for c in cyc)
        cosets.append(coset)
        for y in coset:
            coset_of[y] = coset
    q_identity = coset_of[identity]

    def q_mul(c1, c2):
        return coset_of[mul(next(iter(c1)), next(iter(c2)))]

    def q_order(c):
        k, cur = 1, c
        while cur != q_identity:
            cur = q_mul(cur, c)
            k += 1
        return k

    q_basis = _split_abelian_basis(cosets, q_mul, q_identity, q_order)
    basis = [(g, m)]
    for coset, mq in q_basis:
        # a maximal-order pivot guarantees a lift of the same order
        lifts = [x for x in elems if x in coset and orders[x] == mq]
        if not lifts:
            raise InvariantError("no order-preserving lift in abelian splitting")
        basis.append((lifts[0], mq))
    return basis


@dataclass(eq=False)
class SubgroupRef:
    """An abelian subgroup of a FiniteGroup with cached structure data."""

    group: FiniteGroup
    elements: tuple[int, ...]
    _cache: dict = field(default_factory=dict, repr=False)

    def __hash__(self):
        return hash((id(self.group), self.elements))

    def __eq__(self, other):
        return (
            isinstance(other, SubgroupRef)
            and self.group is other.group
            and self.elements == other.elements
        )

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def normalizer(self) -> tuple[int, ...]:
        if "normalizer" not in self._cache:
            self._cache["normalizer"] = self.group.normalizer(self.elements)
        return self._cache["normalizer"]

    @property
    def structure(self) -> AbelianGroup:
        return self._structure_data[0]

    @property
    def basis(self) -> tuple[int, ...]:
        """Generators realizing the invariant factors, as element indices."""
        return self._structure_data[1]

    @property
    def _structure_data(self):
        if "structure" not in self._cache:
            G = self.group
            elems = list(self.elements)
            pairs = _split_abelian_basis(
                elems, G.mul, G.identity, G.element_order
            )
            pairs.reverse()  # increasing orders = invariant factor order
            factors = tuple(m for _, m in pairs)
            basis = tuple(g for g, _ in pairs)
            structure = AbelianGroup(factors)
            to_coords = {}
            from_coords = {}
            for coords in itertools.product(*(range(m) for m in factors)):
                x = G.identity
                for b, k in zip(basis, coords):
                    for _ in range(k):
                        x = G.mul(x, b)
                if x in to_coords:
                    raise InvariantError("abelian basis is not independent")
                to_coords[x] = coords
                from_coords[coords] = x
            if len(to_coords) != self.order:
                raise InvariantError("abelian basis does not span the subgroup")
            self._cache["structure"] = (structure, basis, to_coords, from_coords)
        return self._cache["structure"]

    def coords(self, elem: int) -> tuple[int, ...]:
        """Invariant-factor coordinates of a subgroup element."""
        data = self._structure_data
        if elem not in data[2]:
            raise InputError(f"element {elem} is not in the subgroup")
        return data[2][elem]

    def element(self, coords) -> int:
        data = self._structure_data
        return data[3][self.structure.reduce(coords)]

    def char_value(self, char, elem: int) -> int:
        """Value of a character on an element, in Z/exponent (0 = trivial)."""
        A = self.structure
        e = A.exponent
        c = self.coords(elem)
        return (
            sum(
                a_i * c_i * (e // n_i)
                for a_i, c_i, n_i in zip(A.reduce(char), c, A.invariant_factors)
            )
            % e
        )


def _dual_matrix(src: SubgroupRef, dst: SubgroupRef, conj_map) -> list[list[int]]:
    """Matrix of the dual map (src characters -> dst characters).

    ``conj_map`` sends dst elements into src; the dual of a character ``a``
    on src is ``a o conj_map`` on dst, expressed on dst's character basis.
    """
    n_src = src.structure.invariant_factors
    n_dst = dst.structure.invariant_factors
    r_src, r_dst = len(n_src), len(n_dst)
    mat = []
    for i in range(r_dst):
        pre = src.coords(conj_map(dst.basis[i]))
        row = []
        for j in range(r_src):
            num = pre[j] * n_dst[i]
            if num % n_src[j]:
                raise InvariantError("conjugation does not respect orders")
            row.append((num // n_src[j]) % n_dst[i])
        mat.append(row)
    return mat


def apply_dual(matrix, factors, char) -> tuple[int, ...]:
    """Apply a dual-map matrix to a character vector (row i mod factors[i])."""
    return tuple(
        sum(m * a for m, a in zip(row, char)) % n
        for row, n in zip(matrix, factors)
    )


def character_action(G: FiniteGroup, g: int, H: SubgroupRef) -> list[list[int]]:
    """Automorphism of the character group of ``H`` induced by conjugation.

    ``g`` must normalize ``H``; the returned matrix expresses
    ``a -> a o conj_{g^-1}`` on the invariant-factor character basis, so the
    action is contravariant: acting by ``g * g'`` equals acting by ``g``
    after acting by ``g'``.
    """
    if g not in H.normalizer:
        raise PreconditionError(f"element {g} does not normalize the subgroup")
    ginv = G.inv(g)
    return _dual_matrix(H, H, lambda h: G.conj(ginv, h))


def transport_characters(
    G: FiniteGroup, src: SubgroupRef, dst: SubgroupRef, g: int
):
    """Dual-map matrix carrying characters of ``src`` to ``g src g^-1 = dst``."""
    ginv = G.inv(g)
    return _dual_matrix(src, dst, lambda h: G.conj(ginv, h))
