"""Finite abelian groups in invariant-factor form and their characters.

A group is a chain of factors ``n_1 | n_2 | ... | n_r`` (each ``>= 2``;
the empty chain is the trivial group).  Since the ground field is assumed
to contain enough roots of unity, the character group is identified with
the group itself: a character is an integer vector with entry ``i``
reduced modulo ``n_i``.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field

from .errors import InputError, InvariantError, PreconditionError
from .zlinalg import IntMatrix, det, hermite_normal_form, smith_normal_form


@dataclass(frozen=True)
class AbelianGroup:
    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        facs = tuple(int(n) for n in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", facs)
        for n in facs:
            if n < 2:
                raise InvariantError(f"invariant factor {n} < 2")
        for a, b in zip(facs, facs[1:]):
            if b % a:
                raise InvariantError(f"invariant factor {a} does not divide {b}")

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def reduce(self, vec) -> tuple[int, ...]:
        vec = tuple(int(x) for x in vec)
        if len(vec) != self.rank:
            raise InputError(
                f"character has length {len(vec)}, expected {self.rank}"
            )
        return tuple(x % n for x, n in zip(vec, self.invariant_factors))

    def add(self, a, b) -> tuple[int, ...]:
        return self.reduce(x + y for x, y in zip(self.reduce(a), self.reduce(b)))

    def neg(self, a) -> tuple[int, ...]:
        return self.reduce(-x for x in self.reduce(a))

    def sub(self, a, b) -> tuple[int, ...]:
        return self.reduce(x - y for x, y in zip(self.reduce(a), self.reduce(b)))

    def scale(self, k: int, a) -> tuple[int, ...]:
        return self.reduce(k * x for x in self.reduce(a))

    def element_order(self, a) -> int:
        a = self.reduce(a)
        return math.lcm(
            1, *(n // math.gcd(n, x) for x, n in zip(a, self.invariant_factors))
        )

    def elements(self):
        """All elements in deterministic mixed-radix order."""
        for tup in itertools.product(*(range(n) for n in self.invariant_factors)):
            yield tup

    def subgroup_generated(self, gens) -> frozenset:
        gens = [self.reduce(g) for g in gens]
        seen = {self.zero()}
        frontier = [self.zero()]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = self.add(cur, g)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return frozenset(seen)

    def to_json(self) -> str:
        return json.dumps(
            {"invariant_factors": list(self.invariant_factors)},
            separators=(",", ":"),
        )

    @staticmethod
    def from_json(text: str) -> "AbelianGroup":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid group JSON: {exc}") from exc
        if not isinstance(data, dict) or "invariant_factors" not in data:
            raise InputError('group JSON must contain "invariant_factors"')
        facs = data["invariant_factors"]
        if not isinstance(facs, list) or any(
            not isinstance(n, int) for n in facs
        ):
            raise InputError('"invariant_factors" must be a list of integers')
        try:
            return AbelianGroup(tuple(facs))
        except InvariantError as exc:
            raise InputError(str(exc)) from exc


@dataclass(frozen=True)
class Projection:
    """Surjection of an abelian group onto a quotient, evaluable on demand."""

    source: AbelianGroup
    target: AbelianGroup
    matrix: tuple[tuple[int, ...], ...]  # columns of V kept for the quotient

    def __call__(self, char) -> tuple[int, ...]:
        vec = self.source.reduce(char)
        image = [
            sum(x * col[i] for i, x in enumerate(vec)) for col in self.matrix
        ]
        return self.target.reduce(image)


@dataclass(frozen=True)
class SubgroupOfAbelian:
    """A subgroup of a finite abelian group, with a canonical lattice basis."""

    ambient: AbelianGroup
    generators: tuple[tuple[int, ...], ...]
    elements: frozenset
    basis: IntMatrix = field(compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, elem) -> bool:
        return self.ambient.reduce(elem) in self.elements

    def structure(self) -> AbelianGroup:
        """Invariant factors of the subgroup itself."""
        amb = self.ambient
        r = amb.rank
        if r == 0 or self.order == 1:
            return AbelianGroup(())
        # express the ambient relation lattice in the subgroup basis
        b = self.basis
        d = det(b)
        adj_cols = []
        for j in range(r):
            col = []
            for i in range(r):
                minor = [
                    [b.entries[a][c] for c in range(r) if c != i]
                    for a in range(r)
                    if a != j
                ]
                col.append((-1) ** (i + j) * det(IntMatrix.from_rows(minor, r - 1)))
            adj_cols.append(col)
        rows = []
        for i, n in enumerate(amb.invariant_factors):
            row = []
            for j in range(r):
                num = n * adj_cols[j][i]
                if num % d:
                    raise InvariantError("subgroup basis does not span lattice")
                row.append(num // d)
            rows.append(row)
        _, torsion = _coker(IntMatrix.from_rows(rows, r))
        return AbelianGroup(tuple(torsion))


def _coker(M: IntMatrix) -> tuple[int, list[int]]:
    S, _, _ = smith_normal_form(M)
    diag = S.diagonal()
    nonzero = [x for x in diag if x]
    return M.num_cols - len(nonzero), [x for x in nonzero if x > 1]


def quotient_with_projection(A: AbelianGroup, S) -> tuple[AbelianGroup, Projection]:
    """Quotient of ``A`` by the subgroup generated by the characters ``S``.

    The result is in invariant-factor form; the returned projection can be
    evaluated on any character of ``A``.
    """
    gens = [A.reduce(s) for s in S]
    r = A.rank
    rows = [
        [A.invariant_factors[i] if j == i else 0 for j in range(r)]
        for i in range(r)
    ]
    rows.extend(list(g) for g in gens)
    snf, _, V = smith_normal_form(IntMatrix.from_rows(rows, r))
    diag = snf.diagonal()
    if len(diag) != r or any(d == 0 for d in diag):
        raise InvariantError("quotient relation lattice is not full rank")
    kept = [i for i, d in enumerate(diag) if d > 1]
    target = AbelianGroup(tuple(diag[i] for i in kept))
    cols = tuple(
        tuple(V.entries[i][k] for i in range(r)) for k in kept
    )
    return target, Projection(A, target, cols)


def kernel_of_characters(H: AbelianGroup, chars) -> SubgroupOfAbelian:
    """Intersection of the kernels of the given characters of ``H``."""
    chars = [H.reduce(a) for a in chars]
    e = H.exponent
    weights = [e // n for n in H.invariant_factors]
    members = []
    for h in H.elements():
        if all(
            sum(a_i * h_i * w for a_i, h_i, w in zip(a, h, weights)) % e == 0
            for a in chars
        ):
            members.append(h)
    r = H.rank
    rows = [list(h) for h in members]
    rows.extend(
        [H.invariant_factors[i] if j == i else 0 for j in range(r)]
        for i in range(r)
    )
    basis = hermite_normal_form(IntMatrix.from_rows(rows, r))
    return SubgroupOfAbelian(
        ambient=H,
        generators=tuple(chars),
        elements=frozenset(members),
        basis=basis,
    )


def generates(A: AbelianGroup, beta) -> bool:
    """Whether the characters in ``beta`` generate all of ``A``."""
    return len(A.subgroup_generated(beta)) == A.order


def wedge_equivalent(A: AbelianGroup, beta, gamma) -> bool:
    """Compare top wedge powers of two full-rank generating tuples up to sign.

    Both tuples must have length equal to the rank of ``A`` and generate it;
    the top exterior power of ``A`` is cyclic of order ``n_1``, and the class
    of a tuple there is the determinant of integer lifts taken modulo
    ``n_1``.  The answer is invariant under reordering either tuple.
    """
    d = A.rank
    beta = [A.reduce(b) for b in beta]
    gamma = [A.reduce(c) for c in gamma]
    if len(beta) != d or len(gamma) != d:
        raise PreconditionError(
            f"wedge comparison needs tuples of length rank = {d}"
        )
    if not generates(A, beta) or not generates(A, gamma):
        raise PreconditionError("wedge comparison requires generating tuples")
    if d == 0:
        return True
    n1 = A.invariant_factors[0]
    db = det(IntMatrix.from_rows([[b[i] for b in beta] for i in range(d)], d))
    dg = det(IntMatrix.from_rows([[c[i] for c in gamma] for i in range(d)], d))
    return (db - dg) % n1 == 0 or (db + dg) % n1 == 0
