import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burnside import (
    AbelianGroup,
    InputError,
    InvariantError,
    PreconditionError,
    generates,
    kernel_of_characters,
    quotient_with_projection,
    wedge_equivalent,
)

small_groups = st.sampled_from(
    [(), (2,), (3,), (4,), (2, 2), (6,), (2, 4), (8,), (3, 3), (2, 2, 2)]
)


class TestAbelianGroup:
    def test_invariant_factor_validation(self):
        with pytest.raises(InvariantError):
            AbelianGroup((1,))
        with pytest.raises(InvariantError):
            AbelianGroup((4, 2))
        assert AbelianGroup(()).order == 1
        assert AbelianGroup((2, 4)).order == 8

    def test_trivial_group_has_one_character(self):
        A = AbelianGroup(())
        assert list(A.elements()) == [()]
        assert A.zero() == ()

    def test_arithmetic(self):
        A = AbelianGroup((2, 4))
        assert A.add((1, 3), (1, 2)) == (0, 1)
        assert A.neg((1, 3)) == (1, 1)
        assert A.element_order((0, 1)) == 4
        assert A.element_order((1, 2)) == 2

    def test_length_mismatch(self):
        with pytest.raises(InputError):
            AbelianGroup((2,)).reduce((1, 0))

    def test_json_roundtrip(self):
        A = AbelianGroup((2, 4))
        assert AbelianGroup.from_json(A.to_json()) == A
        with pytest.raises(InputError):
            AbelianGroup.from_json('{"factors": [2]}')
        with pytest.raises(InputError):
            AbelianGroup.from_json('{"invariant_factors": [4, 2]}')


class TestQuotient:
    def test_z4_mod_2(self):
        A = AbelianGroup((4,))
        Abar, proj = quotient_with_projection(A, [(2,)])
        # oracle: enumerate the quotient -> exactly 2 distinct images
        assert Abar.order == 2
        assert len({proj(a) for a in A.elements()}) == 2
        assert proj((2,)) == Abar.zero()

    def test_trivial_quotient_is_identity(self):
        A = AbelianGroup((2, 4))
        Abar, proj = quotient_with_projection(A, [])
        assert Abar.order == A.order
        images = [proj(a) for a in A.elements()]
        assert len(set(images)) == A.order

    def test_klein_four_diagonal(self):
        A = AbelianGroup((2, 2))
        Abar, proj = quotient_with_projection(A, [(1, 1)])
        assert Abar.invariant_factors == (2,)
        assert proj((1, 1)) == (0,)
        assert proj((1, 0)) == proj((0, 1)) != (0,)

    @given(small_groups, st.data())
    @settings(max_examples=60, deadline=None)
    def test_order_multiplicativity(self, factors, data):
        A = AbelianGroup(factors)
        elems = list(A.elements())
        S = data.draw(
            st.lists(st.sampled_from(elems), min_size=0, max_size=3)
        )
        Abar, proj = quotient_with_projection(A, S)
        span = A.subgroup_generated(S)
        assert A.order == Abar.order * len(span)
        # the projection kills exactly the span and is surjective
        assert all(proj(s) == Abar.zero() for s in span)
        assert len({proj(a) for a in elems}) == Abar.order

    def test_projection_is_homomorphism(self):
        A = AbelianGroup((2, 4))
        Abar, proj = quotient_with_projection(A, [(1, 2)])
        for a in A.elements():
            for b in A.elements():
                assert proj(A.add(a, b)) == Abar.add(proj(a), proj(b))


class TestKernel:
    def test_z4_doubling_character(self):
        A = AbelianGroup((4,))
        ker = kernel_of_characters(A, [(2,)])
        assert ker.elements == frozenset({(0,), (2,)})
        assert ker.structure().invariant_factors == (2,)

    def test_empty_character_list(self):
        A = AbelianGroup((2, 4))
        ker = kernel_of_characters(A, [])
        assert len(ker.elements) == A.order

    def test_klein_four_diagonal_kernel(self):
        A = AbelianGroup((2, 2))
        ker = kernel_of_characters(A, [(1, 1)])
        assert ker.elements == frozenset({(0, 0), (1, 1)})

    @given(small_groups, st.data())
    @settings(max_examples=60, deadline=None)
    def test_order_relation(self, factors, data):
        A = AbelianGroup(factors)
        elems = list(A.elements())
        chars = data.draw(
            st.lists(st.sampled_from(elems), min_size=1, max_size=2)
        )
        ker = kernel_of_characters(A, chars)
        assert len(ker.elements) * len(A.subgroup_generated(chars)) == A.order
        assert (A.zero() in ker) and ker.order % 1 == 0

    def test_single_character_order(self):
        A = AbelianGroup((2, 4))
        for a in A.elements():
            ker = kernel_of_characters(A, [a])
            assert ker.order == A.order // A.element_order(a)


class TestGenerates:
    def test_cyclic(self):
        A = AbelianGroup((4,))
        assert generates(A, [(1,)])
        assert not generates(A, [(2,), (2,)])

    def test_klein_four(self):
        assert generates(AbelianGroup((2, 2)), [(1, 0), (1, 1)])
        assert not generates(AbelianGroup((2, 2)), [(1, 1)])

    def test_trivial(self):
        assert generates(AbelianGroup(()), [])


class TestWedge:
    def test_swap_invariance(self):
        A = AbelianGroup((5, 5))
        beta = [(1, 0), (0, 1)]
        assert wedge_equivalent(A, beta, [beta[1], beta[0]])

    def test_z5_squared_pairs(self):
        A = AbelianGroup((5, 5))
        e1, e2 = (1, 0), (0, 1)
        assert not wedge_equivalent(A, [e1, e2], [e1, (0, 2)])
        assert wedge_equivalent(A, [e1, e2], [e1, (0, 4)])

    def test_rejects_wrong_length(self):
        A = AbelianGroup((5, 5))
        with pytest.raises(PreconditionError):
            wedge_equivalent(A, [(1, 0)], [(0, 1)])

    def test_rejects_non_generating(self):
        A = AbelianGroup((5, 5))
        with pytest.raises(PreconditionError):
            wedge_equivalent(A, [(1, 0), (2, 0)], [(1, 0), (0, 1)])

    def test_equivalence_relation(self):
        A = AbelianGroup((3, 3))
        elems = [a for a in A.elements()]
        tuples = [
            (x, y)
            for x in elems
            for y in elems
            if generates(A, [x, y])
        ]
        sample = tuples[::7]
        for t in sample:
            assert wedge_equivalent(A, t, t)
        for s, t in itertools.combinations(sample, 2):
            assert wedge_equivalent(A, s, t) == wedge_equivalent(A, t, s)

    def test_mixed_factors_well_defined(self):
        # determinant mod the smallest factor is lift-independent
        A = AbelianGroup((2, 4))
        beta = [(1, 0), (0, 1)]
        gamma = [(1, 2), (0, 1)]
        lifted = [(1, 0), (0, 5)]  # same characters, different integer lifts
        assert wedge_equivalent(A, beta, lifted)
        assert wedge_equivalent(A, beta, gamma) == wedge_equivalent(
            A, gamma, beta
        )
