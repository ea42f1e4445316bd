import random

import pytest
from hypothesis import given, strategies as st

from almost_special.basis_sets import IntervalSet, catalan, enumerate_sets, fibre, reduce_set
from almost_special.errors import InvalidInput, NotRealizable
from almost_special.symplectic import (
    F2Subspace,
    F2Vector,
    UnorderedSymbol,
    ca,
    cc,
    epsilon,
    epsilon_by_multiplicity,
    epsilon_rows,
    f_map,
    form,
    l_max,
    parity_space,
    phi,
    reduced_for,
    shriek,
    span,
    span_parts,
    span_parts_by_intersection,
    unordered_symbols,
    vector_of,
    zero_space,
)
from almost_special.tableaux import ShiftedTableau, dot, shift, tableau_to_pairs, pairs_to_symbol

import oracles

EVEN_D = range(0, 12, 2)


def v(D, *support):
    return vector_of(support, D)


def sp(D, *vectors):
    return F2Subspace.span(D, vectors)


def elements(L):
    return frozenset(tuple(x[i] for i in range(1, L.D + 1)) for x in L.elements())


class TestVectors:
    def test_vector_of(self):
        assert str(v(4, 2, 3, 4)) == "0111"
        assert not v(6)
        assert str(v(2, 1)) == "10"
        with pytest.raises(InvalidInput):
            v(4, 5)

    def test_bit_string_round_trip(self):
        x = F2Vector.from_str("0110")
        assert x.support() == [2, 3] and str(x) == "0110"
        with pytest.raises(InvalidInput):
            F2Vector.from_str("012")

    def test_form_examples(self):
        assert form(v(2, 1), v(2, 2)) == 1
        assert form(v(4, 1), v(4, 3)) == 0
        assert form(v(4, 1, 2), v(4, 2, 3)) == 0
        assert oracles.form((1, 1, 0), (0, 1, 1)) == 0
        with pytest.raises(InvalidInput):
            form(v(2, 1), v(4, 1))

    @pytest.mark.parametrize("D", [0, 2, 4, 6])
    def test_form_exhaustive(self, D):
        for x in range(1 << D):
            X = F2Vector(D, x)
            tx = tuple(X[i] for i in range(1, D + 1))
            assert form(X, X) == 0
            for y in range(1 << D):
                Y = F2Vector(D, y)
                assert form(X, Y) == oracles.form(tx, tuple(Y[i] for i in range(1, D + 1)))

    @given(st.integers(1, 15).map(lambda k: 2 * k), st.data())
    def test_form_alternating_and_symmetric(self, D, data):
        x = F2Vector(D, data.draw(st.integers(0, (1 << D) - 1)))
        y = F2Vector(D, data.draw(st.integers(0, (1 << D) - 1)))
        assert form(x, x) == 0
        assert form(x, y) == form(y, x)


class TestSubspaces:
    def test_canonical_equality(self):
        assert sp(4, v(4, 1), v(4, 1, 3)) == sp(4, v(4, 3), v(4, 1))
        assert sp(4, v(4, 1), v(4, 1)).dim == 1
        assert len(sp(4, v(4, 1), v(4, 3))) == 4
        assert zero_space(4).dim == 0
        assert sp(4, v(4, 3)).to_json() == ["0010"]

    @pytest.mark.parametrize("seed", range(20))
    def test_intersection_against_elements(self, seed):
        rng = random.Random(seed)
        D = 8
        A = F2Subspace(D, tuple(rng.randrange(1 << D) for _ in range(rng.randint(0, 5))))
        B = F2Subspace(D, tuple(rng.randrange(1 << D) for _ in range(rng.randint(0, 5))))
        assert elements(A.intersect(B)) == elements(A) & elements(B)
        assert elements(A + B) == oracles.span_of(list(elements(A)) + list(elements(B)), D)
        assert (A <= A + B) and (A.intersect(B) <= A)


class TestEpsilon:
    def test_examples(self):
        assert epsilon(IntervalSet(4, ((3, 3), (2, 4)))) == v(4, 2, 3, 4)
        assert not epsilon(IntervalSet(6))
        assert epsilon(IntervalSet(2, ((1, 1),))) == v(2, 1)

    def test_rows_examples(self):
        assert epsilon_rows(ShiftedTableau(6, ((1, 1), (3, 3)))) == v(6, 1, 3)
        assert not epsilon_rows(ShiftedTableau(6))
        assert epsilon_rows(ShiftedTableau(6, ((1, 3), (3, 5)))) == v(6, 1, 2, 4, 5)

    def test_rejects_invalid(self):
        with pytest.raises(InvalidInput):
            epsilon(IntervalSet(4, ((2, 4),)))

    @pytest.mark.parametrize("D", [0, 2, 4, 6])
    def test_matches_definition(self, D):
        for B in enumerate_sets(D):
            e = epsilon(B)
            assert tuple(e[i] for i in range(1, D + 1)) == oracles.eps_coordinates(
                [tuple(I) for I in B], D)

    @pytest.mark.parametrize("D", EVEN_D)
    def test_injective_and_both_routes_agree(self, D):
        sets = enumerate_sets(D)
        images = [epsilon(B) for B in sets]
        assert len(set(images)) == len(images)
        assert all(epsilon_by_multiplicity(B) == e for B, e in zip(sets, images))

    @pytest.mark.parametrize("D", EVEN_D)
    def test_through_shifted_tableau(self, D):
        for B in enumerate_sets(D, "reduced"):
            X = shift(dot(B))
            e = epsilon_rows(X)
            assert epsilon(B) == e
            s = f_map(e).as_distinguished()
            assert s is not None
            assert s == pairs_to_symbol(tableau_to_pairs(X))


class TestFMap:
    def test_examples(self):
        assert f_map(v(2)).render() == "(0 2/1 3)"
        assert f_map(v(2, 1)).render() == "(0 1/2 3)"
        # toggling {2,3}, {3,4}, {4,5} in turn from (0 2 4/1 3 5)
        assert f_map(v(4, 2, 3, 4)).render() == "(0 4 5/1 2 3)"
        # the table symbol of {3,234} comes from its reduced part {3}
        assert f_map(v(4, 3)).render() == "(0 2 3/1 4 5)"

    @pytest.mark.parametrize("D", [0, 2, 4, 6, 8])
    def test_bijection_onto_sigma(self, D):
        symbols = unordered_symbols(D)
        assert len(symbols) == len(set(symbols)) == 2 ** D
        images = {f_map(F2Vector(D, x)) for x in range(1 << D)}
        assert images == set(symbols)

    @given(st.integers(1, 10).map(lambda k: 2 * k), st.data())
    def test_single_steps_keep_mod4(self, D, data):
        x = F2Vector(D, data.draw(st.integers(0, (1 << D) - 1)))
        i = data.draw(st.integers(1, D))
        before, after = f_map(x), f_map(x + v(D, i))
        diff = (len(after.first) - len(after.second)) - (len(before.first) - len(before.second))
        assert diff in (0, 4, -4)

    def test_mod4_condition_enforced(self):
        with pytest.raises(InvalidInput):
            UnorderedSymbol((0, 1, 2), (3,))


class TestSpanParts:
    def test_examples(self):
        _, p0, p1 = span_parts(IntervalSet(4, ((3, 3), (2, 4))))
        assert p1 == sp(4, v(4, 3)) and p0 == sp(4, v(4, 2, 4))
        assert all(L.dim == 0 for L in span_parts(IntervalSet(6)))
        _, p0, p1 = span_parts(IntervalSet(4, ((1, 1), (3, 3))))
        assert p1 == sp(4, v(4, 1), v(4, 3)) and p0.dim == 0

    @pytest.mark.parametrize("D", EVEN_D)
    def test_direct_sum_and_intersection(self, D):
        for B in enumerate_sets(D):
            whole, p0, p1 = span_parts(B)
            assert whole.dim == len(B)
            assert (p0 + p1) == whole and p0.dim + p1.dim == whole.dim
            assert span_parts_by_intersection(B) == (p0, p1)

    @pytest.mark.parametrize("D", [0, 2, 4, 6])
    def test_span_against_elements(self, D):
        for B in enumerate_sets(D):
            gens = [oracles.indicator(set(range(I.a, I.b + 1)), D) for I in B]
            assert elements(span(B)) == oracles.span_of(gens, D)

    @pytest.mark.parametrize("D", EVEN_D)
    def test_odd_part_ignores_reduction(self, D):
        for B in enumerate_sets(D):
            assert span_parts(B)[2] == span_parts(reduce_set(B))[2]

    @pytest.mark.parametrize("D", [0, 2, 4, 6, 8])
    def test_fibre_dimensions(self, D):
        for B in enumerate_sets(D, "reduced"):
            base = span_parts(B)[1].dim
            for S in fibre(B):
                assert span_parts(S)[1].dim == base + len(S) - len(B)


class TestShriek:
    def test_examples(self):
        assert shriek(zero_space(2), 0) == sp(2, v(2, 1))
        assert shriek(sp(2, v(2, 2)), 0).dim == 0
        assert shriek(sp(4, v(4, 2, 4)), 0) == sp(4, v(4, 3))
        with pytest.raises(InvalidInput):
            shriek(sp(4, v(4, 1)), 0)

    @pytest.mark.parametrize("D", [2, 4, 6])
    @pytest.mark.parametrize("delta", [0, 1])
    def test_against_brute_force(self, D, delta):
        for L in cc(D, delta):
            got = shriek(L, delta)
            assert elements(got) == oracles.annihilator(elements(L), D, delta)
            assert L.dim + got.dim == D // 2

    def test_oracle_examples(self):
        assert oracles.annihilator(oracles.span_of([(0, 1, 0, 1)], 4), 4, 0) == {(0, 0, 0, 0), (0, 0, 1, 0)}
        assert oracles.annihilator(oracles.span_of([(0, 1)], 2), 2, 0) == {(0, 0)}


class TestLattice:
    def test_phi_examples(self):
        assert phi(IntervalSet(2)) == (zero_space(2), sp(2, v(2, 1)))
        assert phi(IntervalSet(2, ((1, 1),))) == (sp(2, v(2, 1)), sp(2, v(2, 1)))
        assert phi(IntervalSet(2, ((2, 2),))) == (zero_space(2), zero_space(2))

    def test_l_max_examples(self):
        assert l_max(zero_space(2)) == sp(2, v(2, 1))
        assert l_max(sp(2, v(2, 1))) == sp(2, v(2, 1))
        assert l_max(sp(4, v(4, 3))) == parity_space(4, 1)
        assert reduced_for(sp(4, v(4, 3))) == IntervalSet(4, ((3, 3),))

    def test_l_max_unrealizable(self):
        # e1+e5 alone is never the odd part of a member of S_6
        with pytest.raises(NotRealizable):
            l_max(sp(6, v(6, 1, 5)))

    @pytest.mark.parametrize("D", [0, 2, 4, 6, 8])
    def test_sizes_and_bijections(self, D):
        sets = enumerate_sets(D)
        images = [phi(B) for B in sets]
        assert len(set(images)) == len(images) == len(ca(D))
        assert all(L <= Lp for L, Lp in images)
        cc1 = cc(D, 1)
        assert len(cc1) == catalan((D + 2) // 2)
        for name in ("half", "reduced"):
            odd = [span_parts(B)[2] for B in enumerate_sets(D, name)]
            assert len(set(odd)) == len(odd) and set(odd) == cc1
        upper = {(L, l_max(L)) for L in cc1}
        assert {phi(B) for B in enumerate_sets(D, "reduced")} == upper
        # L' = L_max is the largest partner of L inside ca
        for L, Lp in images:
            assert Lp <= l_max(L)
