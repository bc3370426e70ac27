import itertools
import random
from math import comb

import pytest

from togliatti import exactmat
from togliatti.errors import BoundExceeded, NotArtinian
from togliatti.lefschetz import (
    fails_wlp_d_minus_1,
    multiplication_matrix,
    restricted_dependence,
    restricted_form,
    restricted_matrix,
)
from togliatti.monomials import MonomialIdeal, generator_bound, parse_ideal, simplex_points, vertices

from oracles import poly_add, poly_mul, rank_by_minors, rank_fraction

CUBIC = parse_ideal("x0^3,x1^3,x2^3,x0*x1*x2", 2, 3)
CI3 = parse_ideal("x0^3,x1^3,x2^3", 2, 3)


def test_cubic_multiplication_matrix():
    m = multiplication_matrix(CUBIC)
    assert m.shape == (6, 6)
    assert {x for r in m.entries for x in r} <= {0, 1}
    assert rank_by_minors(m.tolist()) == 5 == exactmat.rank(m)


def test_cubic_verdict():
    v = fails_wlp_d_minus_1(CUBIC)
    assert v.fails_wlp and v.kernel_dim == 1
    assert (v.domain_dim, v.codomain_dim, v.map_rank) == (6, 6, 5)


@pytest.mark.parametrize("n,d", [(2, 3), (2, 5), (3, 4), (4, 3)])
def test_complete_intersection_has_maximal_rank(n, d):
    ideal = MonomialIdeal(n, d, vertices(n, d))
    m = multiplication_matrix(ideal)
    assert exactmat.rank(m) == min(m.shape)
    assert not fails_wlp_d_minus_1(ideal).fails_wlp
    assert not restricted_dependence(ideal)


def test_t36_item_i_at_degree_four():
    ideal = parse_ideal("x1^4,x2^4,x0^4,x0^3*x1,x0^3*x2", 2, 4)
    assert fails_wlp_d_minus_1(ideal).fails_wlp
    assert restricted_dependence(ideal)


def test_dimensions_and_columns():
    rng = random.Random(3)
    for n, d in [(2, 4), (3, 3), (2, 6)]:
        for _ in range(10):
            extra = rng.sample(simplex_points(n, d), rng.randint(0, 5))
            ideal = MonomialIdeal(n, d, tuple(set(extra) | set(vertices(n, d))))
            m = multiplication_matrix(ideal)
            assert m.cols == comb(n + d - 1, n)
            assert m.rows == comb(n + d, n) - ideal.r
            for j in range(m.cols):
                assert 0 <= sum(m[i, j] for i in range(m.rows)) <= n + 1


def test_errors():
    with pytest.raises(NotArtinian):
        multiplication_matrix(parse_ideal("x0^3,x0^2*x1", 2, 3))
    with pytest.raises(NotArtinian):
        restricted_dependence(parse_ideal("x0^3,x1^3", 2, 3))
    too_many = parse_ideal("x0^3,x1^3,x2^3,x0*x1*x2,x0^2*x1", 2, 3)
    assert too_many.r > generator_bound(2, 3)
    with pytest.raises(BoundExceeded):
        fails_wlp_d_minus_1(too_many)
    with pytest.raises(BoundExceeded):
        restricted_dependence(too_many)


def _substituted(e):
    """Expand x^e with x_n = -(x_0 + ... + x_{n-1}) by repeated polynomial products."""
    n = len(e) - 1
    out = {tuple(e[:n]): 1}
    neg = {tuple(int(i == j) for j in range(n)): -1 for i in range(n)}
    for _ in range(e[n]):
        out = poly_mul(out, neg)
    return out


@pytest.mark.parametrize("e", [(3, 0, 0), (1, 1, 1), (0, 0, 3), (2, 0, 1, 1), (0, 1, 2, 2)])
def test_restricted_form_matches_expansion(e):
    n, d = len(e) - 1, sum(e)
    expanded = _substituted(e)
    coeffs = restricted_form(e)
    basis = simplex_points(n - 1, d)
    assert dict((b, c) for b, c in zip(basis, coeffs) if c) == expanded


def test_cubic_restricted_dependence():
    assert restricted_dependence(CUBIC)
    assert not restricted_dependence(CI3)
    assert rank_fraction(restricted_matrix(CUBIC).tolist()) == 3


def test_equivalence_exhaustive_small_degrees():
    # every artinian candidate with up to two extra generators for n=2, d<=5
    for d in range(3, 6):
        others = [p for p in simplex_points(2, d) if p not in vertices(2, d)]
        for k in range(0, 3):
            for extra in itertools.combinations(others, k):
                ideal = MonomialIdeal(2, d, vertices(2, d) + extra)
                if ideal.r > generator_bound(2, d):
                    continue
                v = fails_wlp_d_minus_1(ideal)
                r = exactmat.rank(restricted_matrix(ideal))
                assert v.fails_wlp == restricted_dependence(ideal)
                assert v.kernel_dim == ideal.r - r


def test_permutation_equivariance():
    ideal = parse_ideal("x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2", 2, 5)
    base = fails_wlp_d_minus_1(ideal)
    for perm in itertools.permutations(range(3)):
        other = ideal.permuted(perm)
        assert fails_wlp_d_minus_1(other) == base
        assert restricted_dependence(other)
