import random
from itertools import product

import pytest

from mdconv.galois import GaloisError, make_field
from mdconv.multipoly import (
    NEG_INF,
    Polynomial,
    PolyMatrix,
    monomials_upto,
    poly_add,
    poly_mul,
    term_key,
    weight,
)

F2 = make_field(2)
F3 = make_field(3)
F5 = make_field(5)
F7 = make_field(7)


def P(field, m, terms):
    return Polynomial(field, m, terms)


def test_add_cancellation_char2():
    f = P(F2, 2, {(1, 0): 1, (0, 1): 1})  # z1 + z2
    g = P(F2, 2, {(1, 0): 1})
    assert poly_add(f, g) == P(F2, 2, {(0, 1): 1})


def test_mul_monomials():
    z1 = Polynomial.monomial(F2, (1, 0))
    z2 = Polynomial.monomial(F2, (0, 1))
    assert poly_mul(z1, z2) == P(F2, 2, {(1, 1): 1})


def test_mul_with_vanishing_middle_coefficient():
    # (1 + z)(1 + 2z) = 1 + 2z^2 over GF(3): the z coefficient is 1 + 2 = 0.
    f = P(F3, 1, {(0,): 1, (1,): 1})
    g = P(F3, 1, {(0,): 1, (1,): 2})
    assert poly_mul(f, g) == P(F3, 1, {(0,): 1, (2,): 2})


def test_mismatched_rings_raise():
    with pytest.raises(GaloisError):
        poly_add(P(F2, 1, {(0,): 1}), P(F3, 1, {(0,): 1}))
    with pytest.raises(GaloisError):
        poly_mul(P(F2, 1, {(0,): 1}), P(F2, 2, {(0, 0): 1}))


def test_total_degree():
    assert P(F2, 2, {(2, 1): 1, (1, 0): 1}).total_degree() == 3
    assert P(F7, 1, {(0,): 5}).total_degree() == 0
    assert Polynomial.zero(F7, 1).total_degree() == NEG_INF


def test_weight_examples():
    v = PolyMatrix(F2, 2, [[
        P(F2, 2, {(0, 0): 1, (1, 0): 1}),
        P(F2, 2, {(0, 1): 1}),
        Polynomial.zero(F2, 2),
    ]])
    assert weight(v) == 3
    assert weight(PolyMatrix(F2, 2, [[Polynomial.zero(F2, 2)] * 3])) == 0
    v7 = PolyMatrix(F7, 2, [[
        P(F7, 2, {(0, 0): 2, (1, 0): 3, (0, 1): 6}),
        P(F7, 2, {(0, 0): 5, (1, 0): 2, (0, 1): 3}),
        P(F7, 2, {(0, 0): 4, (1, 0): 5, (0, 1): 2}),
    ]])
    assert weight(v7) == 9


def worked_example_matrix():
    one = Polynomial.constant(F2, 2, 1)
    z1 = Polynomial.monomial(F2, (1, 0))
    z2 = Polynomial.monomial(F2, (0, 1))
    zero = Polynomial.zero(F2, 2)
    return PolyMatrix(F2, 2, [[one, z1, zero], [one, z2, one]])


def test_row_and_external_degrees_worked_example():
    G = worked_example_matrix()
    assert G.row_degrees() == [1, 1]
    assert G.external_degree() == 2


def test_degrees_more_examples():
    one = Polynomial.constant(F2, 2, 1)
    sq = Polynomial.monomial(F2, (2, 0))
    z2 = Polynomial.monomial(F2, (0, 1))
    G = PolyMatrix(F2, 2, [[sq, z2], [one, one]])
    assert G.row_degrees() == [2, 0]
    assert G.external_degree() == 2
    const = PolyMatrix(F5, 1, [[Polynomial.constant(F5, 1, 3), Polynomial.constant(F5, 1, 1)]])
    assert const.row_degrees() == [0]
    assert const.external_degree() == 0


def test_zero_row_degree_warns():
    zero = Polynomial.zero(F2, 1)
    one = Polynomial.constant(F2, 1, 1)
    G = PolyMatrix(F2, 1, [[one, one], [zero, zero]])
    with pytest.warns(UserWarning):
        degrees = G.row_degrees()
    assert degrees == [0, NEG_INF]
    with pytest.warns(UserWarning):
        assert G.external_degree() == 0


def test_full_size_minors_worked_example():
    G = worked_example_matrix()
    minors = dict(G.full_size_minors())
    z1 = Polynomial.monomial(F2, (1, 0))
    z2 = Polynomial.monomial(F2, (0, 1))
    assert minors[(0, 1)] == z1 + z2
    assert minors[(0, 2)] == Polynomial.constant(F2, 2, 1)
    assert minors[(1, 2)] == z1
    assert G.internal_degree() == 1


def test_minors_identity_and_diagonal():
    I = PolyMatrix.identity(F5, 1, 2)
    assert [m for _, m in I.full_size_minors()] == [Polynomial.constant(F5, 1, 1)]
    assert I.internal_degree() == 0
    z1 = Polynomial.monomial(F2, (1, 0))
    z2 = Polynomial.monomial(F2, (0, 1))
    zero = Polynomial.zero(F2, 2)
    D = PolyMatrix(F2, 2, [[z1, zero], [zero, z2]])
    assert dict(D.full_size_minors())[(0, 1)] == z1 * z2
    assert D.internal_degree() == 2


def test_is_unimodular():
    assert PolyMatrix.identity(F2, 2, 3).is_unimodular()
    one = Polynomial.constant(F2, 1, 1)
    z = Polynomial.monomial(F2, (1,))
    zero = Polynomial.zero(F2, 1)
    assert PolyMatrix(F2, 1, [[one, z], [zero, one]]).is_unimodular()
    assert not PolyMatrix(F2, 1, [[z, zero], [zero, one]]).is_unimodular()
    with pytest.raises(ValueError):
        PolyMatrix(F2, 1, [[one, z]]).is_unimodular()


def _all_polys(field, m, degree):
    exps = monomials_upto(degree, m)
    polys = []
    for coeffs in product(range(field.q), repeat=len(exps)):
        polys.append(Polynomial(field, m, dict(zip(exps, coeffs))))
    return polys


def test_ring_axioms_exhaustive_gf2_degree_one():
    for m in (1, 2):
        polys = _all_polys(F2, m, 1)
        for f, g, h in product(polys, repeat=3):
            assert (f + g) + h == f + (g + h)
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h
            assert f * g == g * f


def _random_poly(rng, field, m, degree):
    exps = monomials_upto(degree, m)
    return Polynomial(field, m, {a: rng.randrange(field.q) for a in exps})


def test_ring_axioms_sampled_degree_two():
    rng = random.Random(7)
    for _ in range(400):
        field = rng.choice([F2, F3, F5])
        m = rng.choice([1, 2])
        f, g, h = (_random_poly(rng, field, m, 2) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h


def test_weight_invariance_under_scaling_and_shift():
    rng = random.Random(11)
    for _ in range(100):
        field = rng.choice([F3, F5, F7])
        m = rng.choice([1, 2])
        v = PolyMatrix(field, m, [[_random_poly(rng, field, m, 2) for _ in range(3)]])
        c = rng.randrange(1, field.q)
        scaled = PolyMatrix(field, m, [[p.scale(c) for p in v.entries[0]]])
        assert weight(scaled) == weight(v)
        alpha = tuple(rng.randrange(3) for _ in range(m))
        shifted = PolyMatrix(field, m, [[p.shift(alpha) for p in v.entries[0]]])
        assert weight(shifted) == weight(v)


def test_weight_subadditive():
    rng = random.Random(13)
    for _ in range(100):
        field = rng.choice([F2, F5])
        m = 2
        u = PolyMatrix(field, m, [[_random_poly(rng, field, m, 2) for _ in range(3)]])
        v = PolyMatrix(field, m, [[_random_poly(rng, field, m, 2) for _ in range(3)]])
        s = PolyMatrix(field, m, [[a + b for a, b in zip(u.entries[0], v.entries[0])]])
        assert weight(s) <= weight(u) + weight(v)


def _random_full_rank_matrix(rng, field, m, k, n, degree):
    while True:
        G = PolyMatrix(field, m, [
            [_random_poly(rng, field, m, degree) for _ in range(n)] for _ in range(k)
        ])
        if G.has_full_row_rank() and all(
            any(not p.is_zero() for p in row) for row in G.entries
        ):
            return G


def test_internal_degree_at_most_external():
    rng = random.Random(17)
    for _ in range(60):
        field = rng.choice([F2, F3, F5])
        m = rng.choice([1, 2])
        k = rng.choice([1, 2])
        n = rng.randrange(k, 4)
        G = _random_full_rank_matrix(rng, field, m, k, n + 1, 2)
        assert G.internal_degree() <= G.external_degree()


def _random_unimodular(rng, field, m, k):
    # Product of elementary row operations keeps the determinant constant.
    U = PolyMatrix.identity(field, m, k)
    rows = [list(r) for r in U.entries]
    for _ in range(4):
        i, j = rng.randrange(k), rng.randrange(k)
        if i == j:
            continue
        f = _random_poly(rng, field, m, 1)
        rows[i] = [a + f * b for a, b in zip(rows[i], rows[j])]
    return PolyMatrix(field, m, rows)


def test_internal_degree_invariant_under_unimodular():
    rng = random.Random(19)
    for _ in range(30):
        field = rng.choice([F2, F5])
        m = rng.choice([1, 2])
        k = 2
        G = _random_full_rank_matrix(rng, field, m, k, 3, 1)
        U = _random_unimodular(rng, field, m, k)
        assert U.is_unimodular()
        assert (U @ G).internal_degree() == G.internal_degree()


def test_canonical_term_order_matches_last_variable_recursion():
    assert monomials_upto(1, 2) == [(0, 0), (1, 0), (0, 1)]
    assert monomials_upto(2, 2) == [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)]
    assert sorted([(1, 1), (0, 2), (2, 0)], key=term_key) == [(2, 0), (1, 1), (0, 2)]


def test_json_round_trip():
    f = P(F7, 2, {(0, 0): 2, (1, 0): 3, (0, 1): 6})
    assert Polynomial.from_json(f.to_json(), F7, 2) == f
    G = worked_example_matrix()
    assert PolyMatrix.from_json(G.to_json(), F2, 2) == G
