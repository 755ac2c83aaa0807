import pytest
from hypothesis import given

from pbindex import (
    FiniteNatSet,
    IndexMismatch,
    NonZeroIndex,
    PartialBijection,
    Permutation,
    almost_equal,
    apply,
    codomain_complement,
    compose,
    difference,
    extend_to_permutation,
    factor_left,
    factor_right,
    identity,
    index,
    inverse,
    permutation_sandwich_index,
    power,
    restrict,
    sandwich_identities,
    shift_map,
    structural_bound,
    transposition,
)
from pbindex.oracle import materialize, oracle_compose, oracle_compose_check

from .conftest import partial_bijections, permutations

u = shift_map(1)
swap34 = PartialBijection(0, (), {3: 4, 4: 3})
hole2 = PartialBijection(0, [2], {7: 2})
f_k2 = PartialBijection(2, [1], {0: 0})


def window(*maps):
    return max(structural_bound(m) for m in maps)


def test_compose_example_with_holes():
    g = PartialBijection(0, [0, 5])
    r = compose(g, u)
    assert r.holes == FiniteNatSet({4})
    assert codomain_complement(r) == FiniteNatSet({0, 5})
    assert len(r.holes) == 0 + len(difference(g.holes, codomain_complement(u)))
    assert index(r) == -1 == index(g) + index(u)
    assert oracle_compose_check(g, u, 16)


def test_compose_identity_and_shift():
    for f in (u, swap34, hole2, f_k2):
        assert compose(identity(), f) == f
        assert compose(f, identity()) == f
    assert compose(u, u) == shift_map(2)
    assert index(compose(u, u)) == -2


def test_compose_argument_order():
    # g after u sends 0 -> 1 -> 0; u after g sends 0 -> 1 -> 2
    g = transposition(0, 1)
    assert apply(compose(g, u), 0) == 0
    assert apply(compose(u, g), 0) == 2


def test_inverse_examples():
    assert inverse(u) == PartialBijection(-1, [0])
    assert index(inverse(u)) == 1
    assert inverse(identity()) == identity()
    assert inverse(swap34) == swap34


def test_sandwich_examples():
    left, right = sandwich_identities(u)
    assert left == identity()
    assert right == PartialBijection(0, [0])
    assert sandwich_identities(identity()) == (identity(), identity())
    left, right = sandwich_identities(hole2)
    assert almost_equal(left, identity()) and almost_equal(right, identity())
    assert left == PartialBijection(0, [2]) and right == PartialBijection(0, [7])


def test_extend_examples():
    F = extend_to_permutation(hole2)
    assert isinstance(F, Permutation)
    assert F == Permutation(0, (), {2: 7, 7: 2})
    assert extend_to_permutation(identity()) == identity()
    with pytest.raises(NonZeroIndex):
        extend_to_permutation(u)


def test_extend_pairs_in_increasing_order():
    f = PartialBijection(0, [1, 4], {10: 1, 11: 4})
    # holes {1, 4} meet gaps {10, 11} in order
    assert extend_to_permutation(f) == Permutation(0, (), {1: 10, 4: 11, 10: 1, 11: 4})


def test_permutation_sandwich_examples():
    assert permutation_sandwich_index(u, transposition(3, 4), "left") == -1
    assert permutation_sandwich_index(identity(), transposition(2, 9), "right") == 0
    assert permutation_sandwich_index(f_k2, transposition(0, 9), "right") == -2
    with pytest.raises(ValueError):
        permutation_sandwich_index(u, identity(), "middle")


def test_factor_examples():
    lam = factor_left(u, u)
    assert almost_equal(compose(lam, u), u)
    assert factor_left(identity(), swap34) == swap34
    assert factor_right(identity(), swap34) == swap34
    rho = factor_right(hole2, hole2)
    assert almost_equal(compose(hole2, rho), hole2)
    with pytest.raises(IndexMismatch):
        factor_left(u, identity())
    with pytest.raises(IndexMismatch):
        factor_right(shift_map(2), u)


def test_power():
    assert power(u, 3) == shift_map(3)
    assert power(u, -2) == PartialBijection(-2, [0, 1])
    assert power(u, 0) == identity()


@given(partial_bijections(), partial_bijections())
def test_compose_matches_table_composition(g, f):
    r = compose(g, f)
    W = window(f, g, r)
    assert materialize(r, W).values == oracle_compose(g, f, W).values
    assert r.shift == f.shift + g.shift


@given(partial_bijections(), partial_bijections())
def test_compose_domain_and_codomain(g, f):
    r = compose(g, f)
    B_f = codomain_complement(f)
    W = window(f, g, r)
    # domain of g o f is the f-preimage of B_f & A_g
    expected = [n for n in range(W) if apply(f, n) is not None and apply(g, apply(f, n)) is not None]
    assert [n for n in range(W) if n not in r.holes] == expected
    assert len(r.holes) == len(f.holes) + len(difference(g.holes, B_f))
    assert len(codomain_complement(r)) == len(codomain_complement(g)) + len(difference(B_f, g.holes))


@given(partial_bijections(), partial_bijections())
def test_index_is_additive(g, f):
    assert index(compose(g, f)) == index(g) + index(f)


@given(partial_bijections(), partial_bijections(), partial_bijections())
def test_compose_is_associative(h, g, f):
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)


@given(partial_bijections())
def test_inverse_properties(f):
    g = inverse(f)
    assert g.holes == codomain_complement(f)
    assert codomain_complement(g) == f.holes
    assert g.shift == -f.shift
    assert index(g) == -index(f)
    assert inverse(g) == f
    for n in range(structural_bound(f)):
        if apply(f, n) is not None:
            assert apply(g, apply(f, n)) == n


@given(partial_bijections())
def test_sandwich_restricts_identity(f):
    left, right = sandwich_identities(f)
    assert left == restrict(identity(), f.holes)
    assert right == restrict(identity(), codomain_complement(f))


@given(partial_bijections())
def test_extension_iff_index_zero(f):
    if index(f) == 0:
        F = extend_to_permutation(f)
        assert not F.holes and not codomain_complement(F)
        for n in range(window(f, F)):
            if apply(f, n) is not None:
                assert apply(F, n) == apply(f, n)
    else:
        with pytest.raises(NonZeroIndex):
            extend_to_permutation(f)


@given(partial_bijections(), permutations())
def test_permutations_do_not_change_index(f, p):
    assert permutation_sandwich_index(f, p, "left") == index(f)
    assert permutation_sandwich_index(f, p, "right") == index(f)


@given(partial_bijections(shift=-2), partial_bijections(shift=-2))
def test_factorizations(f, g):
    lam, rho = factor_left(f, g), factor_right(f, g)
    assert almost_equal(compose(lam, f), g)
    assert almost_equal(compose(f, rho), g)
    assert index(lam) == index(rho) == 0
