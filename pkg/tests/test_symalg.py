import random

import pytest
from hypothesis import given, settings

from olacat.errors import DomainError
from olacat.oracle import naive_sym_mult, naive_sym_table
from olacat.symalg import (in_sym_support, r_multiplicity, sym_support_degree, sym_table,
                           sym_weight_mult, weighted_root_space)
from olacat.weights import EligibleWeight, Root, dominance_geq, parse_weight, psi, zero

from conftest import weights

ONE_STEP = parse_weight("e[-1,1]-e[1,1]", 1)
TWO_STEPS = parse_weight("e[-1,1]-e[1,1]+e[-2,1]-e[2,1]", 1)


def as_weight(n, key):
    return EligibleWeight.make(n, None, dict(key))


def test_root_multiplicities():
    assert r_multiplicity(Root((-1, 1), (1, 1))) == 1
    assert r_multiplicity(Root((-1, 2), (1, 1))) == 3
    assert r_multiplicity(Root((1, 1), (2, 1))) == 0
    assert r_multiplicity(Root((1, 1), (-1, 1))) == 0


def test_weighted_root_space_contents():
    space = weighted_root_space(2, 2)
    assert space.entries
    for alpha, m in space.entries.items():
        assert alpha.psi() <= -1
        assert m == 2 ** (-alpha.psi()) - 1
        assert max(abs(alpha.p.i), abs(alpha.q.i)) <= 2
    # n=1: every root from the negative half to the positive half
    assert len(weighted_root_space(1, 2).entries) == 4


def test_worked_values():
    assert sym_weight_mult(zero(1), 1) == 1
    assert sym_weight_mult(ONE_STEP, 1) == 1
    assert sym_weight_mult(TWO_STEPS, 2) == 2
    assert sym_weight_mult(-ONE_STEP, 1) == 0


def test_domain_errors():
    with pytest.raises(DomainError):
        sym_weight_mult(parse_weight("w[1]", 1), 1)
    with pytest.raises(DomainError):
        sym_weight_mult(TWO_STEPS, 1)


def test_support_degree():
    assert sym_support_degree(zero(1)) == 0
    assert sym_support_degree(ONE_STEP) == 1
    assert sym_support_degree(-ONE_STEP) is None
    assert sym_support_degree(parse_weight("e[1,1]-e[2,1]", 1)) is None
    assert sym_support_degree(TWO_STEPS) == 2


@pytest.mark.parametrize("n,r", [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)])
def test_dp_matches_naive_enumeration(n, r):
    naive = naive_sym_table(n, r, 3)
    for key, count in naive.items():
        nu = as_weight(n, key)
        assert sym_weight_mult(nu, r) == count, str(nu)
    for degree in range(4):
        for nu, count in sym_table(n, r, degree).items():
            assert naive[frozenset((tuple(p), b) for p, b in nu.finite)] == count


@settings(max_examples=150, deadline=None)
@given(weights(r=2, spread=2, level=None).map(lambda w: EligibleWeight.make(w.n, None, w.finite_map)))
def test_dp_matches_naive_off_support(nu):
    if -psi(nu) > 3:
        return
    assert sym_weight_mult(nu, 2) == naive_sym_mult(nu, 2)


@pytest.mark.parametrize("n,r", [(1, 3), (2, 2)])
def test_grading_consistency(n, r):
    for degree in range(4):
        for nu, count in sym_table(n, r, degree).items():
            assert count > 0
            assert psi(nu) == -degree
            assert dominance_geq(zero(n), nu)
            assert in_sym_support(nu)


@settings(max_examples=200, deadline=None)
@given(weights(r=2, spread=2).map(lambda w: EligibleWeight.make(w.n, None, w.finite_map)))
def test_support_test_matches_dp(nu):
    if -psi(nu) > 4:
        return
    assert in_sym_support(nu) == (sym_weight_mult(nu, 3) > 0)


def test_single_block_stabilizes_in_rank():
    # every weight of height at most six, read off the rank-3 table
    for degree in range(7):
        for nu, count in sym_table(1, 3, degree).items():
            base = max(nu.eligibility_rank, 1)
            for r in range(base, 4):
                assert sym_weight_mult(nu, r) == count


def test_two_blocks_grow_with_rank():
    # roots of psi-degree -2 route extra mass through the middle class box,
    # which gets bigger with the rank; the count never settles
    nu = parse_weight("e[-1,2]-e[1,1]", 2)
    assert [sym_weight_mult(nu, r) for r in (1, 2, 3, 4)] == [5, 7, 9, 11]


def test_random_weights_of_two_blocks_are_monotone_in_rank():
    rng = random.Random(4)
    for _ in range(40):
        fin = {}
        for _ in range(2):
            fin[(rng.choice([1, -1]) * rng.randint(1, 2), rng.randint(1, 2))] = rng.randint(-1, 1)
        nu = EligibleWeight.make(2, None, fin)
        if -psi(nu) > 3:
            continue
        counts = [sym_weight_mult(nu, r) for r in (2, 3)]
        assert counts[0] <= counts[1]
