from hypothesis import given, settings, strategies as st

from seqcm_engine import bruteforce as bf
from seqcm_engine.algebra import Ring
from seqcm_engine.corpus import ideal, random_instance
from seqcm_engine.genericity import (
    GenericityFailure,
    child_seed,
    det_mod_p,
    gin_revlex,
    inverse_mod_p,
    is_filter_regular_sequence,
    random_change,
)
from seqcm_engine.groebner import submodule_equal
from seqcm_engine.hilbert import quotient_series
from seqcm_engine.seqcm import peskine_test

two_planes = ideal(4, lambda x: [x[1] * x[3], x[1] * x[4], x[2] * x[3], x[2] * x[4]])


def test_random_change_is_deterministic_and_invertible():
    R = Ring(4)
    a, b = random_change(11, R), random_change(11, R)
    assert a == b
    assert det_mod_p(a.matrix, R.p) != 0
    assert random_change(12, R).matrix != a.matrix
    inv = inverse_mod_p(a.matrix, R.p)
    prod = [[sum(x * y for x, y in zip(row, col)) % R.p for col in zip(*inv)] for row in a.matrix]
    assert prod == [[int(i == j) for j in range(4)] for i in range(4)]


def test_child_seeds_differ():
    assert len({child_seed(0, a, k) for a in range(4) for k in range(2)}) == 8
    assert child_seed(5, 1, 0) == child_seed(5, 1, 0)


def test_inverse_change_undoes_change():
    U = random_instance(3).U
    g = random_change(1, U.ring)
    assert submodule_equal(g.inverse().apply(g.apply(U)), U)


def test_gin_examples():
    U = ideal(2, lambda x: [x[1] ** 2])
    res = gin_revlex(U, 0)
    assert res.stable and submodule_equal(res.module, U)
    Z = ideal(3, lambda x: [])
    assert gin_revlex(Z, 0).module.generators == ()


def test_gin_independent_of_seed():
    for inst in [two_planes, ideal(3, lambda x: [x[1] * x[2], x[1] * x[3]])]:
        gins = {frozenset(gin_revlex(inst, s).module.generators) for s in (0, 1, 2, 3)}
        assert len(gins) == 1


def test_unstable_gin_is_reported():
    # over F_2 random changes are frequently degenerate; a tiny retry budget
    # must surface the instability with the seeds that were tried
    U = ideal(3, lambda x: [x[1] * x[2] + x[3] ** 2, x[1] ** 2], p=2)
    failures = 0
    for seed in range(30):
        try:
            gin_revlex(U, seed, retries=0)
        except GenericityFailure as exc:
            failures += 1
            assert len(exc.seeds) == 2
    assert failures > 0


def test_filter_regularity_examples():
    assert is_filter_regular_sequence(ideal(3, lambda x: [])).overall
    rep = is_filter_regular_sequence(two_planes)
    assert not rep.overall and rep.first_failure() == 4
    assert rep.entries[0][1] == 2
    for seed in (0, 1, 2):
        assert is_filter_regular_sequence(gin_revlex(two_planes, seed).transformed).overall


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_generic_properties(seed):
    U = random_instance(seed).U
    res = gin_revlex(U, seed)
    assert quotient_series(res.transformed) == quotient_series(U)
    for j in range(7):
        assert quotient_series(res.module)(j) == bf.quotient_hf(U, j)
    assert is_filter_regular_sequence(res.transformed).overall
    assert peskine_test(res.module).verdict
