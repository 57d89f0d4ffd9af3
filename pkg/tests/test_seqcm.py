import pytest
from hypothesis import given, settings, strategies as st

from seqcm_engine.algebra import Ring
from seqcm_engine.corpus import curated, ideal, random_instance
from seqcm_engine.genericity import child_seed, gin_revlex, random_linear_form
from seqcm_engine.groebner import (
    InternalInconsistency,
    saturate_element,
)
from seqcm_engine.seqcm import (
    adeg,
    adeg_criterion,
    herzog_sbarra_test,
    multiplicity_lemma_check,
    peskine_test,
    sally_claim_check,
    semicontinuity_chain,
    seqcm_verdict,
)

zero = ideal(3, lambda x: [])
edge_vertex = ideal(3, lambda x: [x[1] * x[2], x[1] * x[3]])
two_planes = ideal(4, lambda x: [x[1] * x[3], x[1] * x[4], x[2] * x[3], x[2] * x[4]])


def test_adeg_examples():
    assert adeg(ideal(2, lambda x: [])).total == 1
    assert adeg(edge_vertex).total == 2
    assert adeg(two_planes).total == 2


def test_peskine_examples():
    assert peskine_test(zero).verdict
    res = peskine_test(edge_vertex)
    assert res.verdict
    assert {(i, d, dp) for i, _, d, dp, _ in res.certificates} == {(2, 2, 2), (1, 1, 1)}
    res = peskine_test(two_planes)
    assert not res.verdict
    assert (1, 3, 0, 0, False) in res.certificates


def test_monomial_against_itself():
    assert herzog_sbarra_test(edge_vertex, edge_vertex).verdict
    assert adeg_criterion(two_planes, two_planes).verdict


def test_criteria_against_gin():
    V = gin_revlex(edge_vertex, 0).module
    assert herzog_sbarra_test(edge_vertex, V).verdict
    a = adeg_criterion(edge_vertex, V)
    assert a.verdict and a.U.total == a.V.total == 2
    W = gin_revlex(two_planes, 0).module
    assert not herzog_sbarra_test(two_planes, W).verdict
    b = adeg_criterion(two_planes, W)
    assert not b.verdict and b.U.total == 2 < b.V.total


def test_adeg_decrease_is_an_engine_error():
    # comparing in the wrong direction violates semicontinuity
    W = gin_revlex(two_planes, 0).module
    with pytest.raises(InternalInconsistency):
        adeg_criterion(W, two_planes)


def test_verdict_examples():
    rep = seqcm_verdict(zero)
    assert rep.verdicts == (True, True, True)
    rep = seqcm_verdict(edge_vertex, "generic", 7)
    assert rep.verdicts == (True, True, True)
    rep = seqcm_verdict(two_planes, "as-given")
    assert not rep.filter_regular.overall and rep.filter_regular.first_failure() == 4
    assert rep.verdicts == (False, None, None) and not rep.applicable
    with pytest.raises(ValueError):
        seqcm_verdict(zero, "sideways")


def test_semicontinuity_examples():
    for t in semicontinuity_chain(edge_vertex):
        assert t[0] == t[1] == t[2]
    hyp = ideal(3, lambda x: [x[1] * x[2] + x[2] * x[3]])
    for t in semicontinuity_chain(hyp):
        assert t[0] == t[1] == t[2]
    gU = gin_revlex(two_planes, 0).transformed
    chain = semicontinuity_chain(gU)
    assert any(a < c for a, b, c in chain)


def test_lemma_examples():
    R = Ring(2)
    U = ideal(2, lambda x: [x[1] ** 2])
    res = multiplicity_lemma_check(U, R.var(2))
    assert res.applicable and res.holds
    ell = random_linear_form(two_planes.ring, 3)
    assert not multiplicity_lemma_check(two_planes, ell).applicable
    m = ideal(2, lambda x: [x[1], x[2]])
    assert not multiplicity_lemma_check(m, R.var(1)).applicable


def test_sally_examples():
    res = sally_claim_check(zero, zero.ring.var(3))
    assert res.applicable and res.holds
    # x3 is regular on S/(x1^2, x1 x2) but the cut has an embedded point
    U = ideal(3, lambda x: [x[1] ** 2, x[1] * x[2]])
    assert not sally_claim_check(U, U.ring.var(3)).applicable


def test_curated_three_way_agreement():
    for inst in curated():
        rep = seqcm_verdict(inst.U)
        assert len(set(rep.verdicts)) == 1, inst.name


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_saturation_stability(seed):
    U = gin_revlex(random_instance(seed).U, seed).transformed
    sat = saturate_element(U, U.ring.var(U.n))
    assert seqcm_verdict(U, seed=seed).verdicts == seqcm_verdict(sat, seed=seed).verdicts


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_forward_implication_and_top_ext(seed):
    U = random_instance(seed).U
    rep = seqcm_verdict(U, seed=seed)
    if rep.peskine.verdict:
        assert rep.adeg.verdict
    # Ext^n always matches its gin counterpart
    _, a, b = herzog_sbarra_test(U, rep.initial_module).pairs[0]
    assert a == b


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_lemma_and_claim_random(seed):
    U = random_instance(seed).U
    ell = random_linear_form(U.ring, child_seed(seed, 1))
    for x in (ell, U.ring.var(U.n)):
        a = multiplicity_lemma_check(U, x)
        b = sally_claim_check(U, x)
        assert a.holds is not False and b.holds is not False
