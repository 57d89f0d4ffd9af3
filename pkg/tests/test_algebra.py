import pytest
from hypothesis import given, settings, strategies as st

from seqcm_engine.algebra import (
    FreeModule,
    Polynomial,
    Ring,
    Vector,
    WeightVector,
    format_polynomial,
    is_prime,
    module_term_compare,
    revlex_compare,
    substitute_linear,
    weight_of,
)


def test_prime_check():
    assert is_prime(32003) and is_prime(2) and not is_prime(32004) and not is_prime(1)
    with pytest.raises(ValueError):
        Ring(2, 32004)
    with pytest.raises(ValueError):
        Ring(0)


@pytest.mark.parametrize(
    "a,b,want",
    [((2, 0), (1, 1), 1), ((0, 2), (1, 1), -1), ((1, 1), (1, 1), 0), ((1, 0), (0, 2), -1), ((1, 1, 1), (2, 0, 1), -1), ((1, 1, 0), (2, 0, 1), -1)],
)
def test_revlex_compare(a, b, want):
    assert revlex_compare(a, b) == want


def test_module_order_rank_one_is_revlex():
    F = FreeModule((0,))
    for a, b in [((2, 0), (1, 1)), ((0, 3), (1, 2)), ((1, 1), (1, 1))]:
        assert module_term_compare((0, a), (0, b), F) == revlex_compare(a, b)


def test_module_order_component_tiebreak():
    F = FreeModule((0, 0))
    assert module_term_compare((0, (1, 0)), (1, (1, 0)), F) == 1


def test_module_order_twisted_degree_then_exponents():
    # twists (0, 1): x1*e2 and x1^2*e1 both have twisted degree 2; the
    # exponent comparison from the last variable puts x1^2*e1 below x1*e2
    F = FreeModule((0, 1))
    assert module_term_compare((1, (1, 0)), (0, (2, 0)), F) == 1
    assert module_term_compare((0, (0, 1)), (1, (0, 0)), F) == -1


def test_weight_of():
    w = WeightVector((0, 0, -1))
    assert weight_of((1, 1, 0), w) == 0
    assert weight_of((0, 0, 2), w) == -2
    assert weight_of((0, 0, 0), w) == 0
    assert WeightVector.partial_revlex(4).weights == (0, 0, 0, -1)


def test_polynomial_arithmetic(R2):
    x1, x2 = R2.var(1), R2.var(2)
    f = (x1 + x2) ** 2
    assert f == x1 * x1 + 2 * x1 * x2 + x2 * x2
    assert (f - f).is_zero()
    assert f.lead() == (1, (2, 0))
    assert f.degree() == 2 and f.is_homogeneous()
    assert not (x1 + x2 * x2).is_homogeneous()
    assert format_polynomial(x1 - 3 * x2) == "x1 - 3*x2"
    assert (32003 * x1).is_zero()


def test_substitution_examples(R2):
    x1, x2 = R2.var(1), R2.var(2)
    F = FreeModule((0,))
    v = Vector.from_polys(R2, F, [x1])
    assert substitute_linear(v, ((1, 0), (0, 1))) == v
    assert substitute_linear(v, ((0, 1), (1, 0))) == Vector.from_polys(R2, F, [x2])
    assert substitute_linear(v, ((1, 1), (0, 1))) == Vector.from_polys(R2, F, [x1 + x2])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=2, max_size=2), st.lists(st.integers(0, 3), min_size=2, max_size=2),
       st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_substitution_is_a_ring_map(a, b, g):
    R = Ring(2, 101)
    f1 = Polynomial.monomial(R, tuple(a), 3) + Polynomial.monomial(R, tuple(b), 5)
    f2 = Polynomial.monomial(R, tuple(b), 7)
    mat = ((g[0], g[1]), (g[2], g[3]))
    from seqcm_engine.algebra import substitute_poly
    assert substitute_poly(f1 * f2, mat) == substitute_poly(f1, mat) * substitute_poly(f2, mat)
    assert substitute_poly(f1 + f2, mat) == substitute_poly(f1, mat) + substitute_poly(f2, mat)


def test_vector_degrees():
    R = Ring(2)
    F = FreeModule((0, 1))
    x1, x2 = R.var(1), R.var(2)
    v = Vector.from_polys(R, F, [x2 ** 2, x1])
    assert v.is_homogeneous() and v.degree() == 2
    assert not Vector.from_polys(R, F, [x2, x1]).is_homogeneous()
    with pytest.raises(ValueError):
        Vector.from_polys(R, F, [x1])
