import pytest

from superhom.errors import DimensionMismatchError
from superhom.polyfun import Polynomial, monomials_up_to, p_deriv, p_eval, p_mul

from conftest import rand_poly, rand_vec

x1 = Polynomial.coordinate(2, 1)
x2 = Polynomial.coordinate(2, 2)


def eval_oracle(f, x):
    """Horner-free term-by-term evaluation through repeated multiplication."""
    total = 0
    for exps, c in f.terms.items():
        term = c
        for xi, e in zip(x, exps):
            for _ in range(e):
                term = term * xi
        total += term
    return total


def test_eval_examples():
    assert p_eval(x1 * x2, [0, 0]) == 0
    assert p_eval(Polynomial.constant(3), [7, -1, 2]) == 1
    f = x1 + 2 * x2
    assert p_eval(f, [3, 5]) == 13 == eval_oracle(f, [3, 5])


def test_eval_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        p_eval(x1, [1, 2, 3])


def test_mul_examples():
    assert p_mul(x1, x2) == Polynomial.monomial((1, 1))
    f = x1 + 3 * x2 * x2
    assert p_mul(f, Polynomial.constant(2)) == f
    with pytest.raises(DimensionMismatchError):
        p_mul(x1, Polynomial.coordinate(3, 1))


def test_evaluation_is_multiplicative(rng):
    for _ in range(200):
        n = rng.randint(1, 4)
        f, g, x = rand_poly(rng, n), rand_poly(rng, n), rand_vec(rng, n)
        assert p_eval(p_mul(f, g), x) == p_eval(f, x) * p_eval(g, x)
        assert p_eval(f + g, x) == p_eval(f, x) + p_eval(g, x)
        assert p_eval(f, x) == eval_oracle(f, x)


def test_deriv_examples():
    assert p_deriv(x1 * x2, 1) == x2
    assert p_deriv(x2, 1).is_zero()
    with pytest.raises(IndexError):
        p_deriv(x1, 3)
    with pytest.raises(IndexError):
        p_deriv(x1, 0)


def test_mixed_partials_commute(rng):
    for _ in range(200):
        n = rng.randint(2, 4)
        f = rand_poly(rng, n, max_deg=4)
        i, j = rng.sample(range(1, n + 1), 2)
        assert p_deriv(p_deriv(f, i), j) == p_deriv(p_deriv(f, j), i)


def test_leibniz(rng):
    for _ in range(200):
        n = rng.randint(1, 4)
        f, g = rand_poly(rng, n), rand_poly(rng, n)
        i = rng.randint(1, n)
        assert p_deriv(f * g, i) == p_deriv(f, i) * g + f * p_deriv(g, i)


def test_degree_is_additive(rng):
    for _ in range(200):
        n = rng.randint(1, 3)
        f, g = rand_poly(rng, n), rand_poly(rng, n)
        if f.is_zero() or g.is_zero():
            continue
        assert (f * g).degree() == f.degree() + g.degree()


def test_monomials_up_to_grlex():
    names = [str(m) for m in monomials_up_to(2, 2)]
    assert names == ["1", "x1", "x2", "x1^2", "x1*x2", "x2^2"]
    # C(n + d, d) monomials
    assert len(monomials_up_to(3, 3)) == 20


def test_jet_matches_derivative_polynomials(rng):
    from superhom.polyfun import gradient_at, hessian_at, jet_at

    for _ in range(200):
        n = rng.randint(1, 4)
        f, x = rand_poly(rng, n, max_deg=4), rand_vec(rng, n)
        if rng.random() < 0.3:
            x = [0] * n
        assert jet_at(f, x) == (p_eval(f, x), gradient_at(f, x), hessian_at(f, x))
