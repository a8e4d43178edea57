import random
from fractions import Fraction

import pytest

from superhom.errors import ConstraintViolationError, DimensionMismatchError, UnsupportedKError
from superhom.grassmann import GrassmannElement as G
from superhom.morphism import (
    ClassifyingPoint,
    EvenOperator,
    PullbackData,
    apply_pullback,
    check_homomorphism,
    is_valid_morphism,
    key_identity_residual,
    psi_forward,
    psi_inverse,
)
from superhom.polyfun import Polynomial, monomials_up_to

from conftest import dependent_pair, rand_poly, rand_q, rand_vec

x1 = Polynomial.coordinate(2, 1)
x2 = Polynomial.coordinate(2, 2)
E1, E2, ZERO = [1, 0], [0, 1], [0, 0]


def independent():
    return PullbackData(2, 2, ZERO, [E1, E2])


def test_pullback_of_one(rng):
    for _ in range(20):
        n = rng.randint(1, 3)
        d = PullbackData(2, n, rand_vec(rng, n), [rand_vec(rng, n), rand_vec(rng, n)],
                         {(1, 2): EvenOperator(n, rand_vec(rng, n), [rand_vec(rng, n) for _ in range(n)])})
        assert apply_pullback(d, Polynomial.constant(n)) == G.scalar(2, 1)


def test_dependent_pair_kills_x1x2_at_origin():
    for kk in (0, 1, -3, Fraction(1, 2)):
        d = PullbackData(2, 2, ZERO, [E1, [kk, 0]])
        assert apply_pullback(d, x1 * x2).is_zero()


def test_pullback_of_coordinates():
    a, b1, b2 = [2, -1, 3], [1, 0, 4], [Fraction(1, 2), 7, 0]
    d = PullbackData(2, 3, a, [b1, b2])
    for mu in range(3):
        got = apply_pullback(d, Polynomial.coordinate(3, mu + 1))
        assert got == G(2, {(): a[mu], (1,): b1[mu], (2,): b2[mu]})


def test_apply_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        apply_pullback(independent(), Polynomial.coordinate(3, 1))


def test_homomorphism_dependent_pair_passes():
    for bound in (1, 2, 3):
        d = PullbackData(2, 2, [1, -2], [[1, 3], [-2, -6]])
        assert check_homomorphism(d, bound).ok


def test_homomorphism_independent_pair_fails():
    report = check_homomorphism(independent(), 2)
    assert not report.ok
    hits = [v for v in report if v.f == x1 and v.g == x2 and v.basis_set == (1, 2)]
    assert len(hits) == 1
    assert (hits[0].lhs, hits[0].rhs) == (0, 1)
    # only the top sector can fail: the body and theta_i parts are the
    # character and derivation parts, which always hold
    assert report.sectors() == [(1, 2)]


def test_constant_morphism_passes():
    assert check_homomorphism(PullbackData.constant(2, [0, 0, 0]), 2).ok


def test_report_order_is_graded_lex():
    monos = [str(m) for m in monomials_up_to(2, 2)]
    report = check_homomorphism(independent(), 2)
    keys = [(monos.index(str(v.f)), monos.index(str(v.g))) for v in report]
    assert keys == sorted(keys)


def test_key_identity_examples():
    d = independent()
    assert key_identity_residual(d, x1, x2, (1, 2)) == -1
    assert key_identity_residual(d, x2, x1, (1, 2)) == 1
    valid = PullbackData(2, 2, ZERO, [E1, [3, 0]])
    for f in monomials_up_to(2, 2):
        for g in monomials_up_to(2, 2):
            assert key_identity_residual(valid, f, g, (1, 2)) == 0
    with pytest.raises(ValueError):
        key_identity_residual(d, x1, x2, (1,))


def random_k2(rng, n):
    return PullbackData(
        2, n, rand_vec(rng, n), [rand_vec(rng, n), rand_vec(rng, n)],
        {(1, 2): EvenOperator(n, rand_vec(rng, n), [rand_vec(rng, n) for _ in range(n)])},
    )


def test_residual_matches_checker(rng):
    for _ in range(30):
        n = rng.randint(1, 3)
        d = random_k2(rng, n)
        report = check_homomorphism(d, 2)
        mismatch = {(str(v.f), str(v.g)): v.lhs - v.rhs for v in report if v.basis_set == (1, 2)}
        for f in monomials_up_to(n, 2):
            for g in monomials_up_to(n, 2):
                assert key_identity_residual(d, f, g, (1, 2)) == mismatch.get((str(f), str(g)), 0)


def test_residual_antisymmetry(rng):
    for _ in range(100):
        n = rng.randint(1, 3)
        d = random_k2(rng, n)
        f, g = rand_poly(rng, n), rand_poly(rng, n)
        E = d.even((1, 2))
        phi = d.phi
        from superhom.polyfun import p_eval

        leibniz_defect = E.apply(f * g, phi) - p_eval(f, phi) * E.apply(g, phi) - p_eval(g, phi) * E.apply(f, phi)
        total = key_identity_residual(d, f, g, (1, 2)) + key_identity_residual(d, g, f, (1, 2))
        assert total == 2 * leibniz_defect


def test_is_valid_morphism_examples():
    assert is_valid_morphism(PullbackData(2, 2, ZERO, [[1, 2], [3, 6]]))
    cert = is_valid_morphism(independent())
    assert not cert and not cert.dependent and cert.even_zero
    cert = is_valid_morphism(PullbackData(2, 2, ZERO, [E1, ZERO], {(1, 2): EvenOperator(2, None, [[0, 1], [0, 0]])}))
    assert not cert and cert.dependent and not cert.even_zero
    with pytest.raises(UnsupportedKError):
        is_valid_morphism(PullbackData.constant(3, [0]))


def test_symmetrization_of_B():
    op = EvenOperator(2, None, [[0, 1], [0, 0]])
    assert op.B == ((0, Fraction(1, 2)), (Fraction(1, 2), 0))
    # B^12 + B^21 is all that x1*x2 sees
    assert op.apply(x1 * x2, ZERO) == 1


def test_first_order_even_term_is_a_derivation(rng):
    # A first-order top coefficient obeys the Leibniz rule, so the brute-force
    # check accepts it even though the closed-form test demands E = 0.
    for _ in range(20):
        n = rng.randint(1, 3)
        v, w = dependent_pair(rng, n)
        A = rand_vec(rng, n)
        if not any(A):
            continue
        d = PullbackData(2, n, rand_vec(rng, n), [v, w], {(1, 2): EvenOperator(n, A)})
        assert check_homomorphism(d, 3).ok
        assert not is_valid_morphism(d)


def test_apply_linear_and_multiplicative_when_valid(rng):
    for _ in range(100):
        n = rng.randint(1, 3)
        v, w = dependent_pair(rng, n)
        d = PullbackData(2, n, rand_vec(rng, n), [v, w])
        f, g = rand_poly(rng, n), rand_poly(rng, n)
        a = rand_q(rng)
        assert apply_pullback(d, f + g * a) == apply_pullback(d, f) + apply_pullback(d, g) * a
        assert apply_pullback(d, f * g) == apply_pullback(d, f) * apply_pullback(d, g)


def test_psi_forward_examples():
    d = PullbackData(2, 2, [1, 2], [[1, 0], [2, 0]])
    assert psi_forward(d) == ClassifyingPoint([1, 2], [1, 0], [2, 0])
    z = PullbackData.constant(2, [3, 4])
    assert psi_forward(z) == ClassifyingPoint([3, 4], ZERO, ZERO)
    with pytest.raises(ConstraintViolationError, match=r"minor \(1,2\)"):
        psi_forward(independent())


def test_psi_inverse_examples():
    d = psi_inverse(ClassifyingPoint(ZERO, E1, [2, 0]))
    assert d.evens == {} and d.psis[1] == (2, 0)
    assert psi_inverse(([5, 6], ZERO, ZERO)) == PullbackData.constant(2, [5, 6])
    with pytest.raises(ConstraintViolationError):
        psi_inverse((ZERO, E1, E2))


def test_round_trips(rng):
    for _ in range(1000):
        n = rng.randint(1, 4)
        v, w = dependent_pair(rng, n)
        c = ClassifyingPoint(rand_vec(rng, n), v, w)
        d = psi_inverse(c)
        assert psi_forward(d) == c
        assert psi_inverse(psi_forward(d)) == d


def test_inverse_is_always_a_homomorphism(rng):
    for _ in range(500):
        n = rng.randint(1, 3)
        v, w = dependent_pair(rng, n)
        assert check_homomorphism(psi_inverse((rand_vec(rng, n), v, w)), 3).ok


def test_pullback_validation():
    with pytest.raises(DimensionMismatchError):
        PullbackData(2, 2, ZERO, [E1])
    with pytest.raises(IndexError):
        PullbackData(2, 2, ZERO, [E1, E2], {(1,): EvenOperator(2)})
    # zero operators are dropped so equality is structural
    assert PullbackData(2, 2, ZERO, [E1, E1], {(1, 2): EvenOperator(2)}) == PullbackData(2, 2, ZERO, [E1, E1])
