"""Candidate pullbacks C^inf(R^n) -> R[theta_1..theta_k] and their classification.

A pullback is recorded by its coefficient data

    Phi*(f) = f(phi) + sum_i theta_i psi_i(f) + sum_{|S|>=2} theta_S E_S(f)

with psi_i(f) = psi_i . grad f(phi) and each E_S a differential operator of
order at most two at phi. Whether such data really is an algebra homomorphism
is decided by brute force over monomial pairs (``check_homomorphism``) and,
for k = 2, by the closed-form test ``is_valid_morphism``.

For k = 2 the valid data is in bijection with pairs (psi1, psi2) of dependent
vectors at phi (``psi_forward`` / ``psi_inverse``). The target stores the pair
rather than the bivector psi1 ^ psi2: under the constraint the bivector is
always zero, so only the pair carries the information needed to invert.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .bivector import first_nonvanishing_minor, minor, require_dependent
from .errors import ConstraintViolationError, DimensionMismatchError, UnsupportedKError
from .grassmann import GrassmannElement, all_index_sets, index_set, members
from .linalg import as_scalar, as_vector
from .polyfun import Polynomial, gradient_at, hessian_at, jet_at, monomials_up_to


def _symmetrize(B, n):
    rows = [as_vector(r, n) for r in B]
    if len(rows) != n:
        raise DimensionMismatchError(f"second-order block must be {n}x{n}")
    return tuple(tuple((rows[a][b] + rows[b][a]) / 2 for b in range(n)) for a in range(n))


@dataclass(frozen=True)
class EvenOperator:
    """E(f) = sum A^s d_s f(phi) + sum_{mu,nu} B^{mu nu} d_mu d_nu f(phi).

    ``B`` is symmetrized on construction, so passing B^{12} = 1, B^{21} = 0
    stores 1/2 in both slots; E(x^1 x^2) = B^{12} + B^{21} either way.
    """

    n: int
    A: tuple = None
    B: tuple = None

    def __post_init__(self):
        n = self.n
        A = (Fraction(0),) * n if self.A is None else as_vector(self.A, n)
        zero = tuple((Fraction(0),) * n for _ in range(n))
        B = zero if self.B is None else _symmetrize(self.B, n)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    @classmethod
    def zero(cls, n):
        return cls(n)

    def is_zero(self):
        return not any(self.A) and not any(any(r) for r in self.B)

    def apply_jet(self, grad, hess):
        n = self.n
        total = sum((self.A[s] * grad[s] for s in range(n)), Fraction(0))
        for a in range(n):
            for b in range(n):
                if self.B[a][b]:
                    total += self.B[a][b] * hess[a][b]
        return total

    def apply(self, f, phi):
        if f.n != self.n:
            raise DimensionMismatchError(f"operator on R^{self.n} applied to a function on R^{f.n}")
        return self.apply_jet(gradient_at(f, phi), hessian_at(f, phi))

    def __add__(self, other):
        if other.n != self.n:
            raise DimensionMismatchError("operator dimensions differ")
        n = self.n
        return EvenOperator(
            n,
            [self.A[s] + other.A[s] for s in range(n)],
            [[self.B[a][b] + other.B[a][b] for b in range(n)] for a in range(n)],
        )

    def __neg__(self):
        return EvenOperator(self.n, [-a for a in self.A], [[-b for b in r] for r in self.B])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scale):
        scale = as_scalar(scale)
        return EvenOperator(self.n, [scale * a for a in self.A], [[scale * b for b in r] for r in self.B])

    __rmul__ = __mul__


@dataclass(frozen=True)
class PullbackData:
    """Coefficient record of a candidate pullback.

    ``evens`` maps generator subsets with at least two elements (index tuples
    or masks) to :class:`EvenOperator`. Zero operators are dropped, so two
    records are equal exactly when they define the same map.
    """

    k: int
    n: int
    phi: tuple
    psis: tuple
    evens: dict = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        phi = as_vector(self.phi, self.n)
        psis = tuple(as_vector(p, self.n) for p in self.psis)
        if len(psis) != self.k:
            raise DimensionMismatchError(f"expected {self.k} odd vectors, got {len(psis)}")
        evens = {}
        for s, op in self.evens.items():
            mask = s if isinstance(s, int) else index_set(s, self.k)
            if mask >> self.k or bin(mask).count("1") < 2:
                raise IndexError(f"even-sector key {members(mask)} must have at least two generators")
            if not isinstance(op, EvenOperator):
                op = EvenOperator(self.n, *op)
            if op.n != self.n:
                raise DimensionMismatchError("even operator dimension differs from n")
            if not op.is_zero():
                evens[mask] = op
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "psis", psis)
        object.__setattr__(self, "evens", evens)

    def even(self, s):
        mask = s if isinstance(s, int) else index_set(s, self.k)
        return self.evens.get(mask, EvenOperator.zero(self.n))

    @classmethod
    def constant(cls, k, phi):
        phi = as_vector(phi)
        return cls(k, len(phi), phi, [(0,) * len(phi)] * k)


@dataclass(frozen=True)
class ClassifyingPoint:
    """(phi, psi1, psi2) with psi1 ^ psi2 = 0; the fiber coordinates are odd."""

    phi: tuple
    psi1: tuple
    psi2: tuple
    parity_tag: str = "odd"

    def __post_init__(self):
        phi = as_vector(self.phi)
        psi1 = as_vector(self.psi1, len(phi))
        psi2 = as_vector(self.psi2, len(phi))
        require_dependent(psi1, psi2, "classifying point")
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "psi1", psi1)
        object.__setattr__(self, "psi2", psi2)

    @property
    def n(self):
        return len(self.phi)


class Violation(NamedTuple):
    f: Polynomial
    g: Polynomial
    basis_set: tuple
    lhs: Fraction  # coefficient in Phi*(fg)
    rhs: Fraction  # coefficient in Phi*(f) Phi*(g)


@dataclass
class ViolationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def sectors(self):
        """Distinct basis sets on which some violation occurred."""
        return sorted({v.basis_set for v in self.violations}, key=lambda s: (len(s), s))


def _jet(d, f):
    if f.n != d.n:
        raise DimensionMismatchError(f"function on R^{f.n} given to a pullback on R^{d.n}")
    return jet_at(f, d.phi)


def _odd_value(psi, grad):
    return sum((a * b for a, b in zip(psi, grad)), Fraction(0))


def apply_pullback(d, f):
    value, grad, hess = _jet(d, f)
    coeffs = {0: value}
    for i, psi in enumerate(d.psis):
        coeffs[1 << i] = _odd_value(psi, grad)
    for mask, op in d.evens.items():
        coeffs[mask] = op.apply_jet(grad, hess)
    return GrassmannElement(d.k, coeffs)


def check_homomorphism(d, degree_bound=2):
    """Compare Phi*(fg) with Phi*(f)Phi*(g) on all monomial pairs of degree <= bound.

    Violations come out ordered by (f, g) in graded-lex order, then by basis set.
    """
    if degree_bound < 1:
        raise ValueError("degree_bound must be at least 1")
    monos = monomials_up_to(d.n, degree_bound)
    images = [apply_pullback(d, m) for m in monos]
    products = {}
    sets = all_index_sets(d.k)
    report = ViolationReport()
    for f, pf in zip(monos, images):
        for g, pg in zip(monos, images):
            fg = f * g
            key = next(iter(fg.terms))
            if key not in products:
                products[key] = apply_pullback(d, fg)
            lhs = products[key]
            rhs = pf * pg
            if lhs == rhs:
                continue
            for s in sets:
                a, b = lhs.coefficient(s), rhs.coefficient(s)
                if a != b:
                    report.violations.append(Violation(f, g, members(s), a, b))
    return report


def key_identity_residual(d, f, g, s):
    """E_S(fg) - f E_S(g) - g E_S(f) - (psi_i(f) psi_j(g) - psi_j(f) psi_i(g)) at phi.

    ``s`` names a two-element generator set {i, j}. The residual is exactly the
    theta_S mismatch lhs - rhs that ``check_homomorphism`` sees for (f, g).
    """
    mask = s if isinstance(s, int) else index_set(s, d.k)
    idx = members(mask)
    if len(idx) != 2:
        raise ValueError(f"key identity needs a two-element index set, got {idx}")
    i, j = idx
    op = d.even(mask)
    fv, fgrad, fhess = _jet(d, f)
    gv, ggrad, ghess = _jet(d, g)
    _, pgrad, phess = _jet(d, f * g)
    e_fg = op.apply_jet(pgrad, phess)
    e_f = op.apply_jet(fgrad, fhess)
    e_g = op.apply_jet(ggrad, ghess)
    pi, pj = d.psis[i - 1], d.psis[j - 1]
    bracket = _odd_value(pi, fgrad) * _odd_value(pj, ggrad) - _odd_value(pj, fgrad) * _odd_value(pi, ggrad)
    return e_fg - fv * e_g - gv * e_f - bracket


@dataclass(frozen=True)
class ValidityCertificate:
    """Outcome of the closed-form k = 2 test. Truthy iff valid."""

    dependent: bool
    even_zero: bool
    failures: tuple = ()

    @property
    def valid(self):
        return self.dependent and self.even_zero

    def __bool__(self):
        return self.valid


def is_valid_morphism(d):
    if d.k != 2:
        raise UnsupportedKError(f"closed-form validity is only available for k=2 (got k={d.k}); use check_homomorphism")
    psi1, psi2 = d.psis
    failures = []
    bad = first_nonvanishing_minor(psi1, psi2)
    if bad is not None:
        i, j = bad
        failures.append(f"psi1 and psi2 are independent: minor ({i},{j}) = {minor(psi1, psi2, i, j)}")
    even_zero = not d.evens
    if not even_zero:
        failures.append("theta1theta2 operator E is not identically zero")
    return ValidityCertificate(bad is None, even_zero, tuple(failures))


def psi_forward(d):
    """Classifying point (phi, psi1, psi2) of a valid k = 2 pullback."""
    cert = is_valid_morphism(d)
    if not cert:
        raise ConstraintViolationError("not a morphism: " + "; ".join(cert.failures))
    return ClassifyingPoint(d.phi, d.psis[0], d.psis[1])


def psi_inverse(c):
    if not isinstance(c, ClassifyingPoint):
        phi, psi1, psi2 = c
        c = ClassifyingPoint(phi, psi1, psi2)
    else:
        require_dependent(c.psi1, c.psi2, "classifying point")
    return PullbackData(2, c.n, c.phi, (c.psi1, c.psi2))
