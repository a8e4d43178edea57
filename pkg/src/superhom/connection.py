"""Connections with constant Christoffel symbols and the Hessian comparison map.

Tangent vectors are extended off the base point as constant vector fields,
so nabla_v w reduces to the Christoffel contraction v^i w^j Gamma^m_ij d_m and

    Hess(v, w)(f) = sum v^i w^j d_i d_j f(phi) - sum v^i w^j Gamma^m_ij d_m f(phi).

Gamma is indexed ``gamma[m][i][j]`` (upper index first) and is not assumed
symmetric in i, j.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConstraintViolationError, DimensionMismatchError
from .linalg import as_scalar, as_vector
from .morphism import ClassifyingPoint, EvenOperator, is_valid_morphism, psi_forward
from .polyfun import gradient_at, hessian_at, monomials_up_to


@dataclass(frozen=True)
class ConnectionData:
    n: int
    gamma: tuple = None

    def __post_init__(self):
        n = self.n
        if self.gamma is None:
            gamma = tuple(tuple((Fraction(0),) * n for _ in range(n)) for _ in range(n))
        else:
            if len(self.gamma) != n or any(len(plane) != n for plane in self.gamma):
                raise DimensionMismatchError(f"Christoffel array must be {n}x{n}x{n}")
            gamma = tuple(tuple(as_vector(row, n) for row in plane) for plane in self.gamma)
        object.__setattr__(self, "gamma", gamma)

    @classmethod
    def flat(cls, n):
        return cls(n)

    def is_flat(self):
        return not any(x for plane in self.gamma for row in plane for x in row)


@dataclass(frozen=True)
class ExtendedPoint:
    """(phi, psi1, psi2, F) with no dependence constraint on the psi's."""

    phi: tuple
    psi1: tuple
    psi2: tuple
    F_op: EvenOperator


def _check_dims(c, *vectors):
    for v in vectors:
        if len(v) != c.n:
            raise DimensionMismatchError(f"vector of length {len(v)} with a connection on R^{c.n}")


def hessian_apply(c, phi, v, w, f):
    """Hess_nabla(v, w)(f) at phi, by direct differentiation of f."""
    phi, v, w = as_vector(phi), as_vector(v), as_vector(w)
    _check_dims(c, phi, v, w)
    if f.n != c.n:
        raise DimensionMismatchError("test function lives on a different R^n")
    grad = gradient_at(f, phi)
    hess = hessian_at(f, phi)
    n = c.n
    second = sum((v[i] * w[j] * hess[i][j] for i in range(n) for j in range(n)), Fraction(0))
    transport = sum(
        (v[i] * w[j] * c.gamma[m][i][j] * grad[m] for m in range(n) for i in range(n) for j in range(n)),
        Fraction(0),
    )
    return second - transport


def hessian_operator(c, phi, v, w):
    """Hess_nabla(v, w) packaged as operator data (A, symmetric B)."""
    phi, v, w = as_vector(phi), as_vector(v), as_vector(w)
    _check_dims(c, phi, v, w)
    n = c.n
    B = [[(v[i] * w[j] + v[j] * w[i]) / 2 for j in range(n)] for i in range(n)]
    A = [-sum((v[i] * w[j] * c.gamma[m][i][j] for i in range(n) for j in range(n)), Fraction(0)) for m in range(n)]
    return EvenOperator(n, A, B)


def embed_j(c, p):
    """(phi, psi1 ^ psi2) |-> (phi, psi1, psi2, -Hess(psi1, psi2))."""
    if not isinstance(p, ClassifyingPoint):
        raise TypeError("embed_j expects a ClassifyingPoint")
    if c.n != p.n:
        raise DimensionMismatchError("connection and point dimensions differ")
    return ExtendedPoint(p.phi, p.psi1, p.psi2, -hessian_operator(c, p.phi, p.psi1, p.psi2))


def psi_nabla(c, d):
    """Connection-dependent coordinates (phi, psi1, psi2, E - Hess(psi1, psi2)).

    Defined on arbitrary k = 2 data; the psi's need not be dependent and E
    need not vanish.
    """
    if d.k != 2:
        raise ValueError(f"psi_nabla is defined for k=2 data, got k={d.k}")
    if c.n != d.n:
        raise DimensionMismatchError("connection and pullback dimensions differ")
    psi1, psi2 = d.psis
    E = d.even((1, 2))
    return ExtendedPoint(d.phi, psi1, psi2, E - hessian_operator(c, d.phi, psi1, psi2))


@dataclass
class DiagramResult:
    commutes: bool
    lhs: ExtendedPoint
    rhs: ExtendedPoint
    evaluations: list  # (monomial, lhs F(f), rhs F(f), direct E(f) - Hess(f))
    mismatches: list

    def __bool__(self):
        return self.commutes


def check_diagram(c, d, degree_bound=2):
    """Compare psi_nabla(iota(d)) with embed_j(psi_forward(d)).

    The fourth components are compared by applying them to every monomial of
    degree <= ``degree_bound``, and both are also checked against
    E(f) - Hess(psi1, psi2)(f) computed by direct differentiation.
    """
    cert = is_valid_morphism(d)
    if not cert:
        raise ConstraintViolationError("not a morphism: " + "; ".join(cert.failures))
    lhs = psi_nabla(c, d)
    rhs = embed_j(c, psi_forward(d))
    mismatches = []
    for name in ("phi", "psi1", "psi2"):
        if getattr(lhs, name) != getattr(rhs, name):
            mismatches.append((name, getattr(lhs, name), getattr(rhs, name)))
    E = d.even((1, 2))
    evaluations = []
    for f in monomials_up_to(d.n, degree_bound):
        a = lhs.F_op.apply(f, d.phi)
        b = rhs.F_op.apply(f, d.phi)
        direct = E.apply(f, d.phi) - hessian_apply(c, d.phi, d.psis[0], d.psis[1], f)
        evaluations.append((f, a, b, direct))
        if not a == b == direct:
            mismatches.append(("F", f, a, b, direct))
    return DiagramResult(not mismatches, lhs, rhs, evaluations, mismatches)


def scalar_gamma(values, n):
    """Christoffel array from a flat row-major (m, i, j) list."""
    values = [as_scalar(x) for x in values]
    if len(values) != n**3:
        raise DimensionMismatchError(f"expected {n**3} Christoffel symbols, got {len(values)}")
    it = iter(values)
    return tuple(tuple(tuple(next(it) for _ in range(n)) for _ in range(n)) for _ in range(n))
