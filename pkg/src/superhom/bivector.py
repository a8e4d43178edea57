"""Wedge products of tangent vectors and the fiber variety of dependent pairs.

For a base point phi of R^n the fiber is the set of pairs (psi1, psi2) with
psi1 ^ psi2 = 0, cut out by the 2x2 minors

    psi1^i psi2^j - psi1^j psi2^i = 0,    1 <= i < j <= n.

It is the union of A = {(0, psi2)} and B = {(psi1, lam * psi1) : psi1 != 0},
singular at the origin. Local dimensions are computed as 2n minus the exact
rank of the Jacobian of the minor equations.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import NamedTuple, Optional

from fractions import Fraction

from .errors import ConstraintViolationError, DimensionMismatchError
from .linalg import as_scalar, as_vector, rank


@dataclass(frozen=True)
class Bivector:
    """Element of the second exterior power; keys are (i, j) with 1 <= i < j <= n."""

    n: int
    components: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), c in self.components.items():
            if not 1 <= i < j <= self.n:
                raise IndexError(f"bivector key {(i, j)} invalid for n={self.n}")
            c = as_scalar(c)
            if c:
                clean[(i, j)] = c
        object.__setattr__(self, "components", clean)

    def __getitem__(self, key):
        return self.components.get(tuple(key), Fraction(0))

    def is_zero(self):
        return not self.components

    def __add__(self, other):
        if self.n != other.n:
            raise DimensionMismatchError("bivector dimensions differ")
        out = dict(self.components)
        for key, c in other.components.items():
            out[key] = out.get(key, 0) + c
        return Bivector(self.n, out)

    def __neg__(self):
        return Bivector(self.n, {key: -c for key, c in self.components.items()})

    def __mul__(self, scale):
        scale = as_scalar(scale)
        return Bivector(self.n, {key: c * scale for key, c in self.components.items()})

    __rmul__ = __mul__


def _pair(v, w):
    v, w = as_vector(v), as_vector(w)
    if len(v) != len(w):
        raise DimensionMismatchError(f"vector lengths differ: {len(v)} vs {len(w)}")
    return v, w


def minor(v, w, i, j):
    """The (i, j) minor v^i w^j - v^j w^i, 1-based."""
    return v[i - 1] * w[j - 1] - v[j - 1] * w[i - 1]


def wedge(v, w):
    v, w = _pair(v, w)
    n = len(v)
    return Bivector(n, {(i, j): minor(v, w, i, j) for i, j in combinations(range(1, n + 1), 2)})


def pair_rank(v, w):
    """Rank (0, 1 or 2) of the 2 x n matrix with rows v and w."""
    v, w = _pair(v, w)
    return rank([v, w])


def fiber_membership(v, w):
    """True iff every 2x2 minor of (v, w) vanishes."""
    v, w = _pair(v, w)
    n = len(v)
    return all(minor(v, w, i, j) == 0 for i, j in combinations(range(1, n + 1), 2))


def first_nonvanishing_minor(v, w):
    """The first (i, j) with a nonzero minor, or None."""
    v, w = _pair(v, w)
    for i, j in combinations(range(1, len(v) + 1), 2):
        if minor(v, w, i, j):
            return (i, j)
    return None


def require_dependent(v, w, what="pair"):
    bad = first_nonvanishing_minor(v, w)
    if bad is not None:
        i, j = bad
        raise ConstraintViolationError(
            f"{what} is not linearly dependent: minor ({i},{j}) = {minor(as_vector(v), as_vector(w), i, j)}"
        )


@dataclass(frozen=True)
class FiberPoint:
    psi1: tuple
    psi2: tuple

    def __post_init__(self):
        v, w = _pair(self.psi1, self.psi2)
        require_dependent(v, w, "fiber point")
        object.__setattr__(self, "psi1", v)
        object.__setattr__(self, "psi2", w)

    @property
    def n(self):
        return len(self.psi1)


def _fiber_point(p):
    if isinstance(p, FiberPoint):
        return p
    v, w = p
    return FiberPoint(v, w)


class Component(str, Enum):
    ORIGIN = "origin"
    A = "A"
    B = "B"


class ComponentLabel(NamedTuple):
    label: Component
    scale: Optional[Fraction] = None  # lambda with psi2 = lambda * psi1, only for B


def component_of(p):
    """Which piece of the A u B decomposition ``p`` lies in.

    Returns the label and, for points of B, the factor lambda with
    psi2 = lambda * psi1.
    """
    p = _fiber_point(p)
    zero1 = not any(p.psi1)
    zero2 = not any(p.psi2)
    if zero1 and zero2:
        return ComponentLabel(Component.ORIGIN)
    if zero1:
        return ComponentLabel(Component.A)
    i = next(i for i, x in enumerate(p.psi1) if x)
    return ComponentLabel(Component.B, p.psi2[i] / p.psi1[i])


def minor_jacobian(v, w):
    """Jacobian of the minor equations, one row per (i, j) with i < j.

    Columns are ordered psi1^1..psi1^n, psi2^1..psi2^n.
    """
    v, w = _pair(v, w)
    n = len(v)
    rows = []
    for i, j in combinations(range(n), 2):
        row = [Fraction(0)] * (2 * n)
        # d(v_i w_j - v_j w_i)
        row[i] += w[j]
        row[j] -= w[i]
        row[n + j] += v[i]
        row[n + i] -= v[j]
        rows.append(row)
    return rows


def local_fiber_dimension(p):
    """2n minus the rank of the minor Jacobian at ``p``.

    This is the tangent-space dimension; at smooth points it equals n + 1 and
    at the origin it is 2n.
    """
    p = _fiber_point(p)
    jac = minor_jacobian(p.psi1, p.psi2)
    return 2 * p.n - (rank(jac) if jac else 0)


def fiber_is_degenerate(n):
    """For n = 1 there are no minors and the fiber is all of R^2."""
    return n == 1


def reduced_dimension(n):
    """Dimension of the reduced manifold over R^n.

    For n >= 2 this is n + (n + 1). For n = 1 the fiber is the whole plane,
    giving 1 + 2; the two counts coincide there.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if fiber_is_degenerate(n):
        return n + 2
    return n + (n + 1)
