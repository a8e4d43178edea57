"""Exact multivariate polynomials on R^n.

These stand in for smooth test functions: every identity checked elsewhere
only ever needs values and derivatives up to second order at a point, and
polynomials of low degree already probe all of those.

Coordinates are numbered from 1 in the public API (``x^1 .. x^n``), matching
the usual notation; exponent tuples are 0-indexed Python tuples.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import DimensionMismatchError
from .linalg import as_scalar, as_vector


def grlex_key(exponents):
    """Graded-lex sort key: lower total degree first, then x^1 before x^2."""
    return (sum(exponents), tuple(-e for e in exponents))


@dataclass(frozen=True)
class Polynomial:
    n: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"ambient dimension must be a positive integer, got {self.n!r}")
        clean = {}
        for exps, c in self.terms.items():
            exps = tuple(exps)
            if len(exps) != self.n or any((not isinstance(e, int)) or e < 0 for e in exps):
                raise DimensionMismatchError(f"monomial {exps} invalid for n={self.n}")
            c = as_scalar(c)
            if c:
                total = clean.get(exps, 0) + c
                if total:
                    clean[exps] = total
                else:
                    clean.pop(exps, None)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def constant(cls, n, c=1):
        return cls(n, {(0,) * n: c})

    @classmethod
    def coordinate(cls, n, i):
        """The coordinate function x^i (1-based)."""
        if not 1 <= i <= n:
            raise IndexError(f"coordinate index {i} outside 1..{n}")
        exps = [0] * n
        exps[i - 1] = 1
        return cls(n, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exponents, c=1):
        exponents = tuple(exponents)
        return cls(len(exponents), {exponents: c})

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.n, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatchError(f"polynomial dimensions differ: {self.n} vs {other.n}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.n, out)

    __rmul__ = __mul__

    def __call__(self, x):
        return p_eval(self, x)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(exps, start=1):
                if e == 1:
                    factors.append(f"x{i}")
                elif e > 1:
                    factors.append(f"x{i}^{e}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def p_eval(f, x):
    x = as_vector(x)
    if len(x) != f.n:
        raise DimensionMismatchError(f"point has dimension {len(x)}, polynomial expects {f.n}")
    total = Fraction(0)
    for exps, c in f.terms.items():
        term = c
        for xi, e in zip(x, exps):
            if e:
                term *= xi**e
        total += term
    return total


def p_mul(f, g):
    return f * g


def p_add(f, g):
    return f + g


def p_deriv(f, i):
    """Partial derivative with respect to x^i (1-based)."""
    if not isinstance(i, int) or not 1 <= i <= f.n:
        raise IndexError(f"coordinate index {i!r} outside 1..{f.n}")
    j = i - 1
    out = {}
    for exps, c in f.terms.items():
        e = exps[j]
        if e:
            new = exps[:j] + (e - 1,) + exps[j + 1 :]
            out[new] = out.get(new, 0) + c * e
    return Polynomial(f.n, out)


def gradient_at(f, x):
    return tuple(p_eval(p_deriv(f, i), x) for i in range(1, f.n + 1))


def hessian_at(f, x):
    """Matrix of second partials at ``x``; symmetric by construction."""
    firsts = [p_deriv(f, i) for i in range(1, f.n + 1)]
    return tuple(
        tuple(p_eval(p_deriv(firsts[a], b), x) for b in range(1, f.n + 1)) for a in range(f.n)
    )


def jet_at(f, x):
    """(value, gradient, Hessian) of ``f`` at ``x`` in one pass over the terms."""
    x = as_vector(x)
    n = f.n
    if len(x) != n:
        raise DimensionMismatchError(f"point has dimension {len(x)}, polynomial expects {n}")

    def power(v, e):
        return v**e if e > 0 else (Fraction(1) if e == 0 else Fraction(0))

    value = Fraction(0)
    grad = [Fraction(0)] * n
    hess = [[Fraction(0)] * n for _ in range(n)]
    for exps, c in f.terms.items():
        pows = [power(x[i], exps[i]) for i in range(n)]
        low1 = [power(x[i], exps[i] - 1) for i in range(n)]
        low2 = [power(x[i], exps[i] - 2) for i in range(n)]
        rest = Fraction(c)
        for p in pows:
            rest *= p
        value += rest
        for i in range(n):
            if not exps[i]:
                continue
            others = Fraction(c)
            for t in range(n):
                if t != i:
                    others *= pows[t]
            grad[i] += others * exps[i] * low1[i]
            if exps[i] >= 2:
                hess[i][i] += others * exps[i] * (exps[i] - 1) * low2[i]
            for j in range(i + 1, n):
                if not exps[j]:
                    continue
                both = Fraction(c)
                for t in range(n):
                    if t != i and t != j:
                        both *= pows[t]
                mixed = both * exps[i] * low1[i] * exps[j] * low1[j]
                hess[i][j] += mixed
                hess[j][i] += mixed
    return value, tuple(grad), tuple(tuple(r) for r in hess)


def monomials_up_to(n, degree):
    """All monic monomials in n variables with total degree <= ``degree``, in grlex order."""
    out = []
    for d in range(degree + 1):
        block = []
        for combo in combinations_with_replacement(range(n), d):
            exps = [0] * n
            for v in combo:
                exps[v] += 1
            block.append(tuple(exps))
        block.sort(key=grlex_key)
        out.extend(Polynomial.monomial(e) for e in block)
    return out
