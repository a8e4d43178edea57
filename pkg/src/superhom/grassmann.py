"""Exact arithmetic in the Grassmann algebra on ``k`` odd generators.

Basis elements theta_S are labelled by subsets S of {1, ..., k}. Internally a
subset is a bitmask with bit ``i - 1`` standing for generator ``i``; the public
helpers also accept sorted index tuples.

Sign convention: theta_S * theta_T = sgn(S, T) theta_{S u T} for disjoint S, T,
where sgn(S, T) = (-1)^#{(s, t) : s in S, t in T, s > t}. This is the
permutation sign of sorting the concatenated index list, and gives
theta_2 theta_1 = -theta_1 theta_2.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import DimensionMismatchError
from .linalg import as_scalar


def index_set(members, k):
    """Bitmask for the generator subset ``members`` (1-based, strictly increasing).

    >>> index_set((1, 3), 3)
    5
    """
    members = tuple(members)
    if any(b <= a for a, b in zip(members, members[1:])):
        raise IndexError(f"odd index set {members} is not strictly increasing")
    mask = 0
    for i in members:
        if not isinstance(i, int) or not 1 <= i <= k:
            raise IndexError(f"generator index {i!r} outside 1..{k}")
        mask |= 1 << (i - 1)
    return mask


def members(mask):
    """Sorted generator indices of a bitmask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _as_mask(s, k):
    if isinstance(s, int):
        if s < 0 or s >> k:
            raise IndexError(f"odd index mask {s} invalid for k={k}")
        return s
    return index_set(s, k)


def reorder_sign(s, t):
    """sgn(S, T) for bitmasks ``s``, ``t`` (disjointness not checked)."""
    inversions = 0
    while t:
        low = t & -t
        inversions += bin(s & ~((low << 1) - 1)).count("1")
        t ^= low
    return -1 if inversions & 1 else 1


def all_index_sets(k):
    """Every subset of {1..k} as a mask, by size then lexicographically."""
    out = []
    for size in range(k + 1):
        for combo in combinations(range(1, k + 1), size):
            out.append(index_set(combo, k))
    return out


@dataclass(frozen=True)
class GrassmannElement:
    """Element of the Grassmann algebra; ``coeffs`` maps masks to nonzero Fractions."""

    k: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"generator count must be a positive integer, got {self.k!r}")
        clean = {}
        for s, c in self.coeffs.items():
            mask = _as_mask(s, self.k)
            c = as_scalar(c)
            if c:
                clean[mask] = clean.get(mask, Fraction(0)) + c
                if not clean[mask]:
                    del clean[mask]
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def scalar(cls, k, c):
        return cls(k, {0: c})

    @classmethod
    def basis(cls, k, subset, c=1):
        return cls(k, {index_set(subset, k): c})

    @classmethod
    def generator(cls, k, i):
        return cls.basis(k, (i,))

    def coefficient(self, s):
        return self.coeffs.get(_as_mask(s, self.k), Fraction(0))

    def body(self):
        """Coefficient of the unit."""
        return self.coeffs.get(0, Fraction(0))

    def is_zero(self):
        return not self.coeffs

    def terms(self):
        """(index tuple, coefficient) pairs in canonical basis order."""
        order = {m: i for i, m in enumerate(all_index_sets(self.k))}
        return [(members(m), self.coeffs[m]) for m in sorted(self.coeffs, key=order.__getitem__)]

    def _check(self, other):
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        if other.k != self.k:
            raise DimensionMismatchError(f"Grassmann generator counts differ: {self.k} vs {other.k}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out.get(s, 0) + c
        return GrassmannElement(self.k, out)

    def __neg__(self):
        return GrassmannElement(self.k, {s: -c for s, c in self.coeffs.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GrassmannElement(self.k, {s: c * other for s, c in self.coeffs.items()})
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = {}
        for s, a in self.coeffs.items():
            for t, b in other.coeffs.items():
                if s & t:
                    continue
                u = s | t
                out[u] = out.get(u, 0) + reorder_sign(s, t) * a * b
        return GrassmannElement(self.k, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for idx, c in self.terms():
            label = "".join(f"θ{i}" for i in idx)
            if not label:
                parts.append(str(c))
            elif c == 1:
                parts.append(label)
            else:
                parts.append(f"{c}·{label}")
        return " + ".join(parts)


def g_add(a, b):
    return a + b


def g_mul(a, b):
    return a * b


def g_coefficient(a, s):
    """Coefficient of theta_s in ``a``; ``s`` is an index tuple or mask."""
    return a.coefficient(s)
