"""Rank stratification of k-tuples of odd vectors.

A system psi_1..psi_k in R^n is stratified by the rank r of the k x n matrix
with rows psi_i. The rank <= r locus is a determinantal variety of dimension
r (k + n - r); that value is cross-checked by the tangent-space dimension at
sampled rank-r points, computed from the Jacobian of all (r+1)-minors.

Printed stratum dimensions for k = n = 3 are kept in ``PAPER_DIMENSIONS`` so
reports can flag disagreements. The r = 1 entry (4) disagrees with the
determinantal count (5): a line through the origin needs n - 1 = 2 parameters
and the k = 3 scalings need 3 more.
"""

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .bivector import wedge
from .errors import InconsistencyError
from .linalg import as_vector, det, rank
from .morphism import ViolationReport, check_homomorphism, key_identity_residual
from .polyfun import monomials_up_to

PAPER_DIMENSIONS = {(3, 3): {1: 4, 2: 8, 3: 9}}

# Labels attached to k = 4 strata; descriptive strings only.
PHYSICS_LABELS = {
    4: {
        0: "maximal supersymmetry",
        2: "half-maximal supersymmetry",
        4: "non-supersymmetric",
    }
}


@dataclass(frozen=True)
class OddVectorSystem:
    k: int
    n: int
    vectors: tuple

    def __post_init__(self):
        vecs = tuple(as_vector(v, self.n) for v in self.vectors)
        if len(vecs) != self.k:
            raise ValueError(f"expected {self.k} vectors, got {len(vecs)}")
        object.__setattr__(self, "vectors", vecs)

    @classmethod
    def from_pullback(cls, d):
        return cls(d.k, d.n, d.psis)


def classify_stratum(s):
    """Exact rank of the matrix whose rows are the odd vectors."""
    return rank(s.vectors)


def wedge_matrix(s):
    """{(i, j): psi_i ^ psi_j} for 1 <= i < j <= k."""
    return {(i + 1, j + 1): wedge(s.vectors[i], s.vectors[j]) for i, j in combinations(range(s.k), 2)}


def _random_rational(rng, bound=5, max_den=3):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def _random_full_rank(rng, rows, cols):
    while True:
        m = [[_random_rational(rng) for _ in range(cols)] for _ in range(rows)]
        if rank(m) == min(rows, cols):
            return m


def sample_stratum(k, n, r, seed):
    """Deterministic rank-r system built as R @ C with R (k x r) and C (r x n) of full rank."""
    if not 0 <= r <= min(k, n):
        raise ValueError(f"rank {r} impossible for a {k}x{n} system")
    rng = random.Random(f"stratum:{k}:{n}:{r}:{seed}")
    if r == 0:
        return OddVectorSystem(k, n, [[0] * n for _ in range(k)])
    while True:
        R = _random_full_rank(rng, k, r)
        C = _random_full_rank(rng, r, n)
        M = [[sum((R[a][t] * C[t][b] for t in range(r)), Fraction(0)) for b in range(n)] for a in range(k)]
        if rank(M) == r:
            return OddVectorSystem(k, n, M)


def stratum_dimension_oracle(k, n, r):
    """Dimension r (k + n - r) of the rank <= r locus in k x n matrices."""
    if not 0 <= r <= min(k, n):
        raise ValueError(f"rank {r} impossible for a {k}x{n} system")
    return r * (k + n - r)


def minors_jacobian(matrix, order):
    """Jacobian of all order x order minors with respect to the entries (row-major)."""
    k, n = len(matrix), len(matrix[0])
    rows = []
    for I in combinations(range(k), order):
        for J in combinations(range(n), order):
            row = [Fraction(0)] * (k * n)
            for p, a in enumerate(I):
                for q, b in enumerate(J):
                    sub = [[matrix[x][y] for y in J if y != b] for x in I if x != a]
                    cof = det(sub)
                    row[a * n + b] = -cof if (p + q) & 1 else cof
            rows.append(row)
    return rows


def tangent_dimension(matrix, r):
    """kn minus the Jacobian rank of the (r+1)-minors at ``matrix``."""
    k, n = len(matrix), len(matrix[0])
    return k * n - rank(minors_jacobian(matrix, r + 1))


def jacobian_dimension_estimate(k, n, r, samples=20, seed=0):
    if not 0 <= r < min(k, n):
        raise ValueError(f"Jacobian estimate needs 0 <= r < min(k, n); got r={r} for {k}x{n}")
    if samples < 1:
        raise ValueError("samples must be positive")
    dims = set()
    for i in range(samples):
        s = sample_stratum(k, n, r, (seed, i))
        dims.add(tangent_dimension(s.vectors, r))
    if len(dims) != 1:
        raise InconsistencyError(f"sampled tangent dimensions disagree for ({k},{n},{r}): {sorted(dims)}")
    return dims.pop()


@dataclass(frozen=True)
class StratumReport:
    k: int
    n: int
    r: int
    paper_dimension: Optional[int]
    oracle_dimension: int
    jacobian_dimension: Optional[int]
    mismatch_flag: bool
    label: Optional[str] = None

    def to_dict(self):
        return asdict(self)


def stratum_report(k, n, r, jacobian_dimension=None):
    printed = PAPER_DIMENSIONS.get((k, n), {}).get(r)
    oracle = stratum_dimension_oracle(k, n, r)
    return StratumReport(
        k=k,
        n=n,
        r=r,
        paper_dimension=printed,
        oracle_dimension=oracle,
        jacobian_dimension=jacobian_dimension,
        mismatch_flag=printed is not None and printed != oracle,
        label=PHYSICS_LABELS.get(k, {}).get(r),
    )


@dataclass
class K3ViolationReport(ViolationReport):
    """Homomorphism violations plus the pairs (i, j) whose key identity fails."""

    failing_pairs: list = field(default_factory=list)


def check_k3_morphism(d, degree_bound=2):
    if d.k != 3:
        raise ValueError(f"expected k=3 data, got k={d.k}")
    base = check_homomorphism(d, degree_bound)
    monos = monomials_up_to(d.n, degree_bound)
    failing = []
    for pair in combinations((1, 2, 3), 2):
        if any(key_identity_residual(d, f, g, pair) for f in monos for g in monos):
            failing.append(pair)
    return K3ViolationReport(violations=base.violations, failing_pairs=failing)
