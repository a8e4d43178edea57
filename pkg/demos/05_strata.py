"""Rank strata of k odd vectors in R^n and the k = 3 brute-force check."""

from superhom import (
    PullbackData,
    check_k3_morphism,
    classify_stratum,
    jacobian_dimension_estimate,
    sample_stratum,
    stratum_report,
)

for r in (0, 1, 2, 3):
    jac = jacobian_dimension_estimate(3, 3, r, 20, seed=0) if r < 3 else None
    rep = stratum_report(3, 3, r, jac)
    print(f"(3,3,r={r}): formula {rep.oracle_dimension}, tangent {rep.jacobian_dimension}, "
          f"printed {rep.paper_dimension}, flag {rep.mismatch_flag}")

for r in range(5):
    print(f"k=4 rank {r}:", stratum_report(4, 4, r).label)

for r in (1, 2):
    s = sample_stratum(3, 3, r, 7)
    rep = check_k3_morphism(PullbackData(3, 3, [0, 0, 0], s.vectors))
    print(f"k=3 rank {classify_stratum(s)}: homomorphism={rep.ok}, failing pairs {rep.failing_pairs}")
