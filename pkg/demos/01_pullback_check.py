"""Build candidate pullbacks for k = 2 and test them by brute force."""

from superhom import EvenOperator, GrassmannElement as G, PullbackData, Polynomial
from superhom import check_homomorphism, is_valid_morphism, key_identity_residual

t1, t2 = G.generator(2, 1), G.generator(2, 2)
print("theta1*theta2 =", t1 * t2, "  theta2*theta1 =", t2 * t1)

x1, x2 = Polynomial.coordinate(2, 1), Polynomial.coordinate(2, 2)

# dependent odd vectors, no even term: a genuine homomorphism
good = PullbackData(2, 2, [1, 2], [[1, 2], [3, 6]])
print("dependent pair:", "ok" if check_homomorphism(good).ok else "fails", bool(is_valid_morphism(good)))

# independent odd vectors: the theta1theta2 sector breaks
bad = PullbackData(2, 2, [0, 0], [[1, 0], [0, 1]])
report = check_homomorphism(bad)
print("independent pair:", len(report), "violations in sectors", report.sectors())
print("residual on (x1, x2):", key_identity_residual(bad, x1, x2, (1, 2)))
print("residual on (x2, x1):", key_identity_residual(bad, x2, x1, (1, 2)))

# a second-order even term breaks it too
withB = PullbackData(2, 2, [0, 0], [[1, 0], [0, 0]], {(1, 2): EvenOperator(2, None, [[0, 1], [1, 0]])})
print("nonzero B:", len(check_homomorphism(withB)), "violations")
for v in list(check_homomorphism(withB))[:3]:
    print(f"  f={v.f}  g={v.g}  sector={v.basis_set}  lhs={v.lhs}  rhs={v.rhs}")
