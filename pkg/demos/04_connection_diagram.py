"""With a connection, the even slot carries minus the Hessian; both routes agree."""

from fractions import Fraction

from superhom import ConnectionData, PullbackData, Polynomial, check_diagram, psi_nabla

x1 = Polynomial.coordinate(2, 1)
d = PullbackData(2, 2, [0, 0], [[1, 0], [1, 0]])

flat = ConnectionData.flat(2)
result = check_diagram(flat, d, 3)
print("flat connection commutes:", bool(result))
print("F(x1^2) =", psi_nabla(flat, d).F_op.apply(x1 * x1, [0, 0]))

g = [[[Fraction(1, 2), 0], [0, -1]], [[0, 2], [1, 0]]]
curved = ConnectionData(2, g)
d2 = PullbackData(2, 2, [1, 3], [[2, -1], [-4, 2]])
result = check_diagram(curved, d2, 3)
print("constant Christoffel symbols commute:", bool(result), "on", len(result.evaluations), "monomials")

zero_psi = PullbackData(2, 2, [0, 0], [[0, 0], [5, 1]])
print("F vanishes when one odd vector is zero:", psi_nabla(flat, zero_psi).F_op.is_zero())
