"""Valid k = 2 pullbacks correspond to points (phi, psi1, psi2) with psi1 ^ psi2 = 0."""

from superhom import ClassifyingPoint, ConstraintViolationError, PullbackData, psi_forward, psi_inverse

c = ClassifyingPoint([1, -1, 2], [2, 0, -4], [-1, 0, 2])
d = psi_inverse(c)
show = lambda v: "(" + ", ".join(map(str, v)) + ")"
print("pullback from point: phi", show(d.phi), "psis", *map(show, d.psis), "even sectors", len(d.evens))
print("round trip equal:", psi_forward(d) == c)

try:
    psi_forward(PullbackData(2, 3, [0, 0, 0], [[1, 0, 0], [0, 1, 0]]))
except ConstraintViolationError as exc:
    print("rejected:", exc)
