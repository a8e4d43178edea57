"""Local dimension of the fiber {psi1 ^ psi2 = 0} over a point of R^n."""

from superhom import component_of, local_fiber_dimension, reduced_dimension

for n in (1, 2, 3, 4):
    e1 = [1] + [0] * (n - 1)
    zero = [0] * n
    a = (zero, e1)
    b = (e1, [2 * x for x in e1])
    print(
        f"n={n}: component A dim {local_fiber_dimension(a)}, "
        f"component B dim {local_fiber_dimension(b)} ({component_of(b).label.value}, scale {component_of(b).scale}), "
        f"origin dim {local_fiber_dimension((zero, zero))}, total space {reduced_dimension(n)}"
    )
