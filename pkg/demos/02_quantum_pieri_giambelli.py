"""The small quantum ring of a Grassmannian.

Quantum Pieri adds q-terms; the quantum product stays commutative and
associative, and the classical Giambelli determinant still gives sigma_lambda
exactly.
"""

from qschubert import (
    QuantumClass,
    enumerate_box,
    giambelli_quantum,
    make_shape,
    pieri_quantum,
    quantum_multiply,
    quantum_product,
)
from qschubert.expression import render

G = make_shape(4, 2)
print("sigma_1 * sigma_(2,1) =", render(pieri_quantum(G, 1, (2, 1))))
print("sigma_(2,2)^2 =", render(quantum_product(G, [(2, 2), (2, 2)])))

# P^3 is the shape n=4, k=3 (lines through the origin in C^4)
P3 = make_shape(4, 3)
print("in P^3: H * H^3 =", render(quantum_product(P3, [(1,), (3,)])))

# Giambelli is exact in the quantum ring: no correction terms
H = make_shape(6, 3)
assert all(giambelli_quantum(H, lam) == QuantumClass.basis(H, lam) for lam in enumerate_box(H))
print(f"quantum Giambelli exact on all {len(enumerate_box(H))} classes of {H!r}")

a, b, c = (QuantumClass.basis(H, p) for p in [(2, 1, 0), (3, 2, 1), (1, 1, 1)])
left = quantum_multiply(H, quantum_multiply(H, a, b), c)
right = quantum_multiply(H, a, quantum_multiply(H, b, c))
print("(ab)c =", render(left))
assert left == right
