"""The ring as a quotient of a polynomial ring.

Y_i is the t^i coefficient of 1 / (1 + X_1 t + ... + X_k t^k).  The
relations Y_{n-k+1}..Y_n vanish in cohomology; in quantum cohomology the
last becomes Y_n = (-1)^(n-k-1) q.
"""

from qschubert import (
    evaluate_classical,
    evaluate_quantum,
    inverse_series,
    make_shape,
    quantum_relation_sign,
    verify_presentations,
)
from qschubert.expression import render

G = make_shape(4, 2)
ys = inverse_series(G, 4)
for i, y in enumerate(ys):
    print(f"Y_{i} = {y.terms}")

print("Y_3 classically:", render(evaluate_classical(G, ys[3])))
print("Y_4 classically:", render(evaluate_classical(G, ys[4])))
print("Y_4 quantum:", render(evaluate_quantum(G, ys[4])))

# P^2 (n=3, k=2): Y_3 = -X_1^3 + 2 X_1 X_2 - X_3 evaluates to +q, since H^3 = q
P2 = make_shape(3, 2)
print("P^2, Y_3 quantum:", render(evaluate_quantum(P2, inverse_series(P2, 3)[3])),
      "sign", quantum_relation_sign(P2))

for n in range(2, 8):
    for k in range(1, n):
        report = verify_presentations(make_shape(n, k))
        assert report.passed, report.checks
print("all relations hold for n <= 7")
