"""Classical Schubert calculus on G(2,4).

Lines in P^3 meeting four general lines: the cup product sigma_1^4 is
twice the point class.  Along the way we check Pieri against the
Littlewood-Richardson tableau count.
"""

from qschubert import (
    CohomClass,
    degree,
    enumerate_box,
    giambelli_leibniz,
    lr_tableaux_oracle,
    make_shape,
    multiply_classical,
    pieri_classical,
)
from qschubert.expression import render, render_partition

G = make_shape(4, 2)  # 2-planes in C^4, partitions in a 2 x 2 box
print("basis:", enumerate_box(G))

# Pieri: sigma_1 * sigma_(1,0)
print("sigma_1 * sigma_1 =", render(pieri_classical(G, 1, (1, 0))))

# Giambelli writes sigma_(1,1) as a determinant in special classes
print("sigma_(1,1) =", giambelli_leibniz(G, (1, 1)).collected())

s1 = CohomClass.basis(G, (1, 0))
power = CohomClass.one(G)
for _ in range(4):
    power = multiply_classical(G, power, s1)
print("sigma_1^4 =", render(power), "-> degree", degree(G, power))

# a bigger product, checked coefficient-wise against LR tableaux
H = make_shape(6, 3)
lam, mu = (2, 1, 0), (2, 1, 0)
prod = multiply_classical(H, CohomClass.basis(H, lam), CohomClass.basis(H, mu))
print(f"in {H!r}: {render_partition(lam)}*{render_partition(mu)} =", render(prod))
assert all(prod[nu] == lr_tableaux_oracle(H, lam, mu, nu) for nu in enumerate_box(H))
print("matches the tableau count")
