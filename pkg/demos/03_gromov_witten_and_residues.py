"""Gromov-Witten invariants two ways.

``gromov_witten`` reads a coefficient off a quantum Pieri product;
``vi_gromov_witten`` evaluates a finite residue sum over roots of unity.
They must agree as integers.
"""

import itertools

from qschubert import enumerate_box, gromov_witten, make_shape, vacuum_set, vi_gromov_witten
from qschubert import residue

G = make_shape(4, 2)
print("roots used for G(2,4):", [complex(round(z.real, 3), round(z.imag, 3)) for z in vacuum_set(G).roots])

cases = [([(1, 0)] * 4, 0), ([(2, 2)] * 3, 2), ([(1, 0)] * 8, 1)]
for ins, d in cases:
    raw = residue.vi_raw(G, ins, d)
    print(f"<{ins[0]} x{len(ins)}>_{d}: pieri={gromov_witten(G, ins, d)}"
          f"  residue sum={raw.real:.12f}{raw.imag:+.1e}j")

# two-point invariants of positive degree vanish
assert all(gromov_witten(G, [a, b], 1) == 0 for a, b in itertools.product(enumerate_box(G), repeat=2))

# exhaustive agreement on G(3,6), four insertions, degree 1
H = make_shape(6, 3)
count = 0
for ins in itertools.combinations_with_replacement(enumerate_box(H), 4):
    if sum(map(sum, ins)) == H.n + H.dim_g:
        assert gromov_witten(H, list(ins), 1) == vi_gromov_witten(H, ins, 1)
        count += 1
print(f"{count} degree-1 four-point invariants of {H!r} agree")
