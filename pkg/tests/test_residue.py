import cmath
import itertools

import numpy as np
import pytest

from qschubert import (
    ResidualError,
    elem_sym,
    enumerate_box,
    giambelli_at,
    gromov_witten,
    make_shape,
    vacuum_set,
    vi_gromov_witten,
    vi_quantum_product,
    QuantumClass,
)
from qschubert import residue
from conftest import shapes_up_to


def test_vacuum_set_examples(g24, p3):
    assert np.allclose(vacuum_set(g24).roots, [1, 1j, -1, -1j])
    phases = [cmath.phase(z) % (2 * cmath.pi) for z in vacuum_set(p3).roots]
    assert np.allclose(phases, [cmath.pi / 4, 3 * cmath.pi / 4, 5 * cmath.pi / 4, 7 * cmath.pi / 4])
    assert np.allclose(vacuum_set(make_shape(2, 1)).roots, [1j, -1j])


@pytest.mark.parametrize("s", shapes_up_to(12), ids=repr)
def test_vacuum_set_invariants(s):
    roots = vacuum_set(s).roots
    assert len(roots) == s.n
    assert all(abs(z**s.n - (-1) ** s.k) < 1e-10 for z in roots)
    assert min(abs(a - b) for a, b in itertools.combinations(roots, 2)) > 1e-6


def test_elem_sym_examples():
    assert elem_sym([1, 1j], 1) == 1 + 1j
    assert elem_sym([1, 1j], 0) == 1
    assert elem_sym([1, 1j], 2) == 1j
    assert elem_sym([1, 1j], 3) == 0
    assert elem_sym([1, 1j], -1) == 0


def test_giambelli_at_examples():
    assert np.isclose(giambelli_at([1, 1j], (1, 0)), 1 + 1j)
    # e_1^2 - e_2 = (1+i)^2 - i = i
    assert np.isclose(giambelli_at([1, 1j], (1, 1)), 1j)
    assert np.isclose(giambelli_at([0.3, 2j, -1], (0, 0, 0)), 1)


def test_giambelli_at_is_schur_polynomial():
    # bialternant formula for the conjugate shape as an independent check
    vals = [0.7 + 0.1j, -0.4 + 1.2j, 1.9 - 0.3j]
    k = len(vals)
    s = make_shape(6, 3)
    for lam in enumerate_box(s):
        conj = [sum(1 for p in lam if p > i) for i in range(k)]
        num = np.array([[v ** (conj[j] + k - 1 - j) for v in vals] for j in range(k)])
        den = np.array([[v ** (k - 1 - j) for v in vals] for j in range(k)])
        assert np.isclose(giambelli_at(vals, lam), np.linalg.det(num) / np.linalg.det(den))


def test_vi_examples(g24):
    assert vi_gromov_witten(g24, [(1, 0)] * 4, 0) == 2
    assert vi_gromov_witten(g24, [(2, 2)] * 3, 2) == 1
    assert vi_gromov_witten(g24, [(1, 0)] * 8, 1) == 8
    assert vi_gromov_witten(g24, [(1, 0)] * 3, 0) == 0


def test_projective_line():
    s = make_shape(2, 1)
    assert vi_gromov_witten(s, [(1,)] * 3, 1) == 1
    assert vi_gromov_witten(s, [(1,)] * 5, 2) == 1


@pytest.mark.parametrize("s", shapes_up_to(6), ids=repr)
def test_vi_agrees_with_pieri_route(s):
    box = enumerate_box(s)
    for N in (3, 4):
        for ins in itertools.combinations_with_replacement(box, N):
            total = sum(map(sum, ins))
            if total < s.dim_g or (total - s.dim_g) % s.n:
                continue
            d = (total - s.dim_g) // s.n
            if d > 3:
                continue
            raw = residue.vi_raw(s, ins, d)
            assert abs(raw.imag) < 1e-6
            assert vi_gromov_witten(s, ins, d) == gromov_witten(s, list(ins), d)


def test_vi_permutation_invariance():
    s = make_shape(6, 3)
    ins = [(2, 1, 0), (3, 1, 1), (2, 2, 0), (1, 1, 1)]
    assert sum(map(sum, ins)) == s.n * 1 + s.dim_g
    values = {vi_gromov_witten(s, list(p), 1) for p in itertools.permutations(ins)}
    assert len(values) == 1


def test_raw_sum_is_bit_reproducible():
    s = make_shape(6, 3)
    ins = [(1, 0, 0)] * 15
    assert residue.vi_raw(s, ins, 1) == residue.vi_raw(s, list(ins), 1)


def test_vi_quantum_product(g24, p3):
    assert vi_quantum_product(g24, [(2, 2), (2, 2)]) == QuantumClass.basis(g24, (0, 0), 2)
    assert vi_quantum_product(p3, [(1,), (3,)]) == QuantumClass.basis(p3, (0,), 1)


def test_binomial_sign_alone_gives_wrong_answers(g24):
    # the (-1)^(k choose 2) normalisation flips the classical four-lines count
    raw = residue.vi_raw(g24, [(1, 0)] * 4, 0)
    assert np.isclose(raw, 2)
    assert np.isclose((-1) ** 1 * raw, -2)


def test_residual_failure_is_loud(g24, monkeypatch):
    weights, values, column = residue._tables(g24)
    monkeypatch.setattr(residue, "_tables", lambda shape: (weights * 1.3, values, column))
    with pytest.raises(ResidualError):
        vi_gromov_witten(g24, [(1, 0)] * 4, 0)
