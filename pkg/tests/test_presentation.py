import pytest
import sympy

from qschubert import (
    CohomClass,
    QuantumClass,
    XPolynomial,
    evaluate_classical,
    evaluate_quantum,
    inverse_series,
    make_shape,
    verify_presentations,
)
from qschubert.presentation import quantum_relation_sign
from conftest import shapes_up_to


def X(s, j):
    return XPolynomial.x(s.k, j)


def test_inverse_series_examples():
    s = make_shape(6, 3)
    y = inverse_series(s, 3)
    x1, x2, x3 = X(s, 1), X(s, 2), X(s, 3)
    assert y[0] == 1
    assert y[1] == -x1
    assert y[2] == x1 * x1 - x2
    assert y[3] == -x1 * x1 * x1 + 2 * x1 * x2 - x3


def _to_sympy(poly, xs):
    return sum(c * sympy.Mul(*[v**e for v, e in zip(xs, exps[:-1])]) for exps, c in poly.terms.items())


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_inverse_series_matches_sympy(k):
    s = make_shape(k + 3, k)
    t = sympy.Symbol("t")
    xs = sympy.symbols(f"x1:{k + 1}")
    N = 8
    series = sympy.series(1 / (1 + sum(x * t ** (j + 1) for j, x in enumerate(xs))), t, 0, N + 1).removeO()
    ys = inverse_series(s, N)
    for i in range(N + 1):
        assert sympy.expand(series.coeff(t, i) - _to_sympy(ys[i], xs)) == 0


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_product_with_series_is_one(k):
    s = make_shape(k + 2, k)
    N = 9
    ys = inverse_series(s, N)
    base = [XPolynomial.constant(k)] + [X(s, j) for j in range(1, k + 1)]
    for i in range(N + 1):
        coeff = XPolynomial(k)
        for j in range(min(i, k) + 1):
            coeff = coeff + base[j] * ys[i - j]
        assert coeff == (1 if i == 0 else 0)
        assert ys[i].weighted_degrees() <= {i}


def test_inverse_series_rejects_negative():
    with pytest.raises(ValueError):
        inverse_series(make_shape(4, 2), -1)


def test_evaluate_classical_examples(g24):
    ys = inverse_series(g24, 4)
    assert evaluate_classical(g24, X(g24, 1)) == CohomClass.basis(g24, (1, 0))
    assert evaluate_classical(g24, ys[2]) == CohomClass.basis(g24, (1, 1))
    assert not evaluate_classical(g24, ys[3])
    with pytest.raises(ValueError):
        evaluate_classical(g24, X(g24, 1) * XPolynomial.q(2))


def test_evaluate_quantum_examples(g24):
    ys = inverse_series(g24, 4)
    assert not evaluate_quantum(g24, ys[3])
    assert evaluate_quantum(g24, ys[4]) == QuantumClass.basis(g24, (0, 0), 1, -1)
    assert evaluate_quantum(g24, X(g24, 1) * XPolynomial.q(2)) == QuantumClass.basis(g24, (1, 0), 1)


def test_projective_plane_relation():
    # H^3 = q in QH*(P^2) and Y_3 = -H^3 + 2 H H^2 = +q
    s = make_shape(3, 2)
    assert evaluate_quantum(s, inverse_series(s, 3)[3]) == QuantumClass.basis(s, (0,), 1)
    assert quantum_relation_sign(s) == 1


@pytest.mark.parametrize("n,k,count", [(4, 2, 2), (2, 1, 1), (6, 3, 3)])
def test_verify_examples(n, k, count):
    report = verify_presentations(make_shape(n, k))
    assert report.passed
    assert sum(c.name.startswith("classical") for c in report.checks) == count
    assert sum(c.name.startswith("quantum") for c in report.checks) == count


@pytest.mark.parametrize("s", shapes_up_to(7), ids=repr)
def test_verify_all_small_shapes(s):
    report = verify_presentations(s)
    assert report.passed, [c for c in report.checks if not c.passed]


@pytest.mark.parametrize("s", shapes_up_to(7), ids=repr)
def test_relation_sign_agrees_with_k_minus_one_for_even_n(s):
    if s.n % 2 == 0:
        assert quantum_relation_sign(s) == (-1) ** (s.k - 1)
    else:
        assert quantum_relation_sign(s) == (-1) ** s.k
