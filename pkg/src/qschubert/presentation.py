"""Polynomial presentations of the classical and quantum rings.

The generators ``X_1..X_k`` map to the special classes.  ``Y_i`` is the
coefficient of ``t^i`` in the power-series inverse of
``1 + X_1 t + ... + X_k t^k``.  Classically ``Y_{r+1}, ..., Y_n`` vanish; in
the quantum ring the last one is replaced by ``Y_n - (-1)^(n-k-1) q``.
(``Y_i`` is ``(-1)^i`` times the complete symmetric function, so for odd n
this sign differs from the ``(-1)^(k-1)`` attached to ``h_n``.)  The
relations are checked by evaluating inside the rings built from the Pieri
and Giambelli rules, not by normal-form reduction.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import List

from .classical import CohomClass, multiply_classical
from .grassmannian import GrassmannianShape
from .quantum import QuantumClass, quantum_multiply


class XPolynomial:
    """Sparse integer polynomial in ``X_1..X_k`` and ``q``.

    Keys are exponent vectors ``(e_1, ..., e_k, e_q)``.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars + 1 or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps}")
            if c:
                self.terms[exps] = c

    @classmethod
    def constant(cls, nvars, c=1):
        return cls(nvars, {(0,) * (nvars + 1): c})

    @classmethod
    def x(cls, nvars, j):
        if not 1 <= j <= nvars:
            raise ValueError(f"X_{j} out of range")
        exps = [0] * (nvars + 1)
        exps[j - 1] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def q(cls, nvars):
        return cls(nvars, {(0,) * nvars + (1,): 1})

    def _coerce(self, other):
        if isinstance(other, int):
            return XPolynomial.constant(self.nvars, other)
        if not isinstance(other, XPolynomial) or other.nvars != self.nvars:
            raise TypeError(f"incompatible operand {other!r}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        acc = defaultdict(int, self.terms)
        for e, c in other.terms.items():
            acc[e] += c
        return XPolynomial(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return XPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        acc = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return XPolynomial(self.nvars, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = XPolynomial.constant(self.nvars, other)
        if not isinstance(other, XPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self):
        return f"XPolynomial({self.nvars}, {self.terms})"

    def weighted_degrees(self, q_weight: int = 0) -> set:
        """Set of degrees of the terms, X_j weighted j and q weighted ``q_weight``."""
        return {
            sum((j + 1) * e for j, e in enumerate(exps[:-1])) + q_weight * exps[-1]
            for exps in self.terms
        }


def inverse_series(shape: GrassmannianShape, n_terms: int) -> List[XPolynomial]:
    """``[Y_0, ..., Y_N]`` from ``Y_i = -sum_{j=1}^{min(i,k)} X_j Y_{i-j}``."""
    if n_terms < 0:
        raise ValueError("N must be nonnegative")
    k = shape.k
    xs = [XPolynomial.x(k, j) for j in range(1, k + 1)]
    ys = [XPolynomial.constant(k)]
    for i in range(1, n_terms + 1):
        y = XPolynomial(k)
        for j in range(1, min(i, k) + 1):
            y = y - xs[j - 1] * ys[i - j]
        ys.append(y)
    return ys


def _monomial_indices(exps):
    out = []
    for j, e in enumerate(exps[:-1], start=1):
        out.extend([j] * e)
    return out


def evaluate_classical(shape: GrassmannianShape, poly: XPolynomial) -> CohomClass:
    """Substitute ``X_a -> sigma_a`` and expand with the cup product."""
    if poly.nvars != shape.k:
        raise ValueError(f"polynomial has {poly.nvars} variables, shape needs {shape.k}")
    total = CohomClass(shape)
    for exps, c in poly.terms.items():
        if exps[-1]:
            raise ValueError("q does not occur in the classical ring")
        value = CohomClass.one(shape)
        for a in _monomial_indices(exps):
            value = multiply_classical(shape, value, CohomClass.basis(shape, shape.special(a)))
        total = total + value.scale(c)
    return total


def evaluate_quantum(shape: GrassmannianShape, poly: XPolynomial) -> QuantumClass:
    """Substitute ``X_a -> sigma_a`` and expand with the quantum product."""
    if poly.nvars != shape.k:
        raise ValueError(f"polynomial has {poly.nvars} variables, shape needs {shape.k}")
    total = QuantumClass(shape)
    for exps, c in poly.terms.items():
        value = QuantumClass.one(shape).times_q(exps[-1])
        for a in _monomial_indices(exps):
            value = quantum_multiply(shape, value, QuantumClass.basis(shape, shape.special(a)))
        total = total + value.scale(c)
    return total


def quantum_relation_sign(shape: GrassmannianShape) -> int:
    """The sign s with ``Y_n = s * q`` in the quantum ring."""
    return (-1) ** (shape.n - shape.k - 1)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class PresentationReport:
    shape: GrassmannianShape
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_presentations(shape: GrassmannianShape) -> PresentationReport:
    """Evaluate every defining relation of both presentations in its ring."""
    n = shape.n
    ys = inverse_series(shape, n)
    report = PresentationReport(shape)
    for i in range(shape.r + 1, n + 1):
        value = evaluate_classical(shape, ys[i])
        report.checks.append(Check(f"classical Y_{i} = 0", not value, repr(value.terms)))
    for i in range(shape.r + 1, n + 1):
        value = evaluate_quantum(shape, ys[i])
        if i < n:
            report.checks.append(Check(f"quantum Y_{i} = 0", not value, repr(value.terms)))
        else:
            sign = quantum_relation_sign(shape)
            expected = QuantumClass.basis(shape, shape.zero, 1, sign)
            label = "q" if sign > 0 else "-q"
            report.checks.append(Check(f"quantum Y_{n} = {label}", value == expected, repr(value.terms)))
    return report
