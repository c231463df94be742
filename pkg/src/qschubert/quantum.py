"""Small quantum cohomology of G(n-k, n).

Quantum products are defined operationally: the left factor is expanded as
a Giambelli determinant in the special classes and each special factor is
multiplied in with the quantum Pieri rule.  That the result is independent
of such choices (commutative, associative, Giambelli-exact) is something
the test suite checks, not something this module assumes.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Sequence

from ._combination import LinearCombination
from .classical import (
    CohomClass,
    _check_special,
    _leibniz,
    _pieri_terms,
    bounded_tuples,
    giambelli_leibniz,
)
from .grassmannian import GrassmannianShape, Partition, _box, complement, degree_for_codim


class QuantumClass(LinearCombination):
    """Integer combination of ``q^d * sigma_lam``, keyed by ``(lam, d)``."""

    __slots__ = ()

    def _check_key(self, key):
        lam, d = key
        if not isinstance(d, int) or d < 0:
            raise ValueError(f"q-degree must be a nonnegative integer, got {d!r}")
        return self.shape.partition(lam), d

    @classmethod
    def basis(cls, shape, lam, d=0, coeff=1):
        return cls(shape, {(shape.partition(lam), d): coeff})

    @classmethod
    def one(cls, shape):
        return cls._raw(shape, {(shape.zero, 0): 1})

    @classmethod
    def from_classical(cls, c: CohomClass, d: int = 0):
        return cls._raw(c.shape, {(lam, d): x for lam, x in c.items()})

    def times_q(self, power: int = 1):
        if power < 0:
            raise ValueError("negative power of q")
        return self._raw(self.shape, {(lam, d + power): c for (lam, d), c in self.items()})

    def at_q_zero(self) -> CohomClass:
        """Truncation q -> 0."""
        return CohomClass._raw(self.shape, {lam: c for (lam, d), c in self.items() if d == 0})

    def coefficient(self, lam, d: int = 0) -> int:
        return self[(self.shape.partition(lam), d)]

    def max_degree(self) -> int:
        return max((d for _, d in self), default=0)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return quantum_multiply(self.shape, self, other)


def quantum_correction_tuples(shape: GrassmannianShape, a: int, lam: Partition):
    """Tuples c with |c| = a + |lam| - n and lam_1-1 >= c_1 >= lam_2-1 >= ... >= lam_r-1 >= c_r >= 0."""
    highs = tuple(x - 1 for x in lam)
    lows = tuple(max(x - 1, 0) for x in lam[1:]) + (0,)
    return bounded_tuples(lows, highs, a + sum(lam) - shape.n)


@lru_cache(maxsize=None)
def _qpieri_terms(shape, a, lam):
    out = [((b, 0), 1) for b in _pieri_terms(shape, a, lam)]
    out.extend(((c, 1), 1) for c in quantum_correction_tuples(shape, a, lam))
    return tuple(out)


def pieri_quantum(shape: GrassmannianShape, a: int, lam) -> QuantumClass:
    """``sigma_a * sigma_lam``: classical Pieri plus a single q-correction."""
    _check_special(shape, a)
    lam = shape.partition(lam)
    return QuantumClass._raw(shape, dict(_qpieri_terms(shape, a, lam)))


def _fold_qpieri(shape, indices, start: dict) -> dict:
    current = start
    for a in indices:
        nxt = defaultdict(int)
        for (lam, d), c in current.items():
            for (nu, e), _ in _qpieri_terms(shape, a, lam):
                nxt[(nu, d + e)] += c
        current = {key: c for key, c in nxt.items() if c}
        if not current:
            break
    return current


def _evaluate_expansion(shape, collected, start) -> dict:
    acc = defaultdict(int)
    for indices, sign in collected.items():
        for key, c in _fold_qpieri(shape, indices, dict(start)).items():
            acc[key] += sign * c
    return {key: c for key, c in acc.items() if c}


@lru_cache(maxsize=None)
def _basis_qproduct(shape, lam, mu):
    collected = giambelli_leibniz(shape, lam).collected()
    return _evaluate_expansion(shape, collected, {(mu, 0): 1})


def quantum_multiply(shape: GrassmannianShape, q1: QuantumClass, q2: QuantumClass) -> QuantumClass:
    acc = defaultdict(int)
    for (lam, d1), a in q1.items():
        for (mu, d2), b in q2.items():
            for (nu, e), c in _basis_qproduct(shape, lam, mu).items():
                acc[(nu, d1 + d2 + e)] += a * b * c
    return QuantumClass._raw(shape, {key: c for key, c in acc.items() if c})


def quantum_product(shape: GrassmannianShape, partitions: Iterable) -> QuantumClass:
    """Quantum product of several Schubert classes, folded left to right."""
    result = QuantumClass.one(shape)
    for lam in partitions:
        result = quantum_multiply(shape, result, QuantumClass.basis(shape, lam))
    return result


def giambelli_quantum(shape: GrassmannianShape, lam) -> QuantumClass:
    """Giambelli determinant of ``lam`` evaluated with the quantum product."""
    collected = giambelli_leibniz(shape, lam).collected()
    terms = _evaluate_expansion(shape, collected, {(shape.zero, 0): 1})
    return QuantumClass._raw(shape, terms)


def gromov_witten(shape: GrassmannianShape, insertions: Sequence, d: int) -> int:
    """Degree-d three-or-more point invariant read off the quantum product.

    The first insertion is paired against the product of the others: the
    answer is the coefficient of ``q^d * sigma_{complement(first)}``.
    Returns 0 when the codimensions do not add up to ``n*d + k(n-k)``.
    """
    if len(insertions) < 2:
        raise ValueError("Gromov-Witten invariants need at least two insertions")
    if not isinstance(d, int) or d < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {d!r}")
    parts = [shape.partition(lam) for lam in insertions]
    if degree_for_codim(shape, sum(map(sum, parts))) != d:
        return 0
    product = quantum_product(shape, parts[1:])
    return product[(complement(shape, parts[0]), d)]


def extended_giambelli_reduce(shape: GrassmannianShape, b) -> QuantumClass:
    """Closed form of an (r+1)-row Giambelli determinant in the quantum ring."""
    b = shape.extended(b)
    if b[-1] == 0:
        return QuantumClass.basis(shape, b[:-1])
    if b[0] < shape.k:
        return QuantumClass(shape)
    return QuantumClass.basis(shape, tuple(x - 1 for x in b[1:]), 1)


def extended_giambelli_direct(shape: GrassmannianShape, b) -> QuantumClass:
    """Evaluate the (r+1) x (r+1) Giambelli determinant of ``b`` with quantum products."""
    b = shape.extended(b)
    collected = defaultdict(int)
    for sign, idx in _leibniz(b, shape.k):
        collected[tuple(i for i in idx if i)] += sign
    terms = _evaluate_expansion(shape, collected, {(shape.zero, 0): 1})
    return QuantumClass._raw(shape, terms)


def enumerate_extended(shape: GrassmannianShape):
    """All (r+1)-tuples ``k >= b_1 >= ... >= b_{r+1} >= 0``."""
    return list(_box(shape.k, shape.r + 1))
