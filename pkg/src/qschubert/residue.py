"""Gromov-Witten numbers from the Vafa-Intriligator residue sum.

The sum runs over k-element subsets of the n distinct n-th roots of
``(-1)^k``.  Each Schubert insertion contributes its Giambelli determinant
in the elementary symmetric functions of the chosen roots.  This is an
independent floating-point route to the numbers produced by
:mod:`qschubert.quantum`.

The prefactor is ``(-1)^d / n^k``.  Evaluated on these roots the summand is
homogeneous of degree ``n*d``, so moving to the critical points
``x^n = (-1)^(k-1)`` of the potential multiplies it by ``(-1)^d``; the
Vandermonde product over ordered pairs then carries the sign on its own.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np

from .grassmannian import GrassmannianShape, complement, degree_for_codim, enumerate_box
from .quantum import QuantumClass

RESIDUAL_TOL = 1e-6


class ResidualError(ArithmeticError):
    """The residue sum landed too far from an integer (or off the real axis)."""


@dataclass(frozen=True)
class VacuumSet:
    roots: Tuple[complex, ...]


def vacuum_set(shape: GrassmannianShape) -> VacuumSet:
    """The n-th roots of ``(-1)^k``, root j at angle ``pi*((k mod 2) + 2j)/n``."""
    n, k = shape.n, shape.k
    j = np.arange(n)
    roots = np.exp(1j * np.pi * ((k % 2) + 2 * j) / n)
    return VacuumSet(tuple(complex(z) for z in roots))


def elem_sym(values: Sequence[complex], a: int) -> complex:
    """Elementary symmetric polynomial e_a; zero outside [0, len(values)]."""
    if a < 0 or a > len(values):
        return 0j
    return complex(_elem_all(list(values))[a])


def _elem_all(values) -> np.ndarray:
    # coefficients of prod (1 + v t)
    coeffs = np.zeros(len(values) + 1, dtype=complex)
    coeffs[0] = 1
    for v in values:
        coeffs[1:] = coeffs[1:] + v * coeffs[:-1]
    return coeffs


def _giambelli_det(e: np.ndarray, lam) -> complex:
    k = len(e) - 1
    r = len(lam)
    mat = np.zeros((r, r), dtype=complex)
    for i in range(r):
        for j in range(r):
            idx = lam[i] + j - i
            if 0 <= idx <= k:
                mat[i, j] = e[idx]
    return complex(np.linalg.det(mat)) if r else 1 + 0j


def giambelli_at(values: Sequence[complex], lam) -> complex:
    """Giambelli determinant of ``lam`` with sigma_a replaced by e_a(values)."""
    return _giambelli_det(_elem_all(list(values)), tuple(lam))


@lru_cache(maxsize=None)
def _tables(shape: GrassmannianShape):
    """Per-subset measure weights and Giambelli values for every basis class."""
    roots = vacuum_set(shape).roots
    subsets = list(itertools.combinations(range(shape.n), shape.k))
    box = enumerate_box(shape)
    weights = np.empty(len(subsets), dtype=complex)
    values = np.empty((len(subsets), len(box)), dtype=complex)
    for s, idx in enumerate(subsets):
        z = [roots[i] for i in idx]
        vdm = 1 + 0j
        for a in range(shape.k):
            for b in range(shape.k):
                if a != b:
                    vdm *= z[a] - z[b]
        weights[s] = vdm / np.prod([w ** (shape.n - 1) for w in z])
        e = _elem_all(z)
        for t, lam in enumerate(box):
            values[s, t] = _giambelli_det(e, lam)
    return weights, values, {lam: t for t, lam in enumerate(box)}


def vi_raw(shape: GrassmannianShape, insertions: Sequence, d: int) -> complex:
    """The unrounded residue sum."""
    weights, values, column = _tables(shape)
    cols = [column[shape.partition(lam)] for lam in insertions]
    terms = weights * np.prod(values[:, cols], axis=1)
    total = 0j
    for t in terms:  # fixed summation order, reproducible bit for bit
        total += t
    return (-1) ** d * total / shape.n ** shape.k


def vi_gromov_witten(shape: GrassmannianShape, insertions: Sequence, d: int) -> int:
    parts = [shape.partition(lam) for lam in insertions]
    if degree_for_codim(shape, sum(map(sum, parts))) != d:
        return 0
    raw = vi_raw(shape, parts, d)
    value = round(raw.real)
    residual = abs(raw - value)
    if residual > RESIDUAL_TOL:
        raise ResidualError(f"residue sum {raw} is not within {RESIDUAL_TOL} of an integer")
    return int(value)


def vi_quantum_product(shape: GrassmannianShape, partitions: Sequence):
    """Assemble the quantum product of ``partitions`` from residue-sum invariants.

    The coefficient of ``q^d sigma_nu`` is the invariant with insertions
    ``complement(nu)`` followed by the factors.
    """
    parts = [shape.partition(lam) for lam in partitions]
    total = sum(map(sum, parts))
    terms = {}
    for nu in enumerate_box(shape):
        excess = total - sum(nu)
        if excess < 0 or excess % shape.n:
            continue
        d = excess // shape.n
        value = vi_gromov_witten(shape, [complement(shape, nu)] + parts, d)
        if value:
            terms[(nu, d)] = value
    return QuantumClass(shape, terms)
