"""Structural self-checks of the quantum ring for one shape.

Each check compares two computations that share as little code as
possible; a failing row names the first counterexample found.
"""

from __future__ import annotations

import itertools
from typing import List

from .classical import CohomClass, multiply_classical
from .grassmannian import GrassmannianShape, enumerate_box
from .presentation import Check, verify_presentations
from .quantum import (
    QuantumClass,
    enumerate_extended,
    extended_giambelli_direct,
    extended_giambelli_reduce,
    giambelli_quantum,
    gromov_witten,
    quantum_multiply,
)


def _first(iterable):
    for item in iterable:
        return item
    return None


def check_quantum_giambelli(shape: GrassmannianShape) -> Check:
    bad = _first(
        lam for lam in enumerate_box(shape)
        if giambelli_quantum(shape, lam) != QuantumClass.basis(shape, lam)
    )
    return Check("quantum Giambelli exactness", bad is None, "" if bad is None else f"fails at {bad}")


def check_commutativity(shape: GrassmannianShape) -> Check:
    box = enumerate_box(shape)

    def differs(lam, mu):
        a, b = QuantumClass.basis(shape, lam), QuantumClass.basis(shape, mu)
        return quantum_multiply(shape, a, b) != quantum_multiply(shape, b, a)

    bad = _first(p for p in itertools.combinations(box, 2) if differs(*p))
    return Check("commutativity", bad is None, "" if bad is None else f"fails at {bad}")


def check_associativity(shape: GrassmannianShape) -> Check:
    box = enumerate_box(shape)
    basis = {lam: QuantumClass.basis(shape, lam) for lam in box}
    pair = {
        (lam, mu): quantum_multiply(shape, basis[lam], basis[mu]) for lam in box for mu in box
    }

    def differs(lam, mu, nu):
        left = quantum_multiply(shape, pair[lam, mu], basis[nu])
        right = quantum_multiply(shape, basis[lam], pair[mu, nu])
        return left != right

    bad = _first(t for t in itertools.product(box, repeat=3) if differs(*t))
    return Check("associativity", bad is None, "" if bad is None else f"fails at {bad}")


def check_classical_limit(shape: GrassmannianShape) -> Check:
    box = enumerate_box(shape)

    def differs(lam, mu):
        quantum = quantum_multiply(shape, QuantumClass.basis(shape, lam), QuantumClass.basis(shape, mu))
        classical = multiply_classical(shape, CohomClass.basis(shape, lam), CohomClass.basis(shape, mu))
        return quantum.at_q_zero() != classical

    bad = _first(p for p in itertools.product(box, repeat=2) if differs(*p))
    return Check("q -> 0 recovers cup product", bad is None, "" if bad is None else f"fails at {bad}")


def check_two_point_vanishing(shape: GrassmannianShape, max_degree: int = 3) -> Check:
    box = enumerate_box(shape)
    bad = _first(
        (lam, mu, d)
        for lam, mu in itertools.product(box, repeat=2)
        for d in range(1, max_degree + 1)
        if gromov_witten(shape, [lam, mu], d) != 0
    )
    return Check("two-point invariants vanish for d >= 1", bad is None, "" if bad is None else f"fails at {bad}")


def check_extended_determinants(shape: GrassmannianShape) -> Check:
    bad = _first(
        b for b in enumerate_extended(shape)
        if extended_giambelli_direct(shape, b) != extended_giambelli_reduce(shape, b)
    )
    return Check("(r+1)-row determinants reduce", bad is None, "" if bad is None else f"fails at {bad}")


def run_verification(shape: GrassmannianShape) -> List[Check]:
    checks = list(verify_presentations(shape).checks)
    checks.append(check_quantum_giambelli(shape))
    checks.append(check_classical_limit(shape))
    checks.append(check_commutativity(shape))
    checks.append(check_associativity(shape))
    checks.append(check_two_point_vanishing(shape))
    checks.append(check_extended_determinants(shape))
    return checks
