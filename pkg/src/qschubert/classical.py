"""The cohomology ring of G(n-k, n) with integer coefficients.

Products are computed from the two classical rules only: any Schubert
class is expanded as a Giambelli determinant in the special classes, and
each special factor is then multiplied in with Pieri's rule.  The
Littlewood-Richardson tableau count in :func:`lr_tableaux_oracle` is kept
completely separate so it can serve as a check.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Tuple

from ._combination import LinearCombination
from .grassmannian import GrassmannianShape, Partition, complement


class CohomClass(LinearCombination):
    """Integer combination of Schubert classes, keyed by partition."""

    __slots__ = ()

    def _check_key(self, key):
        return self.shape.partition(key)

    @classmethod
    def basis(cls, shape, lam, coeff=1):
        return cls(shape, {shape.partition(lam): coeff})

    @classmethod
    def one(cls, shape):
        return cls._raw(shape, {shape.zero: 1})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return multiply_classical(self.shape, self, other)


@dataclass(frozen=True)
class SpecialExpansion:
    """Signed sum of products of special classes.

    Each monomial is ``(sign, indices)``; ``indices`` lists the subscripts
    of the special classes, sorted descending, zeros included.
    """

    monomials: Tuple[Tuple[int, Tuple[int, ...]], ...]

    def collected(self) -> Counter:
        """Net coefficient of each distinct product, identity factors dropped."""
        out = Counter()
        for sign, idx in self.monomials:
            out[tuple(i for i in idx if i)] += sign
        return Counter({m: c for m, c in out.items() if c})


def bounded_tuples(lows, highs, total) -> List[Tuple[int, ...]]:
    """Tuples x with lows[i] <= x_i <= highs[i] and sum(x) == total, descending lex."""
    m = len(lows)
    slack = [0] * (m + 1)  # max sum attainable by x[i:]
    for i in range(m - 1, -1, -1):
        slack[i] = slack[i + 1] + max(highs[i] - lows[i], 0)
    out = []
    acc = []

    def rec(i, left):
        if i == m:
            out.append(tuple(acc))
            return
        for x in range(min(highs[i], lows[i] + left), lows[i] - 1, -1):
            if left - (x - lows[i]) > slack[i + 1]:
                break
            acc.append(x)
            rec(i + 1, left - (x - lows[i]))
            acc.pop()

    left = total - sum(lows)
    if left < 0 or any(lo > hi for lo, hi in zip(lows, highs)):
        return out
    rec(0, left)
    return out


def pieri_tuples(shape: GrassmannianShape, a: int, lam: Partition) -> List[Partition]:
    """Partitions b with |b| = a + |lam| and k >= b_1 >= a_1 >= b_2 >= ... >= b_r >= a_r."""
    highs = (shape.k,) + tuple(lam[:-1])
    return bounded_tuples(tuple(lam), highs, a + sum(lam))


def _check_special(shape, a):
    if not isinstance(a, int) or not 0 <= a <= shape.k:
        raise ValueError(f"special index {a!r} outside [0, {shape.k}]")


@lru_cache(maxsize=None)
def _pieri_terms(shape, a, lam):
    return tuple(pieri_tuples(shape, a, lam))


def pieri_classical(shape: GrassmannianShape, a: int, lam) -> CohomClass:
    _check_special(shape, a)
    lam = shape.partition(lam)
    return CohomClass._raw(shape, {b: 1 for b in _pieri_terms(shape, a, lam)})


def giambelli_leibniz(shape: GrassmannianShape, lam) -> SpecialExpansion:
    """Leibniz expansion of the Giambelli determinant of ``lam``.

    Entry (i, j) is the special class with index ``lam_i + j - i``; any
    permutation touching an index outside [0, k] contributes nothing.
    """
    lam = shape.partition(lam)
    return SpecialExpansion(tuple(_leibniz(lam, shape.k)))


def _leibniz(rows, k) -> Iterator[Tuple[int, Tuple[int, ...]]]:
    # rows may have any length; used for the (r+1)-row extended determinants too
    m = len(rows)
    chosen = []

    def rec(i, used):
        if i == m:
            perm = chosen
            inversions = sum(
                1 for x in range(m) for y in range(x + 1, m) if perm[x] > perm[y]
            )
            idx = tuple(sorted((rows[t] + perm[t] - t for t in range(m)), reverse=True))
            yield (-1) ** inversions, idx
            return
        for j in range(m):
            if j in used:
                continue
            entry = rows[i] + j - i
            if 0 <= entry <= k:
                chosen.append(j)
                used.add(j)
                yield from rec(i + 1, used)
                used.discard(j)
                chosen.pop()

    yield from rec(0, set())


def _fold_pieri(shape, indices, start: dict) -> dict:
    current = start
    for a in indices:
        nxt = defaultdict(int)
        for lam, c in current.items():
            for b in _pieri_terms(shape, a, lam):
                nxt[b] += c
        current = {b: c for b, c in nxt.items() if c}
        if not current:
            break
    return current


@lru_cache(maxsize=None)
def _basis_product(shape, lam, mu):
    if lam > mu:
        lam, mu = mu, lam
    if sum(lam) + sum(mu) > shape.dim_g:
        return {}
    acc = defaultdict(int)
    for indices, sign in giambelli_leibniz(shape, lam).collected().items():
        for nu, c in _fold_pieri(shape, indices, {mu: 1}).items():
            acc[nu] += sign * c
    return {nu: c for nu, c in acc.items() if c}


def multiply_classical(shape: GrassmannianShape, c1: CohomClass, c2: CohomClass) -> CohomClass:
    """Cup product, extended bilinearly from products of Schubert classes."""
    acc = defaultdict(int)
    for lam, a in c1.items():
        for mu, b in c2.items():
            for nu, c in _basis_product(shape, lam, mu).items():
                acc[nu] += a * b * c
    return CohomClass._raw(shape, {nu: c for nu, c in acc.items() if c})


def poincare_pairing(shape: GrassmannianShape, c1: CohomClass, c2: CohomClass) -> int:
    return sum(coeff * c2[complement(shape, lam)] for lam, coeff in c1.items())


def degree(shape: GrassmannianShape, c: CohomClass) -> int:
    """Coefficient of the point class."""
    return c[shape.top]


def lr_tableaux_oracle(shape: GrassmannianShape, lam, mu, nu) -> int:
    """Littlewood-Richardson coefficient by brute-force tableau enumeration.

    Counts semistandard fillings of the skew shape ``nu/lam`` with content
    ``mu`` whose reverse reading word is a lattice word.
    """
    lam, mu, nu = shape.partition(lam), shape.partition(mu), shape.partition(nu)
    if any(l > v for l, v in zip(lam, nu)) or sum(lam) + sum(mu) != sum(nu):
        return 0
    content = [m for m in mu if m]
    cells = []  # reading order: rows top to bottom, each right to left
    for i in range(len(nu)):
        for j in range(nu[i] - 1, lam[i] - 1, -1):
            cells.append((i, j))
    filling = {}
    counts = [0] * (len(content) + 1)

    def rec(t):
        if t == len(cells):
            return 1
        i, j = cells[t]
        total = 0
        for v in range(1, len(content) + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            right = filling.get((i, j + 1))
            if right is not None and v > right:
                continue
            above = filling.get((i - 1, j))
            if above is not None and v <= above:
                continue
            filling[(i, j)] = v
            counts[v] += 1
            total += rec(t + 1)
            counts[v] -= 1
            del filling[(i, j)]
        return total

    return rec(0)
