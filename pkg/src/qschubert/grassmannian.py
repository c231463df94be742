"""Grassmannian shapes and the partitions indexing their Schubert classes.

A shape ``(n, k)`` stands for G(n-k, n), the Grassmannian of (n-k)-planes
in C^n.  Schubert classes are indexed by weakly decreasing tuples of
``r = n - k`` integers bounded by ``k``; tuples are always stored
zero-padded to length ``r``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator, Optional, Tuple

Partition = Tuple[int, ...]


class ShapeError(ValueError):
    """Raised for invalid shapes or partitions that do not fit the box."""


@dataclass(frozen=True)
class GrassmannianShape:
    n: int
    k: int
    r: int = field(init=False)
    dim_g: int = field(init=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.k, int):
            raise ShapeError("n and k must be integers")
        if self.n <= 1 or self.k <= 0 or self.k >= self.n:
            raise ShapeError(f"need 1 <= k <= n-1, got n={self.n}, k={self.k}")
        object.__setattr__(self, "r", self.n - self.k)
        object.__setattr__(self, "dim_g", self.k * (self.n - self.k))

    def __repr__(self):
        return f"G({self.r},{self.n})"

    @property
    def zero(self) -> Partition:
        """The empty partition, indexing the identity class."""
        return (0,) * self.r

    @property
    def top(self) -> Partition:
        """The full box, indexing the point class."""
        return (self.k,) * self.r

    def special(self, a: int) -> Partition:
        """The one-row partition ``(a, 0, ..., 0)``."""
        return self.partition([a])

    def partition(self, parts: Iterable[int]) -> Partition:
        """Validate ``parts`` and return it zero-padded to length ``r``."""
        return _check_tuple(tuple(parts), self.k, self.r)

    def extended(self, parts: Iterable[int]) -> Partition:
        """Validate an (r+1)-tuple ``k >= b_1 >= ... >= b_{r+1} >= 0``."""
        return _check_tuple(tuple(parts), self.k, self.r + 1)


def _check_tuple(parts, k, length):
    if len(parts) > length:
        raise ShapeError(f"{parts} has more than {length} parts")
    parts = parts + (0,) * (length - len(parts))
    for p in parts:
        if not isinstance(p, int) or isinstance(p, bool):
            raise ShapeError(f"non-integer part in {parts}")
        if p < 0:
            raise ShapeError(f"negative part in {parts}")
        if p > k:
            raise ShapeError(f"part {p} exceeds k={k}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ShapeError(f"{parts} is not weakly decreasing")
    return parts


def make_shape(n: int, k: int) -> GrassmannianShape:
    return GrassmannianShape(n, k)


def weight(parts: Iterable[int]) -> int:
    return sum(parts)


def complement(shape: GrassmannianShape, lam) -> Partition:
    """Poincare-dual partition ``(k - a_r, ..., k - a_1)``."""
    lam = shape.partition(lam)
    return tuple(shape.k - a for a in reversed(lam))


def _box(k: int, r: int) -> Iterator[Partition]:
    # lexicographically descending
    if r == 0:
        yield ()
        return
    for first in range(k, -1, -1):
        for rest in _box(first, r - 1):
            yield (first,) + rest


def enumerate_box(shape: GrassmannianShape) -> list:
    """All partitions in the r x k box, lexicographically descending.

    >>> enumerate_box(make_shape(4, 2))
    [(2, 2), (2, 1), (2, 0), (1, 1), (1, 0), (0, 0)]
    """
    box = list(_box(shape.k, shape.r))
    assert len(box) == comb(shape.n, shape.k)
    return box


def moduli_dimension(shape: GrassmannianShape, d: int) -> int:
    """Dimension ``n*d + k(n-k)`` of the degree-d quot scheme."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return shape.n * d + shape.dim_g


def degree_for_codim(shape: GrassmannianShape, total: int) -> Optional[int]:
    """The degree d with ``total == n*d + dim G``, or None if there is none."""
    excess = total - shape.dim_g
    if excess < 0 or excess % shape.n:
        return None
    return excess // shape.n
