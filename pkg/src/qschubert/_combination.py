from __future__ import annotations

from collections import defaultdict


class LinearCombination:
    """Finite integer combination of hashable keys over a fixed shape.

    Zero coefficients are never stored.  Instances are treated as immutable;
    arithmetic returns new objects.
    """

    __slots__ = ("shape", "_terms", "_hash")

    def __init__(self, shape, terms=None):
        self.shape = shape
        clean = {}
        if terms:
            for key, c in dict(terms).items():
                if not isinstance(c, int) or isinstance(c, bool):
                    raise TypeError(f"coefficient {c!r} is not an integer")
                if c:
                    clean[self._check_key(key)] = c
        self._terms = clean
        self._hash = None

    def _check_key(self, key):
        return key

    @classmethod
    def _raw(cls, shape, terms):
        # trusted constructor: keys already validated, zeros already removed
        obj = cls.__new__(cls)
        obj.shape = shape
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, key):
        return self._terms.get(key, 0)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if type(other) is not type(self):
            return NotImplemented
        return self.shape == other.shape and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.shape, frozenset(self._terms.items())))
        return self._hash

    def _same(self, other):
        if type(other) is not type(self) or other.shape != self.shape:
            raise TypeError(f"cannot combine {self!r} with {other!r}")

    def __add__(self, other):
        self._same(other)
        acc = defaultdict(int, self._terms)
        for key, c in other._terms.items():
            acc[key] += c
        return self._raw(self.shape, {key: c for key, c in acc.items() if c})

    def __neg__(self):
        return self._raw(self.shape, {key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor: int):
        if not factor:
            return self._raw(self.shape, {})
        return self._raw(self.shape, {key: factor * c for key, c in self._terms.items()})

    def __rmul__(self, factor):
        if isinstance(factor, int):
            return self.scale(factor)
        return NotImplemented

    def __repr__(self):
        return f"{type(self).__name__}({self.shape!r}, {dict(sorted(self._terms.items(), reverse=True))})"


def accumulate(target: defaultdict, terms, factor: int = 1):
    for key, c in terms:
        target[key] += factor * c
