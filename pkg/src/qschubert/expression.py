"""A small arithmetic language over Schubert classes.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | factor
    factor := 's[' int (',' int)* ']' | 'q' ('^' int)? | int | '(' expr ')'

``s[a]`` with a single entry is the special class ``(a, 0, ..., 0)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Tuple, Union

from .classical import CohomClass, multiply_classical
from .grassmannian import GrassmannianShape, ShapeError
from .quantum import QuantumClass, quantum_multiply


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class ClassLiteral:
    parts: Tuple[int, ...]
    position: int = 0


@dataclass(frozen=True)
class QPower:
    power: int = 1
    position: int = 0


@dataclass(frozen=True)
class IntLiteral:
    value: int


@dataclass(frozen=True)
class Neg:
    operand: "Expression"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expression"
    right: "Expression"


Expression = Union[ClassLiteral, QPower, IntLiteral, Neg, BinOp]

_TOKEN = re.compile(r"\s*(?:(\d+)|(s\[)|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("s[", None, m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^(),]q":
                raise ParseError(f"unknown token {ch!r}", m.start(3))
            tokens.append((ch, None, m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, shape):
        self.tokens = _tokenize(text)
        self.i = 0
        self.shape = shape

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[0] if tok[1] is None else tok[1])
            raise ParseError(f"expected {kind!r}, found {found}", tok[2])
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[0] in "+-":
            op = self.take(self.peek()[0])[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] == "*":
            self.take("*")
            node = BinOp("*", node, self.unary())
        return node

    def unary(self):
        if self.peek()[0] == "-":
            self.take("-")
            return Neg(self.unary())
        return self.factor()

    def factor(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.take("int")
            return IntLiteral(value)
        if kind == "q":
            self.take("q")
            power = 1
            if self.peek()[0] == "^":
                self.take("^")
                power = self.take("int")[1]
            return QPower(power, pos)
        if kind == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        if kind == "s[":
            self.take("s[")
            parts = [self.take("int")[1]]
            while self.peek()[0] == ",":
                self.take(",")
                parts.append(self.take("int")[1])
            self.take("]")
            if self.shape is not None:
                try:
                    self.shape.partition(parts)
                except ShapeError as exc:
                    raise ParseError(f"invalid partition {parts} for {self.shape!r}: {exc}", pos)
            return ClassLiteral(tuple(parts), pos)
        found = "end of input" if kind == "end" else repr(kind if value is None else value)
        raise ParseError(f"unexpected {found}", pos)


def parse(text: str, shape: GrassmannianShape = None) -> Expression:
    """Parse ``text``; class literals are validated when ``shape`` is given."""
    p = _Parser(text, shape)
    node = p.expr()
    p.take("end")
    return node


def evaluate(expr: Expression, shape: GrassmannianShape, mode: str = "quantum"):
    """Evaluate to a :class:`CohomClass` (classical) or :class:`QuantumClass`."""
    if mode not in ("classical", "quantum"):
        raise ValueError(f"unknown mode {mode!r}")
    quantum = mode == "quantum"
    cls = QuantumClass if quantum else CohomClass
    mul = quantum_multiply if quantum else multiply_classical

    def ev(node):
        if isinstance(node, IntLiteral):
            return cls.one(shape).scale(node.value)
        if isinstance(node, ClassLiteral):
            try:
                return cls.basis(shape, shape.partition(node.parts))
            except ShapeError as exc:
                raise ParseError(f"invalid partition {list(node.parts)}: {exc}", node.position)
        if isinstance(node, QPower):
            if not quantum:
                raise ParseError("q is not available in classical mode", node.position)
            return QuantumClass.one(shape).times_q(node.power)
        if isinstance(node, Neg):
            return -ev(node.operand)
        if isinstance(node, BinOp):
            left, right = ev(node.left), ev(node.right)
            if node.op == "+":
                return left + right
            if node.op == "-":
                return left - right
            return mul(shape, left, right)
        raise TypeError(f"not an expression node: {node!r}")

    return ev(expr)


def sorted_terms(c) -> List[Tuple[Tuple[int, ...], int, int]]:
    """``(partition, q_degree, coeff)`` by ascending degree, then descending partition."""
    if isinstance(c, QuantumClass):
        rows = [(lam, d, x) for (lam, d), x in c.items()]
    else:
        rows = [(lam, 0, x) for lam, x in c.items()]
    return sorted(rows, key=lambda t: (t[1], tuple(-p for p in t[0])))


def render_partition(lam) -> str:
    return "s[" + ",".join(map(str, lam)) + "]"


def render(c) -> str:
    """Human-readable form, e.g. ``s[2,2] + q``; parses back to the same class."""
    rows = sorted_terms(c)
    if not rows:
        return "0"
    out = []
    for lam, d, x in rows:
        pieces = []
        trivial = not any(lam)
        if abs(x) != 1 or (trivial and d == 0):
            pieces.append(str(abs(x)))
        if d:
            pieces.append("q" if d == 1 else f"q^{d}")
        if not trivial:
            pieces.append(render_partition(lam))
        body = "*".join(pieces)
        if not out:
            out.append(("-" if x < 0 else "") + body)
        else:
            out.append((" - " if x < 0 else " + ") + body)
    return "".join(out)


def class_json(c) -> dict:
    return {
        "shape": {"n": c.shape.n, "k": c.shape.k},
        "terms": [
            {"partition": list(lam), "q": d, "coeff": x} for lam, d, x in sorted_terms(c)
        ],
    }
