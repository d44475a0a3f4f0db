"""Construction expressions such as ``con(ltp(M3, chain(3)))``.

Grammar::

    expr   := atom | op '(' expr {',' expr} ')'
    atom   := NAME | family '(' INT ')' | PATH

Spans are 0-based half-open character ranges; error columns are 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ArityMismatch, BoxlatError, ExprSyntaxError, UnknownOperator

ARITY = {
    "box": 2, "ltp": 2, "tensor": 2, "prod": 2,
    "dual": 1, "con": 1, "m3": 1, "n5": 1, "m3angle": 1, "n5angle": 1,
}
FAMILIES = ("chain", "boolean", "FD")

_WORD = re.compile(r"[A-Za-z0-9_.\-/~]+")


@dataclass(frozen=True)
class Atom:
    name: str
    span: tuple = field(default=(0, 0), compare=False)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Call:
    op: str
    args: tuple
    span: tuple = field(default=(0, 0), compare=False)

    def __str__(self):
        return f"{self.op}({', '.join(str(a) for a in self.args)})"


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, cls, message, pos=None):
        return cls(message, (self.pos if pos is None else pos) + 1)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(ExprSyntaxError, f"expected {ch!r}, found {found}")
        self.pos += 1

    def word(self):
        self.skip()
        m = _WORD.match(self.text, self.pos)
        if not m:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(ExprSyntaxError, f"expected a name, found {found}")
        self.pos = m.end()
        return m.group(0), m.start()

    def expr(self):
        name, start = self.word()
        end = self.pos
        if self.peek() != "(":
            return Atom(name, (start, end))
        if name in FAMILIES:
            self.expect("(")
            self.skip()
            m = re.compile(r"\d+").match(self.text, self.pos)
            if not m:
                raise self.error(ExprSyntaxError, f"{name} expects an integer")
            self.pos = m.end()
            self.expect(")")
            return Atom(f"{name}({int(m.group(0))})", (start, self.pos))
        if name not in ARITY:
            raise self.error(UnknownOperator, f"unknown operator {name!r}", start)
        self.expect("(")
        args = [self.expr()]
        while self.peek() == ",":
            self.pos += 1
            args.append(self.expr())
        self.expect(")")
        if len(args) != ARITY[name]:
            raise self.error(
                ArityMismatch, f"{name} takes {ARITY[name]} argument(s), got {len(args)}", start)
        return Call(name, tuple(args), (start, self.pos))


def parse_expr(text):
    p = _Parser(text)
    node = p.expr()
    if p.peek():
        raise p.error(ExprSyntaxError, f"unexpected {p.peek()!r}")
    return node


def _apply(op, args, max_elements):
    from .box import box_product, lattice_tensor_product
    from .congruence import congruence_lattice
    from .constructions import m3_angle, m3_of, n5_angle, n5_of
    from .order import direct_product, dual
    from .tensor import tensor_product

    if op == "box":
        return box_product(*args, max_elements=max_elements)
    if op == "ltp":
        return lattice_tensor_product(*args, max_elements=max_elements)
    if op == "tensor":
        return tensor_product(*args, max_elements=max_elements)
    if op == "prod":
        return direct_product(*args, max_elements=max_elements)
    (L,) = args
    if op == "dual":
        return dual(L)
    if op == "con":
        return congruence_lattice(L, max_elements=max_elements)
    build = {"m3": m3_of, "n5": n5_of, "m3angle": m3_angle, "n5angle": n5_angle}[op]
    return build(L, max_elements=max_elements).lattice


def _load_atom(name):
    from .io import load_json
    from .order import catalog

    if name.endswith(".json") or "/" in name:
        return load_json(name)
    return catalog(name)


def evaluate(node, max_elements=None, memo=None):
    """Evaluate bottom-up; repeated sub-expressions are computed once.

    Errors raised while evaluating a node get that node's ``span``.
    """
    if isinstance(node, str):
        node = parse_expr(node)
    memo = {} if memo is None else memo
    key = str(node)
    if key in memo:
        return memo[key]
    try:
        if isinstance(node, Atom):
            value = _load_atom(node.name)
        else:
            args = [evaluate(a, max_elements, memo) for a in node.args]
            value = _apply(node.op, args, max_elements)
    except BoxlatError as exc:
        if exc.span is None:
            exc.span = node.span
        raise
    except OSError as exc:
        err = BoxlatError(f"cannot read {node}: {exc.strerror or exc}")
        err.span = node.span
        raise err from exc
    memo[key] = value
    return value
