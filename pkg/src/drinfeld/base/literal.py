"""Recursive-descent parser for the literal grammar.

Accepted forms look like ``T^3+2*T+1``, ``(T+1)/T^2``, ``g^5*T + 1`` or
``tau^2 + (T+1)*tau + T``.  Whitespace is ignored.  The parser is generic:
callers supply the values bound to identifiers and a constructor for integer
literals, and the arithmetic is whatever those values implement.
"""

from __future__ import annotations

import re
from typing import Callable, Mapping

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.message = message
        self.text = text
        self.pos = pos


class _Parser:
    def __init__(self, text, names, const):
        self.text = text
        self.names = names
        self.const = const
        self.tokens = []
        for m in _TOKEN.finditer(text):
            if m.group(0).strip() == "":
                continue
            if m.group(1) is not None:
                self.tokens.append(("int", int(m.group(1)), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append(("name", m.group(2), m.start(2)))
            else:
                self.tokens.append(("op", m.group(3), m.start(3)))
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", None, len(self.text))

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def fail(self, msg, pos=None):
        raise ParseError(msg, self.text, self.peek()[2] if pos is None else pos)

    def parse(self):
        if not self.tokens:
            self.fail("empty expression", 0)
        v = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            _, op, pos = self.take()
            w = self.unary()
            try:
                v = v * w if op == "*" else v / w
            except ZeroDivisionError:
                self.fail("division by zero", pos)
            except TypeError:
                self.fail(f"operator {op!r} not supported here", pos)
        return v

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            sign = 1
            if self.peek()[:2] == ("op", "-"):
                self.take()
                sign = -1
            kind, val, pos = self.take()
            if kind != "int":
                self.fail("expected integer exponent", pos)
            try:
                return base ** (sign * val)
            except (ValueError, ZeroDivisionError) as exc:
                self.fail(str(exc), pos)
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return self.const(val)
        if kind == "name":
            if val not in self.names:
                self.fail(f"unknown symbol {val!r}", pos)
            return self.names[val]
        if kind == "op" and val == "(":
            v = self.expr()
            if self.take()[:2] != ("op", ")"):
                self.fail("expected ')'")
            return v
        self.fail("unexpected end of input" if kind == "end" else f"unexpected {val!r}", pos)


def parse_expression(text: str, names: Mapping[str, object], const: Callable[[int], object]):
    """Evaluate ``text`` with identifiers from ``names`` and integer literals via ``const``."""
    return _Parser(text, dict(names), const).parse()


def field_names(field) -> dict:
    out = {}
    if field.n > 1:
        out["g"] = field.gen()
    return out


def parse_apoly(text: str, field, var: str = "T"):
    """Parse an element of A = F_q[T]."""
    v = parse_ratfunc(text, field)
    if not v.is_poly():
        raise ParseError("expected a polynomial", text, 0)
    return v.num.with_var(var)


def parse_ratfunc(text: str, field):
    """Parse an element of K = F_q(T); division is allowed."""
    from .ratfunc import RatFunc
    names = {"T": RatFunc.T(field)}
    names.update({k: RatFunc.constant(field, v) for k, v in field_names(field).items()})
    return parse_expression(text, names, lambda k: RatFunc.constant(field, k))
