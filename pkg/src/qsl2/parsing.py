"""Recursive-descent parser for algebra expressions.

One grammar serves scalars, U_q(sl2) and O_q(SL2); only the set of atoms
differs::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := power (('*' | '/' | <juxtaposition>) power)*
    power  := atom ('^' ['+'|'-'] INT | '^' '(' ['+'|'-'] INT ')')?
    atom   := INT | NAME | '(' expr ')'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable, Mapping, Optional


class ParseError(ValueError):
    """Malformed expression; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


@dataclass(frozen=True)
class _Tok:
    kind: str  # INT, NAME, OP, END
    value: str
    pos: int


@dataclass
class Grammar:
    """Atoms and ring hooks for one algebra.

    ``atoms`` maps a name to a zero-argument factory; ``from_int`` lifts
    integers; ``invert`` returns the inverse or None when not invertible.
    """

    atoms: Mapping[str, Callable[[], Any]]
    from_int: Callable[[int], Any]
    invert: Callable[[Any], Optional[Any]]
    name: str = "expression"


def _tokenize(text: str, grammar: Grammar) -> list[_Tok]:
    names = sorted(grammar.atoms, key=len, reverse=True)
    name_re = re.compile("|".join(re.escape(n) for n in names)) if names else None
    toks: list[_Tok] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("INT", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            toks.append(_Tok("OP", ch, i))
            i += 1
            continue
        if ch in "−–":  # unicode minus / en dash
            toks.append(_Tok("OP", "-", i))
            i += 1
            continue
        m = name_re.match(text, i) if name_re else None
        if m:
            toks.append(_Tok("NAME", m.group(0), i))
            i = m.end()
            continue
        j = i
        while j < n and (text[j].isalnum() or text[j] == "_"):
            j += 1
        word = text[i:max(j, i + 1)]
        raise ParseError(f"unknown generator {word!r} in {grammar.name}", i, text)
    toks.append(_Tok("END", "", n))
    return toks


class _Parser:
    def __init__(self, text: str, grammar: Grammar):
        self.text = text
        self.g = grammar
        self.toks = _tokenize(text, grammar)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.pos, self.text)

    def parse(self):
        if self.peek().kind == "END":
            self.error("empty expression")
        v = self.expr()
        if self.peek().kind != "END":
            self.error(f"unexpected {self.peek().value!r}")
        return v

    def expr(self):
        t = self.peek()
        sign = 1
        if t.kind == "OP" and t.value in "+-":
            self.take()
            sign = -1 if t.value == "-" else 1
        v = self.term()
        if sign < 0:
            v = -v
        while self.peek().kind == "OP" and self.peek().value in "+-":
            op = self.take().value
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def _starts_atom(self, t: _Tok) -> bool:
        return t.kind in ("INT", "NAME") or (t.kind == "OP" and t.value == "(")

    def term(self):
        v = self.power()
        while True:
            t = self.peek()
            if t.kind == "OP" and t.value == "*":
                self.take()
                v = v * self.power()
            elif t.kind == "OP" and t.value == "/":
                self.take()
                rhs_tok = self.peek()
                rhs = self.power()
                inv = self.g.invert(rhs)
                if inv is None:
                    self.error("division by a non-invertible element", rhs_tok)
                v = v * inv
            elif self._starts_atom(t):
                v = v * self.power()
            else:
                return v

    def _exponent(self) -> int:
        t = self.peek()
        paren = t.kind == "OP" and t.value == "("
        if paren:
            self.take()
        sign = 1
        t = self.peek()
        if t.kind == "OP" and t.value in "+-":
            self.take()
            sign = -1 if t.value == "-" else 1
        t = self.take()
        if t.kind != "INT":
            self.error("expected integer exponent", t)
        if paren:
            close = self.take()
            if not (close.kind == "OP" and close.value == ")"):
                self.error("expected ')'", close)
        return sign * int(t.value)

    def power(self):
        base_tok = self.peek()
        v = self.atom()
        if self.peek().kind == "OP" and self.peek().value == "^":
            self.take()
            k = self._exponent()
            if k < 0:
                inv = self.g.invert(v)
                if inv is None:
                    self.error("negative power of a non-invertible element", base_tok)
                v, k = inv, -k
            out = self.g.from_int(1)
            for _ in range(k):
                out = out * v
            v = out
        return v

    def atom(self):
        t = self.take()
        if t.kind == "INT":
            return self.g.from_int(int(t.value))
        if t.kind == "NAME":
            return self.g.atoms[t.value]()
        if t.kind == "OP" and t.value == "(":
            v = self.expr()
            close = self.take()
            if not (close.kind == "OP" and close.value == ")"):
                self.error("expected ')'", close)
            return v
        self.error(f"unexpected {t.value or 'end of input'!r}", t)


def parse_with(text: str, grammar: Grammar):
    return _Parser(text, grammar).parse()


def scalar_grammar() -> Grammar:
    from .qscalar import Q, QScalar

    def inv(x: QScalar):
        return None if x.is_zero() else x.inverse()

    return Grammar(atoms={"q": lambda: Q}, from_int=QScalar.from_int, invert=inv, name="scalar")


def parse_scalar(text: str):
    """Parse a scalar expression in ``q``."""
    return parse_with(text, scalar_grammar())
