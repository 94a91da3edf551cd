"""Text input and output for polynomials.

Grammar (whitespace ignored)::

    poly   := sign? term (('+'|'-') term)*
    term   := coeff ('*' factor)* | factor ('*' factor)*
    factor := ident ('^' uint)?
    coeff  := int ('/' uint)?
"""

from __future__ import annotations

import re

from .polyring import Polynomial, PolyRing


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}" + (f" in {text!r}" if text else ""))
        self.position = position


class UnknownVariableError(ValueError):
    def __init__(self, name: str, position: int):
        super().__init__(f"unknown variable {name!r} at position {position}")
        self.name = name
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^":
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", start, text)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolynomialSyntaxError(f"expected {kind}, found {what}", tok[2], self.text)
        self.i += 1
        return tok

    def poly(self) -> dict:
        terms: dict = {}
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take(self.peek()[0])[0] == "-" else 1
        self.add_term(terms, sign, *self.term())
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take(self.peek()[0])[0] == "-" else 1
            self.add_term(terms, sign, *self.term())
        self.take("end")
        return terms

    def add_term(self, terms, sign, exps, coeff):
        f = self.ring.field
        terms[exps] = f.normalize(terms.get(exps, 0) + sign * coeff)

    def term(self):
        f = self.ring.field
        exps = [0] * self.ring.nvars
        if self.peek()[0] == "int":
            num = int(self.take("int")[1])
            den = 1
            if self.peek()[0] == "/":
                self.take("/")
                tok = self.take("int")
                den = int(tok[1])
                if den == 0:
                    raise PolynomialSyntaxError("zero denominator", tok[2], self.text)
            coeff = f.from_ratio(num, den)
            if self.peek()[0] != "*":
                return tuple(exps), coeff
            self.take("*")
        else:
            coeff = f(1)
        self.factor(exps)
        while self.peek()[0] == "*":
            self.take("*")
            self.factor(exps)
        return tuple(exps), coeff

    def factor(self, exps):
        _, name, pos = self.take("ident")
        if name not in self.ring.names:
            raise UnknownVariableError(name, pos)
        power = 1
        if self.peek()[0] == "^":
            self.take("^")
            power = int(self.take("int")[1])
        exps[self.ring.index(name)] += power


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring``."""
    return ring.from_dict(_Parser(text, ring).poly())


def _format_coeff(c) -> str:
    return str(c)


def format_polynomial(p: Polynomial) -> str:
    """Print terms in descending order with explicit ``*`` and ``^``."""
    if p.is_zero():
        return "0"
    field = p.ring.field
    names = p.ring.names
    pieces = []
    for k, (e, c) in enumerate(p.terms()):
        c = field.signed(c)
        neg = c < 0
        a = -c if neg else c
        factors = [n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x]
        if not factors:
            body = _format_coeff(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(a)] + factors)
        if k == 0:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)
