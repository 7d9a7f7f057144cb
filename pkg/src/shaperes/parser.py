"""Text format for input systems.

    vars: x1 x2
    f1 = x1^2 - x2 - 1      # comments run to end of line
    f2 = x1^2 + x1*x2 - 2

The header must declare x1..xn in order and the polynomial lines must be
named f1..fn in order.  Expression grammar (whitespace-insensitive):

    expr     := ["-"] term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := base ("^" UINT)?
    base     := RATIONAL | VAR | "(" expr ")"
    RATIONAL := UINT ("/" UINT)?
"""

import re
from fractions import Fraction

from .errors import ArityMismatch, ParseError
from .mpoly import MPoly, PolySystem

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*/^()=:]))")


def _tokenize(text, line_no):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip():
                col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
                raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}",
                                 line_no, col)
            break
        pos = m.end()
        col = m.start(m.lastindex) + 1
        kind = ("NUM", "NAME", "OP")[m.lastindex - 1]
        tokens.append((kind, m.group(m.lastindex), col))
    return tokens


class _ExprParser:
    def __init__(self, tokens, vars, line_no):
        self.tokens = tokens
        self.vars = tuple(vars)
        self.line = line_no
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, -1)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        col = tok[2] if tok[2] != -1 else (self.tokens[-1][2] + len(self.tokens[-1][1])
                                           if self.tokens else 1)
        raise ParseError(message, self.line, col)

    def parse(self):
        p = self.expr()
        if self.peek()[0] is not None:
            self.fail(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self):
        kind, val, _ = self.peek()
        negate = False
        if kind == "OP" and val == "-":
            self.take()
            negate = True
        p = self.term()
        if negate:
            p = -p
        while True:
            kind, val, _ = self.peek()
            if kind == "OP" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self):
        p = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "OP" and val == "*":
                self.take()
                p = p * self.factor()
            else:
                return p

    def factor(self):
        p = self.base()
        kind, val, _ = self.peek()
        if kind == "OP" and val == "^":
            self.take()
            kind, val, _ = self.peek()
            if kind != "NUM":
                self.fail("expected an integer exponent")
            self.take()
            p = p ** int(val)
        return p

    def base(self):
        kind, val, col = self.take()
        if kind == "NUM":
            num = int(val)
            kind, val, _ = self.peek()
            if kind == "OP" and val == "/":
                self.take()
                kind, val, _ = self.peek()
                if kind != "NUM":
                    self.fail("expected a denominator")
                self.take()
                if int(val) == 0:
                    self.fail("zero denominator")
                return MPoly.const(self.vars, Fraction(num, int(val)))
            return MPoly.const(self.vars, num)
        if kind == "NAME":
            if val not in self.vars:
                self.fail(f"unknown variable {val!r}", (kind, val, col))
            return MPoly.variable(self.vars, val)
        if kind == "OP" and val == "(":
            p = self.expr()
            kind, val, _ = self.peek()
            if not (kind == "OP" and val == ")"):
                self.fail("expected ')'")
            self.take()
            return p
        if kind is None:
            self.fail("unexpected end of expression")
        self.fail(f"unexpected {val!r}", (kind, val, col))


def parse_poly(text, vars, line_no=1):
    """Parse a single expression over the given variables."""
    tokens = _tokenize(text, line_no)
    if not tokens:
        raise ParseError("empty expression", line_no, 1)
    return _ExprParser(tokens, vars, line_no).parse()


def parse_system(text):
    """Parse a full system file into a PolySystem."""
    lines = []
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            lines.append((no, body))
    if not lines:
        raise ParseError("empty input", 1, 1)

    no, header = lines[0]
    stripped = header.strip()
    if not stripped.startswith("vars:"):
        raise ParseError("expected 'vars:' header", no, header.index(stripped[0]) + 1)
    names = stripped[len("vars:"):].split()
    expected = [f"x{i + 1}" for i in range(len(names))]
    if not names or names != expected:
        raise ParseError(f"variables must be {' '.join(expected) or 'x1 x2 ...'} in order",
                         no, header.index("vars:") + 6)
    if len(names) < 2:
        raise ParseError("need at least two variables", no, 1)
    vars = tuple(names)

    polys = []
    for idx, (no, body) in enumerate(lines[1:]):
        tokens = _tokenize(body, no)
        if len(tokens) < 2 or tokens[0][0] != "NAME" or tokens[1][1] != "=":
            raise ParseError("expected 'fK = expression'", no, tokens[0][2] if tokens else 1)
        want = f"f{idx + 1}"
        if tokens[0][1] != want:
            raise ParseError(f"expected {want!r}, got {tokens[0][1]!r}", no, tokens[0][2])
        polys.append(_ExprParser(tokens[2:], vars, no).parse())

    if len(polys) != len(vars):
        raise ArityMismatch(f"{len(polys)} polynomials for {len(vars)} variables")
    return PolySystem(polys)
