"""Parse printed superpositions such as ``|01> - i(|10> + (1+i)|11>)``.

Grammar (juxtaposition multiplies; a product of two kets is a tensor product)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'|'/'] factor)*
    factor := atom ['^' integer]
    atom   := number | 'i' | 'w' | 'sqrt' '(' expr ')' | '(' expr ')' | ket

``w`` is the cube root of unity ``-1/2 + (sqrt(3)/2) i``. A ket whose label is
not a bit string is looked up by name in ``names`` (e.g. ``|Psi->``).
"""
import re
from collections import defaultdict

import numpy as np

OMEGA = complex(-0.5, np.sqrt(3) / 2)

_TOKEN = re.compile(r"\s*(?:(\|[^|>]+>)|(\d+(?:\.\d*)?)|(sqrt)|([iw])|([-+*/^()]))")


class KetSyntaxError(ValueError):
    pass


class Superposition(dict):
    """``{ket label: coefficient}``; labels all have the same length."""

    @property
    def n_qubits(self):
        return len(next(iter(self)))

    def scaled(self, c):
        return Superposition({k: c * v for k, v in self.items()})

    def __add__(self, other):
        out = defaultdict(complex, self)
        for k, v in other.items():
            out[k] += v
        lengths = {len(k) for k in out}
        if len(lengths) > 1:
            raise KetSyntaxError(f"cannot add kets of different lengths {sorted(lengths)}")
        return Superposition(out)

    def tensor(self, other):
        return Superposition(
            {a + b: u * v for a, u in self.items() for b, v in other.items()}
        )

    def to_array(self):
        n = self.n_qubits
        out = np.zeros(1 << n, dtype=np.complex128)
        for label, c in self.items():
            out[int(label, 2)] += c
        return out


def _tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise KetSyntaxError(f"unexpected input at {text[pos:pos + 10]!r}")
        kind = m.lastindex
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


class _Parser:
    KET, NUM, SQRT, CONST, OP = range(1, 6)

    def __init__(self, text, names):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.names = names or {}

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise KetSyntaxError(f"expected {value or 'a token'}, got {tok[1]!r}")
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        if self.peek()[0] is not None:
            raise KetSyntaxError(f"trailing input at token {self.peek()[1]!r}")
        return value

    def expr(self):
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        value = _mul(sign, self.term())
        while self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
            value = _add(value, _mul(sign, self.term()))
        return value

    def term(self):
        value = self.factor()
        while True:
            kind, tok = self.peek()
            if tok == "*":
                self.take()
                value = _mul(value, self.factor())
            elif tok == "/":
                self.take()
                rhs = self.factor()
                if isinstance(rhs, Superposition):
                    raise KetSyntaxError("cannot divide by a ket")
                value = _mul(value, 1 / rhs)
            elif kind in (self.KET, self.NUM, self.SQRT, self.CONST) or tok == "(":
                value = _mul(value, self.factor())
            else:
                return value

    def factor(self):
        value = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, tok = self.take()
            if kind != self.NUM or isinstance(value, Superposition):
                raise KetSyntaxError("only scalars can be raised to an integer power")
            value = value ** int(tok)
        return value

    def atom(self):
        kind, tok = self.take()
        if kind == self.NUM:
            return complex(float(tok))
        if kind == self.CONST:
            return 1j if tok == "i" else OMEGA
        if kind == self.SQRT:
            self.take("(")
            arg = self.expr()
            self.take(")")
            if isinstance(arg, Superposition):
                raise KetSyntaxError("sqrt of a ket")
            return complex(np.sqrt(arg))
        if tok == "(":
            value = self.expr()
            self.take(")")
            return value
        if kind == self.KET:
            label = tok[1:-1]
            if set(label) <= {"0", "1"}:
                return Superposition({label: 1 + 0j})
            try:
                return Superposition(self.names[label])
            except KeyError:
                raise KetSyntaxError(f"unknown named state |{label}>") from None
        raise KetSyntaxError(f"unexpected token {tok!r}")


def _mul(a, b):
    a_ket, b_ket = isinstance(a, Superposition), isinstance(b, Superposition)
    if a_ket and b_ket:
        return a.tensor(b)
    if a_ket:
        return a.scaled(b)
    if b_ket:
        return b.scaled(a)
    return a * b


def _add(a, b):
    if isinstance(a, Superposition) and isinstance(b, Superposition):
        return a + b
    if isinstance(a, Superposition) or isinstance(b, Superposition):
        raise KetSyntaxError("cannot add a scalar and a ket")
    return a + b


def parse_kets(text, names=None):
    """Evaluate a printed expression to a scalar or a :class:`Superposition`."""
    return _Parser(text, names).parse()
