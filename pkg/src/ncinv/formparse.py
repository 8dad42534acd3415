"""Parser for closed-form Hilbert series written as text.

Grammar (``^`` and ``**`` both mean power, juxtaposition multiplies)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/" | <implicit>) unary)*
    unary  := "-" unary | power
    power  := atom (("^" | "**") INT)?
    atom   := INT | "z" | ("t" | "u") INT | "(" expr ")"

A divisor must be a product of integers and powers of factors
``(1 - t^a z^k)`` with ``k >= 1``; that is what keeps every parsed form
expandable.  ``(1 - 2z^2 + 2z^4)/(1 - z^2)^3`` and
``1/2 + (1+t1 z)(1+t2 z)/(2(1-t1 z)(1-t2 z))`` are both accepted.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import FormSyntaxError
from .polyring import Factor, FormTerm, GradedSeries, RationalForm, TPoly, _merge_factors

__all__ = ["parse_form"]

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<var>z|[tu]_?\d+)|(?P<pow>\*\*|\^)|(?P<sup>[⁰¹²³⁴⁵⁶⁷⁸⁹]+)|(?P<op>[-+*/()·−]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormSyntaxError("unexpected character", text, pos)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "op":
            value = {"·": "*", "−": "-"}.get(value, value)
        if kind == "sup":
            tokens.append(("pow", "^", start))
            kind, value = "int", value.translate(_SUPERSCRIPTS)
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise FormSyntaxError(message, self.text, tok[2])

    def parse(self):
        node = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()
            node = ("add" if op[1] == "+" else "sub", node, self.term(), op[2])
        return node

    def term(self):
        node = self.unary()
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value in "*/":
                self.take()
                node = ("mul" if value == "*" else "div", node, self.unary(), pos)
            elif kind in ("int", "var") or (kind == "op" and value == "("):
                node = ("mul", node, self.unary(), pos)
            else:
                return node

    def unary(self):
        kind, value, pos = self.peek()
        if kind == "op" and value in "-+":
            self.take()
            inner = self.unary()
            return ("neg", inner, pos) if value == "-" else inner
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek()[0] == "pow":
            self.take()
            kind, value, pos = self.peek()
            if kind != "int":
                self.fail("exponent must be a nonnegative integer")
            self.take()
            node = ("pow", node, int(value), pos)
        return node

    def atom(self):
        kind, value, pos = self.take()
        if kind == "int":
            return ("num", int(value), pos)
        if kind == "var":
            return ("var", value.replace("_", ""), pos)
        if kind == "op" and value == "(":
            node = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return ("paren", node, pos)
        self.fail("expected a number, variable or '('", (kind, value, pos))


def _node_pos(node):
    # leftmost source position covered by the node
    if node[0] in ("add", "sub", "mul", "div", "pow"):
        return _node_pos(node[1])
    return node[-1]


class _Evaluator:
    # numerators are TPoly in nvars + 1 variables, z being the last one
    def __init__(self, text, nvars):
        self.text = text
        self.nvars = nvars
        self.width = nvars + 1

    def fail(self, message, node):
        raise FormSyntaxError(message, self.text, _node_pos(node))

    def const(self, c):
        return TPoly.constant(self.width, c)

    def value(self, node):
        """List of ``(numerator, factors)`` pairs."""
        tag = node[0]
        if tag == "num":
            return [(self.const(node[1]), ())]
        if tag == "var":
            name = node[1]
            if name == "z":
                idx = self.nvars
            else:
                idx = int(name[1:]) - 1
                if not 0 <= idx < self.nvars:
                    self.fail(f"variable {name} outside t1..t{self.nvars}", node)
            return [(TPoly.variable(self.width, idx), ())]
        if tag == "paren":
            return self.value(node[1])
        if tag == "neg":
            return [(-n, f) for n, f in self.value(node[1])]
        if tag == "add":
            return self._collect(self.value(node[1]) + self.value(node[2]))
        if tag == "sub":
            return self._collect(self.value(node[1]) + [(-n, f) for n, f in self.value(node[2])])
        if tag == "mul":
            return self._mul(self.value(node[1]), self.value(node[2]))
        if tag == "pow":
            base = self.value(node[1])
            out = [(self.const(1), ())]
            for _ in range(node[2]):
                out = self._mul(out, base)
            return out
        if tag == "div":
            scalar, factors = self.denominator(node[2])
            inv = 1 if scalar == 1 else 1 / scalar
            return [(n.scale(inv), f + factors) for n, f in self.value(node[1])]
        raise AssertionError(tag)

    @staticmethod
    def _collect(pairs):
        out = {}
        for n, f in pairs:
            key = _merge_factors(f)
            out[key] = out[key] + n if key in out else n
        return [(n, f) for f, n in out.items() if n]

    def _mul(self, a, b):
        return self._collect((n1 * n2, f1 + f2) for n1, f1 in a for n2, f2 in b)

    def denominator(self, node):
        """``(scalar, factors)`` for a node that must be a product of factors."""
        tag = node[0]
        if tag == "num":
            if node[1] == 0:
                self.fail("division by zero", node)
            return Fraction(node[1]), ()
        if tag == "paren" and node[1][0] in ("num", "neg", "mul", "pow", "paren"):
            return self.denominator(node[1])
        if tag == "neg":
            s, f = self.denominator(node[1])
            return -s, f
        if tag == "mul":
            s1, f1 = self.denominator(node[1])
            s2, f2 = self.denominator(node[2])
            return s1 * s2, f1 + f2
        if tag == "pow":
            s, f = self.denominator(node[1])
            k = node[2]
            return s**k, tuple(Factor(x.monomial, x.zpow, x.mult * k) for x in f) if k else ()
        value = self.value(node)
        if len(value) != 1 or value[0][1]:
            self.fail("denominator must be a product of factors (1 - t^a z^k)", node)
        poly = value[0][0]
        if poly.is_constant():
            c = poly.constant_value()
            if not c:
                self.fail("division by zero", node)
            return Fraction(c), ()
        terms = dict(poly.items())
        one = (0,) * self.width
        rest = [e for e in terms if e != one]
        if terms.get(one) != 1 or len(rest) != 1 or terms[rest[0]] != -1 or rest[0][-1] < 1:
            self.fail("denominator factor must look like (1 - t^a z^k) with k >= 1", node)
        exp = rest[0]
        return Fraction(1), (Factor(exp[:-1], exp[-1], 1),)


def _max_t_index(tokens):
    top = 0
    for kind, value, _ in tokens:
        if kind == "var" and value != "z":
            top = max(top, int(value.replace("_", "")[1:]))
    return top


def parse_form(text: str, nvars: int | None = None) -> RationalForm:
    """Parse ``text`` into a :class:`RationalForm` in ``nvars`` t-variables.

    ``nvars`` defaults to the largest ``t`` index that appears.
    """
    parser = _Parser(text)
    ast = parser.parse()
    if nvars is None:
        nvars = _max_t_index(parser.tokens)
    ev = _Evaluator(text, nvars)
    terms = []
    for poly, factors in ev.value(ast):
        if not poly:
            continue
        layers = {}
        for exp, c in poly.items():
            layers.setdefault(exp[-1], {})[exp[:-1]] = c
        top = max(layers)
        coeffs = [TPoly(nvars, layers.get(k, {})) for k in range(top + 1)]
        terms.append(FormTerm(1, GradedSeries(nvars, top, coeffs), factors))
    if not terms:
        terms = [FormTerm(0, GradedSeries.one(nvars, 0))]
    return RationalForm(nvars, terms)
