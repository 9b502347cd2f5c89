"""Text grammar for scalars and algebra elements.

Grammar (standard precedence, power > product > sum, explicit ``*`` only):

    expr     := term (('+' | '-') term)*
    term     := unary (('*' | '/') unary)*
    unary    := '-' unary | '+' unary | power
    power    := atom ('^' exponent)?
    exponent := '-'? INT | '(' '-'? INT ')'
    atom     := INT | NAME | '(' expr ')'

Names resolve at evaluation time: ``r``, ``s``, ``xi``, ``eta``, ``zeta``
are scalars, everything else must be a generator of the target algebra.
Parsing and printing are exact inverses on printed output: printing a
parsed tree, reparsing it, and printing again yields the same string.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .ratfield import RatFunc
from .ore import OreElement

__all__ = ["ParseError", "EvalError", "parse", "to_text",
           "eval_scalar", "eval_element", "SCALAR_NAMES", "parse_scalar"]


class ParseError(ValueError):
    """Syntax error with position and expected-token information."""

    def __init__(self, message, pos, text):
        super().__init__(f"{message} at column {pos + 1}: "
                         f"{text[:pos]}>>>{text[pos:]}")
        self.pos = pos


class EvalError(ValueError):
    """The expression does not denote a value in the requested algebra."""


# -- AST --------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|([-+*/^()]))")


def _tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
            break
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        else:
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.at = 0

    def peek(self):
        return self.tokens[self.at]

    def take(self):
        tok = self.tokens[self.at]
        self.at += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos, self.text)
        return self.take()

    def fail(self, expected):
        _, _, pos = self.peek()
        raise ParseError(f"expected {expected}", pos, self.text)

    def parse(self):
        node = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ParseError("trailing input", pos, self.text)
        return node

    def expr(self):
        node = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                node = BinOp(val, node, self.term())
            else:
                return node

    def term(self):
        node = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                node = BinOp(val, node, self.unary())
            else:
                return node

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            arg = self.unary()
            return arg if val == "+" else Neg(arg)
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            return Pow(base, self.exponent())
        return base

    def exponent(self):
        kind, val, pos = self.peek()
        if kind == "op" and val == "(":
            self.take()
            e = self._signed_int()
            self.expect_op(")")
            return e
        return self._signed_int()

    def _signed_int(self):
        kind, val, pos = self.peek()
        sign = 1
        if kind == "op" and val == "-":
            self.take()
            sign = -1
            kind, val, pos = self.peek()
        if kind != "int":
            self.fail("an integer exponent")
        self.take()
        return sign * val

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return Num(val)
        if kind == "name":
            return Sym(val)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError("expected a number, a name, or '('", pos, self.text)


def parse(text):
    """Parse ``text`` into an expression tree."""
    return _Parser(text).parse()


# -- printing -----------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "neg": 1, "pow": 3, "atom": 4}


def _prec(node):
    if isinstance(node, (Num, Sym)):
        return _PREC["atom"]
    if isinstance(node, Pow):
        return _PREC["pow"]
    if isinstance(node, Neg):
        return _PREC["neg"]
    return _PREC[node.op]


def to_text(node):
    """Render an expression tree; parse(to_text(t)) prints back identically."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Neg):
        inner = to_text(node.arg)
        if _prec(node.arg) <= _PREC["neg"]:
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(node, Pow):
        base = to_text(node.base)
        if _prec(node.base) < _PREC["atom"]:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, BinOp):
        lv, rv = to_text(node.left), to_text(node.right)
        p = _prec(node)
        if _prec(node.left) < p:
            lv = f"({lv})"
        # subtraction and division do not associate on the right; a negation
        # on the right is parenthesized so '- -' never appears
        rp = _prec(node.right)
        if rp < p or (rp == p and node.op in "-/") or isinstance(node.right, Neg):
            rv = f"({rv})"
        return f"{lv} {node.op} {rv}" if node.op in "+-" else f"{lv}{node.op}{rv}"
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluation ----------------------------------------------------------------

def _scalar_names():
    from . import g2
    return {
        "r": RatFunc.monomial(1, 1, 0),
        "s": RatFunc.monomial(1, 0, 1),
        "xi": g2.xi,
        "eta": g2.eta,
        "zeta": g2.zeta,
    }


SCALAR_NAMES = None  # populated lazily to avoid an import cycle


def _constants():
    global SCALAR_NAMES
    if SCALAR_NAMES is None:
        SCALAR_NAMES = _scalar_names()
    return SCALAR_NAMES


def eval_scalar(node, constants=None):
    """Evaluate a tree as an element of Q(r, s)."""
    constants = constants or _constants()
    if isinstance(node, Num):
        return RatFunc.const(node.value)
    if isinstance(node, Sym):
        try:
            return constants[node.name]
        except KeyError:
            raise EvalError(f"{node.name!r} is not a scalar name") from None
    if isinstance(node, Neg):
        return -eval_scalar(node.arg, constants)
    if isinstance(node, Pow):
        return eval_scalar(node.base, constants) ** node.exponent
    if isinstance(node, BinOp):
        a = eval_scalar(node.left, constants)
        b = eval_scalar(node.right, constants)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if b.is_zero():
            raise EvalError("division by zero scalar")
        return a / b
    raise TypeError(f"not an expression node: {node!r}")


def parse_scalar(text, constants=None):
    return eval_scalar(parse(text), constants)


def eval_element(node, alg, genmap, constants=None):
    """Evaluate a tree as an element of ``alg``.

    ``genmap`` sends generator names to 1-based indices.  Scalars and
    elements mix freely; division requires a scalar divisor and negative
    powers require an invertible monomial base.
    """
    constants = constants or _constants()
    val = _eval_mixed(node, alg, genmap, constants)
    if isinstance(val, RatFunc):
        return alg.scalar(val)
    return val


def _eval_mixed(node, alg, genmap, constants):
    if isinstance(node, Num):
        return RatFunc.const(node.value)
    if isinstance(node, Sym):
        if node.name in genmap:
            return alg.gen(genmap[node.name])
        if node.name in constants:
            return constants[node.name]
        raise EvalError(f"unknown name {node.name!r} "
                        f"(generators here: {', '.join(sorted(genmap))})")
    if isinstance(node, Neg):
        return -_eval_mixed(node.arg, alg, genmap, constants)
    if isinstance(node, Pow):
        base = _eval_mixed(node.base, alg, genmap, constants)
        if isinstance(base, RatFunc):
            if base.is_zero() and node.exponent < 0:
                raise EvalError("negative power of zero")
            return base ** node.exponent
        return base ** node.exponent
    if isinstance(node, BinOp):
        a = _eval_mixed(node.left, alg, genmap, constants)
        b = _eval_mixed(node.right, alg, genmap, constants)
        if node.op == "+":
            return _promote(a, b, alg, lambda x, y: x + y)
        if node.op == "-":
            return _promote(a, b, alg, lambda x, y: x - y)
        if node.op == "*":
            if isinstance(a, RatFunc) and isinstance(b, OreElement):
                return b.scale(a)
            return a * b
        if not isinstance(b, RatFunc):
            raise EvalError("division by an algebra element")
        if b.is_zero():
            raise EvalError("division by zero scalar")
        if isinstance(a, RatFunc):
            return a / b
        return a.scale(b.inverse())
    raise TypeError(f"not an expression node: {node!r}")


def _promote(a, b, alg, op):
    if isinstance(a, RatFunc) and isinstance(b, RatFunc):
        return op(a, b)
    if isinstance(a, RatFunc):
        a = alg.scalar(a)
    if isinstance(b, RatFunc):
        b = alg.scalar(b)
    return op(a, b)
