"""Expression language for torus elements, forms and vector fields.

Grammar (loosest binding first)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/' | '⊗' | '·' | '^^' | '∧' | '⌟') unary | unary)*
    unary   := '-' unary | power
    power   := atom ('^' ['-' | '+'] INT)?
    atom    := INT | name | '(' expr ')' | 'd' '(' expr ')'
             | 'int' '(' expr ',' expr ')' | 'L' '(' expr ',' expr ')'

Names: ``q u v du dv Du Dv ∂_u ∂_v``.  Juxtaposition multiplies, so the
canonical renderings (``du⊗dv·((q) v^1 u^1)``) parse back.  ``*``, ``·``
and ``⊗`` are all the tensor product over the torus (the algebra product on
functions); ``^^`` and ``∧`` are the wedge; ``/`` divides by a scalar or a
single monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .calculus import d, wedge
from .interior import interior, lie_derivative
from .torus import DU, DV, PU, PV, Tensor, invert_monomial, tensor
from .scalars import Q

MUL_OPS = {"*", "/", "⊗", "·", "^^", "∧", "⌟"}
_SINGLE = set("+-*/()^,⊗·∧⌟")
NAMES = {"q", "u", "v", "du", "dv", "Du", "Dv", "∂_u", "∂_v"}
CALLS = {"d": 1, "int": 2, "L": 2}


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected: frozenset = frozenset()):
        self.offset = offset
        self.expected = frozenset(expected)
        text = f"{message} at offset {offset}"
        if expected:
            text += "; expected one of: " + ", ".join(sorted(expected))
        super().__init__(text)


class EvalError(ValueError):
    pass


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple


Expr = Union[Num, Name, Neg, Pow, BinOp, Call]


# ---------------------------------------------------------------------------
# lexer
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    offset: int  # byte offset into the UTF-8 source


def tokenize(text: str) -> list[Token]:
    tokens = []
    i = 0
    byte = 0
    n = len(text)

    def width(s: str) -> int:
        return len(s.encode("utf-8"))

    while i < n:
        ch = text[i]
        if ch.isspace():
            byte += width(ch)
            i += 1
            continue
        start = byte
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tok = text[i:j]
            tokens.append(Token("int", tok, start))
        elif ch == "∂":
            tok = text[i:i + 3]
            if tok not in ("∂_u", "∂_v"):
                raise ParseError("unknown symbol", start, frozenset({"∂_u", "∂_v"}))
            tokens.append(Token("name", tok, start))
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tok = text[i:j]
            if tok not in NAMES and tok not in CALLS:
                raise ParseError(f"unknown name {tok!r}", start, frozenset(NAMES | set(CALLS)))
            tokens.append(Token("name", tok, start))
        elif text.startswith("^^", i):
            tok = "^^"
            tokens.append(Token("op", tok, start))
        elif ch in _SINGLE:
            tok = ch
            tokens.append(Token("op", tok, start))
        else:
            raise ParseError(f"unexpected character {ch!r}", start)
        i += len(tok)
        byte += width(tok)
    tokens.append(Token("end", "", byte))
    return tokens


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def fail(self, expected) -> ParseError:
        t = self.tok
        what = "unexpected end of input" if t.kind == "end" else f"unexpected {t.text!r}"
        return ParseError(what, t.offset, frozenset(expected))

    def expect(self, text: str) -> Token:
        if self.tok.kind == "op" and self.tok.text == text:
            return self.advance()
        raise self.fail({repr(text)})

    def starts_atom(self) -> bool:
        t = self.tok
        return t.kind in ("int", "name") or (t.kind == "op" and t.text == "(")

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            raise self.fail({"operator", "end of input"})
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self.tok.kind == "op" and self.tok.text in ("+", "-"):
            op = self.advance().text
            left = BinOp(op, left, self.term())
        return left

    def term(self) -> Expr:
        left = self.unary()
        while True:
            t = self.tok
            if t.kind == "op" and t.text in MUL_OPS:
                self.advance()
                left = BinOp(t.text, left, self.unary())
            elif self.starts_atom():
                left = BinOp("*", left, self.power())
            else:
                return left

    def unary(self) -> Expr:
        if self.tok.kind == "op" and self.tok.text == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            sign = 1
            if self.tok.kind == "op" and self.tok.text in ("-", "+"):
                sign = -1 if self.advance().text == "-" else 1
            if self.tok.kind != "int":
                raise self.fail({"integer exponent"})
            return Pow(base, sign * int(self.advance().text))
        return base

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return Num(int(t.text))
        if t.kind == "name":
            self.advance()
            if t.text in CALLS:
                self.expect("(")
                args = [self.expr()]
                for _ in range(CALLS[t.text] - 1):
                    self.expect(",")
                    args.append(self.expr())
                self.expect(")")
                return Call(t.text, tuple(args))
            return Name(t.text)
        if t.kind == "op" and t.text == "(":
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        raise self.fail({"integer", "name", "'('", "'-'"})


def parse(text: str) -> Expr:
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

_NAME_VALUES = {
    "q": Tensor.scalar(Q),
    "u": Tensor.monomial(0, 1),
    "v": Tensor.monomial(1, 0),
    "du": Tensor.letter(DU),
    "dv": Tensor.letter(DV),
    "Du": Tensor.letter(PU),
    "Dv": Tensor.letter(PV),
    "∂_u": Tensor.letter(PU),
    "∂_v": Tensor.letter(PV),
}


def _divide(a: Tensor, b: Tensor) -> Tensor:
    if b.is_zero():
        raise EvalError("division by zero")
    if len(b.terms) != 1 or not b.is_algebra():
        raise EvalError("can only divide by a scalar or a single monomial")
    return tensor(a, invert_monomial(b))


def evaluate(e: Expr) -> Tensor:
    if isinstance(e, Num):
        return Tensor.scalar(e.value)
    if isinstance(e, Name):
        return _NAME_VALUES[e.name]
    if isinstance(e, Neg):
        return -evaluate(e.operand)
    if isinstance(e, Pow):
        base = evaluate(e.base)
        try:
            return base ** e.exponent
        except ValueError as exc:
            raise EvalError(str(exc)) from exc
    if isinstance(e, BinOp):
        a, b = evaluate(e.left), evaluate(e.right)
        try:
            if e.op == "+":
                return a + b
            if e.op == "-":
                return a - b
            if e.op == "/":
                return _divide(a, b)
            if e.op in ("^^", "∧"):
                return wedge(a, b)
            if e.op == "⌟":
                return interior(a, b)
            return tensor(a, b)
        except ValueError as exc:
            if isinstance(exc, EvalError):
                raise
            raise EvalError(str(exc)) from exc
    if isinstance(e, Call):
        args = [evaluate(a) for a in e.args]
        try:
            if e.func == "d":
                return d(args[0])
            if e.func == "int":
                return interior(args[0], args[1])
            return lie_derivative(args[0], args[1])
        except ValueError as exc:
            raise EvalError(str(exc)) from exc
    raise TypeError(f"not an expression node: {e!r}")


def eval_text(text: str) -> Tensor:
    return evaluate(parse(text))


def parse_scalar(text: str):
    """Parse a constant expression in q to a ScalarQ."""
    value = eval_text(text)
    try:
        return value.scalar_value()
    except ValueError as exc:
        raise EvalError(f"{text!r} is not a scalar expression in q") from exc
