"""Surface syntax for the CLI: a small expression language over forms.

Grammar (precedence ^ above * above unary - above binary +/-):

    expr    := neg (("+" | "-") neg)*
    neg     := "-"* prod
    prod    := power ("*" power)*
    power   := atom ("^" ("-"? INT))?
    atom    := NUM | FRAC | IDENT | CALL | "(" expr ")"
    CALL    := FNAME "(" expr ("," expr)* ")"

Identifiers: a b c d bm b0 bp e+ e- tau q s i.  Functions: d del dbar star
hodge L Lam cnt (one argument), g inner (two), integral (one).  "*" is the
noncommutative product (wedge on forms) and is left associative.  Every
value is a form; scalars and base algebra elements are 0-form specials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import hermitian, lefschetz
from . import qalgebra as qa
from .calculus import Calculus, F_EM, F_EP, F_ONE, F_TAU, FRAME_NAMES, Form
from .scalars import ONE, Scalar, ZERO


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int,
                 expected: tuple[str, ...] = ()):
        self.line = line
        self.col = col
        self.expected = expected
        loc = f"line {line}, column {col}"
        if expected:
            message = f"{message} (expected one of: {', '.join(expected)})"
        super().__init__(f"{loc}: {message}")


class EvalError(ValueError):
    pass


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple["Node", ...]


Node = Union[Num, Sym, BinOp, Neg, Pow, Call]

FUNCTIONS = {"d": 1, "del": 1, "dbar": 1, "star": 1, "hodge": 1, "L": 1,
             "Lam": 1, "cnt": 1, "integral": 1, "g": 2, "inner": 2}
IDENTIFIERS = ("a", "b", "c", "d", "bm", "b0", "bp", "e+", "e-", "tau",
               "q", "s", "i")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    toks: list[Token] = []
    line, col = 1, 1
    ix = 0
    n = len(text)
    while ix < n:
        ch = text[ix]
        if ch == "\n":
            line += 1
            col = 1
            ix += 1
            continue
        if ch.isspace():
            ix += 1
            col += 1
            continue
        if ch.isdigit():
            start = ix
            while ix < n and text[ix].isdigit():
                ix += 1
            # fraction literal p/q
            if ix < n and text[ix] == "/" and ix + 1 < n and text[ix + 1].isdigit():
                ix += 1
                while ix < n and text[ix].isdigit():
                    ix += 1
            lex = text[start:ix]
            toks.append(Token("num", lex, line, col))
            col += ix - start
            continue
        if ch.isalpha():
            start = ix
            while ix < n and (text[ix].isalnum() or text[ix] == "_"):
                ix += 1
            lex = text[start:ix]
            # e+ / e- frame identifiers
            if lex == "e" and ix < n and text[ix] in "+-":
                lex += text[ix]
                ix += 1
            toks.append(Token("ident", lex, line, col))
            col += len(lex)
            continue
        if ch in "+-*^(),":
            toks.append(Token(ch, ch, line, col))
            ix += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    toks.append(Token("end", "", line, col))
    return toks


class Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.toks[self.pos]

    def take(self, kind: str | None = None) -> Token:
        t = self.toks[self.pos]
        if kind is not None and t.kind != kind:
            raise ParseError(f"unexpected {t.text or 'end of input'!r}",
                             t.line, t.col, expected=(kind,))
        self.pos += 1
        return t

    def parse(self) -> Node:
        node = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"trailing input {t.text!r}", t.line, t.col,
                             expected=("end of input",))
        return node

    def expr(self) -> Node:
        node = self.neg()
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            rhs = self.neg()
            node = BinOp(op, node, rhs)
        return node

    def neg(self) -> Node:
        if self.peek().kind == "-":
            self.take()
            return Neg(self.neg())
        return self.prod()

    def prod(self) -> Node:
        node = self.power()
        while self.peek().kind == "*":
            self.take()
            node = BinOp("*", node, self.power())
        return node

    def power(self) -> Node:
        node = self.atom()
        if self.peek().kind == "^":
            self.take()
            sign = 1
            if self.peek().kind == "-":
                self.take()
                sign = -1
            t = self.take("num")
            if "/" in t.text:
                raise ParseError("exponent must be an integer", t.line, t.col)
            node = Pow(node, sign * int(t.text))
        return node

    def atom(self) -> Node:
        t = self.peek()
        if t.kind == "num":
            self.take()
            if "/" in t.text:
                p, q = t.text.split("/")
                return Num(Fraction(int(p), int(q)))
            return Num(Fraction(int(t.text)))
        if t.kind == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if t.kind == "ident":
            self.take()
            name = t.text
            if self.peek().kind == "(":
                if name not in FUNCTIONS:
                    raise ParseError(f"unknown function {name!r}", t.line,
                                     t.col, expected=tuple(sorted(FUNCTIONS)))
                self.take("(")
                args = [self.expr()]
                while self.peek().kind == ",":
                    self.take()
                    args.append(self.expr())
                self.take(")")
                if len(args) != FUNCTIONS[name]:
                    raise ParseError(
                        f"{name} takes {FUNCTIONS[name]} argument(s), "
                        f"got {len(args)}", t.line, t.col)
                return Call(name, tuple(args))
            if name not in IDENTIFIERS:
                raise ParseError(f"unknown identifier {name!r}", t.line, t.col,
                                 expected=IDENTIFIERS)
            return Sym(name)
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.line,
                         t.col, expected=("number", "identifier", "("))


def parse(text: str) -> Node:
    return Parser(text).parse()


# ---------------------------------------------------------------------------
# Evaluation.
# ---------------------------------------------------------------------------


def _sym_value(calc: Calculus, name: str) -> Form:
    table = {
        "a": Form.from_function(qa.A),
        "b": Form.from_function(qa.B),
        "c": Form.from_function(qa.C),
        "d": Form.from_function(qa.D),
        "bm": Form.from_function(qa.B_MINUS),
        "b0": Form.from_function(qa.B_ZERO),
        "bp": Form.from_function(qa.B_PLUS),
        "e+": calc.e_plus(),
        "e-": calc.e_minus(),
        "tau": calc.tau(),
        "q": Form.from_scalar(Scalar.q_power(1)),
        "s": Form.from_scalar(Scalar.s_power(1)),
        "i": Form.from_scalar(Scalar.from_gauss(0, 1)),
    }
    return table[name]


def _as_scalar(w: Form) -> Scalar | None:
    for ix in (F_EP, F_EM, F_TAU):
        if not w.c[ix].is_zero():
            return None
    comp = w.c[F_ONE]
    if comp.is_zero():
        return ZERO
    if set(comp.terms) == {qa.MONO_ONE}:
        return comp.coefficient(qa.MONO_ONE)
    return None


def evaluate(node: Node, calc: Calculus) -> Form:
    if isinstance(node, Num):
        return Form.from_scalar(Scalar.from_rational(node.value))
    if isinstance(node, Sym):
        return _sym_value(calc, node.name)
    if isinstance(node, Neg):
        return evaluate(node.arg, calc).scale(Scalar.from_rational(-1))
    if isinstance(node, BinOp):
        left = evaluate(node.left, calc)
        right = evaluate(node.right, calc)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return calc.wedge(left, right)
    if isinstance(node, Pow):
        base = evaluate(node.base, calc)
        if node.exponent >= 0:
            out = Form.from_scalar(ONE)
            for _ in range(node.exponent):
                out = calc.wedge(out, base)
            return out
        s = _as_scalar(base)
        if s is None or s.is_zero():
            raise EvalError("negative powers require a nonzero scalar base")
        return Form.from_scalar(s ** node.exponent)
    if isinstance(node, Call):
        args = [evaluate(a, calc) for a in node.args]
        return _apply(node.fn, args, calc)
    raise EvalError(f"cannot evaluate {node!r}")


def _apply(fn: str, args: list[Form], calc: Calculus) -> Form:
    if fn == "d":
        return calc.d(args[0])
    if fn == "del":
        return calc.del_(args[0])
    if fn == "dbar":
        return calc.dbar(args[0])
    if fn == "star":
        return calc.form_star(args[0])
    if fn == "hodge":
        return calc.hodge(args[0])
    if fn == "L":
        return lefschetz.lefschetz_L(calc)(args[0])
    if fn == "Lam":
        return lefschetz.lefschetz_dual(calc)(args[0])
    if fn == "cnt":
        return lefschetz.counting(calc)(args[0])
    if fn == "integral":
        return Form.from_scalar(hermitian.integral(calc, args[0]))
    if fn == "g":
        return Form.from_function(hermitian.metric(calc, args[0], args[1]))
    if fn == "inner":
        return Form.from_scalar(hermitian.inner(calc, args[0], args[1]))
    raise EvalError(f"unknown function {fn!r}")


# ---------------------------------------------------------------------------
# Canonical printing.  parse(print(v)) evaluates back to v.
# ---------------------------------------------------------------------------


def render_form(w: Form) -> str:
    bits: list[str] = []
    for ix, comp in enumerate(w.c):
        if comp.is_zero():
            continue
        for m, s in comp.sorted_terms():
            bits.append(_render_term(ix, m, s))
    if not bits:
        return "0"
    out = bits[0]
    for t in bits[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def _render_term(ix: int, m: qa.Monomial, s: Scalar) -> str:
    factors: list[str] = []
    mono = qa.mono_str(m)
    if mono != "1":
        factors.append(mono)
    if ix != F_ONE:
        factors.append(FRAME_NAMES[ix])
    ss = s.render()
    if not factors:
        return ss
    if ss == "1":
        return "*".join(factors)
    if ss == "-1":
        return "-" + "*".join(factors)
    if " + " in ss or " - " in ss:
        ss = f"({ss})"
    return "*".join([ss] + factors)


def eval_text(text: str, calc: Calculus) -> tuple[Form, str]:
    node = parse(text)
    value = evaluate(node, calc)
    return value, render_form(value)
