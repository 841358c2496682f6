# csformula/hecke/term_language.py

"""
Text form of Bernstein elements.

Grammar (whitespace ignored):

    expr   := ["+"|"-"] term (("+"|"-") term)*
    term   := factor ("*" factor)*
    factor := atom ["^" ["-"] INT]
    atom   := NUMBER | "v" | "q(sK)" | "qJ(sK)" | "T[sK]" | "th[a,b,...]"
            | "(" expr ")" | "-" atom

NUMBER is an integer or n/d. Products are taken in the order written, so
"th[1]*T[s1]" and "T[s1]*th[1]" are different elements. Negative powers are
only allowed on v.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple

from csformula.exceptions import TermSyntaxError
from csformula.hecke.bernstein import BernsteinElement, HeckeAlgebra
from csformula.hecke.parameters import Param

TOKEN = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<number>\d+(?:/\d+)?)
  | (?P<qj>q(?P<j>\d+)\(s(?P<qj_s>\d+)\))
  | (?P<q>q\(s(?P<q_s>\d+)\))
  | (?P<T>T\[s(?P<T_s>\d+)\])
  | (?P<theta>th\[(?P<coords>\s*-?\d+(?:\s*,\s*-?\d+)*\s*)\])
  | (?P<v>v)
  | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)

Token = Tuple[str, object]


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        match = TOKEN.match(text, pos)
        if not match:
            raise TermSyntaxError(f"unexpected character {text[pos]!r} at position {pos} in '{text}'")
        kind = match.lastgroup
        pos = match.end()
        if kind == "space":
            continue
        if kind == "number":
            tokens.append(("number", Fraction(match.group("number"))))
        elif kind == "qj":
            tokens.append(("qj", (int(match.group("j")), int(match.group("qj_s")))))
        elif kind == "q":
            tokens.append(("q", int(match.group("q_s"))))
        elif kind == "T":
            tokens.append(("T", int(match.group("T_s"))))
        elif kind == "theta":
            tokens.append(("theta", tuple(int(x) for x in match.group("coords").split(","))))
        elif kind == "v":
            tokens.append(("v", None))
        else:
            tokens.append(("op", match.group("op")))
    return tokens


class _Parser:
    def __init__(self, algebra: HeckeAlgebra, text: str):
        self.algebra = algebra
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else ("end", None)

    def take(self) -> Token:
        token = self.peek()
        self.pos += 1
        return token

    def expect_op(self, op: str) -> None:
        kind, value = self.take()
        if kind != "op" or value != op:
            raise TermSyntaxError(f"expected '{op}' in '{self.text}', found {value!r}")

    def parse(self) -> BernsteinElement:
        if not self.tokens:
            raise TermSyntaxError("empty expression")
        result = self.expr()
        if self.peek()[0] != "end":
            raise TermSyntaxError(f"trailing input after position {self.pos} in '{self.text}'")
        return result

    def expr(self) -> BernsteinElement:
        negate = False
        if self.peek() in (("op", "+"), ("op", "-")):
            negate = self.take()[1] == "-"
        result = self.term()
        if negate:
            result = -result
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            right = self.term()
            result = result + right if op == "+" else result - right
        return result

    def term(self) -> BernsteinElement:
        result = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> BernsteinElement:
        base_token = self.peek()
        base = self.atom()
        if self.peek() != ("op", "^"):
            return base
        self.take()
        negative = False
        if self.peek() == ("op", "-"):
            self.take()
            negative = True
        kind, value = self.take()
        if kind != "number" or Fraction(value).denominator != 1:
            raise TermSyntaxError(f"exponent must be an integer in '{self.text}'")
        exponent = -int(value) if negative else int(value)
        if base_token[0] == "v":
            return self.algebra.scalar(self.algebra.ring.v(exponent))
        if exponent < 0:
            raise TermSyntaxError("negative powers are only allowed on v")
        result = self.algebra.one()
        for _ in range(exponent):
            result = result * base
        return result

    def atom(self) -> BernsteinElement:
        A = self.algebra
        kind, value = self.take()
        if kind == "number":
            return A.scalar(Param.constant(value))
        if kind == "v":
            return A.scalar(A.ring.v())
        if kind == "q":
            return A.scalar(A.ring.q(self._generator(value)))
        if kind == "qj":
            j, s = value
            return A.scalar(A.ring.q_j(j, self._generator(s)))
        if kind == "T":
            return A.T_simple(self._generator(value))
        if kind == "theta":
            return A.theta(value)
        if (kind, value) == ("op", "("):
            inner = self.expr()
            self.expect_op(")")
            return inner
        if (kind, value) == ("op", "-"):
            return -self.atom()
        raise TermSyntaxError(f"unexpected token {value!r} in '{self.text}'")

    def _generator(self, k: int) -> int:
        A = self.algebra
        A._check_simple(k - 1)
        return k - 1


def parse_element(algebra: HeckeAlgebra, text: str) -> BernsteinElement:
    """
    Parse the text form into a normal-form Bernstein element.
    """
    return _Parser(algebra, text).parse().normal_form()


def format_element(element: BernsteinElement) -> str:
    return str(element)
