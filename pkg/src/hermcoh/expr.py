"""A small expression language over the cohomology rings.

Grammar (``^`` binds tighter than ``*``, which binds tighter than ``+``/``-``)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" INT)?
    atom   := INT | NAME | "s[" INT ("," INT)* "]" | "s[]" | "(" expr ")"

Subtraction and unary minus are accepted only for integer coefficients.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .chern import BundleOverGrassmannian, direct_sum_power, grassmannian_presentation
from .polyring import GF2, ZZ, GradedPolynomial, GradedVariable, PolyRing, change_ring, poly_mul, to_text
from .schubert import Grassmannian, chern_of_tautological, jacobi_trudi, normalize_partition
from .schubert import to_text as schubert_text


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ExprEvalError(ValueError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


_TOKEN = re.compile(r"\s*(?:(?P<schubert>s\[[^\]]*\])|(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^()]))")


def tokenize(src: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            ws = len(src[pos:]) - len(src[pos:].lstrip())
            raise ExprSyntaxError(f"unexpected character {src[pos + ws]!r}", pos + ws)
        kind = m.lastgroup
        start = m.start(kind)
        out.append(Token(kind, m.group(kind), start))
        pos = m.end()
    out.append(Token("end", "", len(src)))
    return out


# AST nodes are tuples: ("int", n), ("var", name), ("schubert", partition),
# ("neg", x), ("pow", x, n), (op, a, b) for op in + - *

_BINARY = {"+": 1, "-": 1, "*": 2}


class Parser:
    def __init__(self, src: str, allow_minus: bool):
        self.tokens = tokenize(src)
        self.i = 0
        self.allow_minus = allow_minus

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def _minus_check(self, t: Token):
        if not self.allow_minus:
            raise ExprSyntaxError("subtraction is not available with mod-2 coefficients", t.pos)

    def parse(self):
        if self.tok.kind == "end":
            raise ExprSyntaxError("empty expression", self.tok.pos)
        node = self.binary(1)
        if self.tok.kind != "end":
            raise ExprSyntaxError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def binary(self, min_prec: int):
        left = self.unary()
        while self.tok.kind == "op" and _BINARY.get(self.tok.text, 0) >= min_prec:
            op = self.take()
            if op.text == "-":
                self._minus_check(op)
            right = self.binary(_BINARY[op.text] + 1)
            left = (op.text, left, right)
        return left

    def unary(self):
        if self.tok.kind == "op" and self.tok.text == "-":
            self._minus_check(self.take())
            return ("neg", self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.take()
            t = self.take()
            if t.kind != "int":
                raise ExprSyntaxError("exponent must be a nonnegative integer", t.pos)
            base = ("pow", base, int(t.text))
            if self.tok.kind == "op" and self.tok.text == "^":
                raise ExprSyntaxError("chained exponents need parentheses", self.tok.pos)
        return base

    def atom(self):
        t = self.take()
        if t.kind == "int":
            return ("int", int(t.text))
        if t.kind == "name":
            return ("var", t.text)
        if t.kind == "schubert":
            body = t.text[2:-1].strip()
            try:
                parts = [int(x) for x in body.split(",")] if body else []
                return ("schubert", normalize_partition(parts))
            except ValueError as exc:
                raise ExprSyntaxError(f"bad partition {t.text!r}: {exc}", t.pos) from None
        if t.kind == "op" and t.text == "(":
            node = self.binary(1)
            close = self.take()
            if close.text != ")":
                raise ExprSyntaxError("expected ')'", close.pos)
            return node
        if t.kind == "end":
            raise ExprSyntaxError("unexpected end of expression", t.pos)
        raise ExprSyntaxError(f"unexpected {t.text!r}", t.pos)


def parse(src: str, allow_minus: bool = False):
    return Parser(src, allow_minus).parse()


def evaluate_ast(node, algebra):
    kind = node[0]
    if kind == "int":
        return algebra.const(node[1])
    if kind == "var":
        return algebra.var(node[1])
    if kind == "schubert":
        return algebra.schubert(node[1])
    if kind == "neg":
        return algebra.neg(evaluate_ast(node[1], algebra))
    if kind == "pow":
        return algebra.pow(evaluate_ast(node[1], algebra), node[2])
    a, b = evaluate_ast(node[1], algebra), evaluate_ast(node[2], algebra)
    if kind == "+":
        return algebra.add(a, b)
    if kind == "-":
        return algebra.add(a, algebra.neg(b))
    return algebra.mul(a, b)


# algebras

K, N, COPIES = 3, 5, 5


class PolynomialAlgebra:
    """Values are raw polynomials in ``c1, c2, c3`` (and ``h``); reduced at the end."""

    def __init__(self, ring: PolyRing, segre_total: GradedPolynomial):
        self.ring = ring
        self.segre = segre_total

    def const(self, n):
        return self.ring.constant(n)

    def var(self, name):
        if name not in self.ring.names:
            raise ExprEvalError(f"unknown variable {name!r}; available: {', '.join(self.ring.names)}")
        return self.ring.gen(name)

    def schubert(self, la):
        g = Grassmannian(K, N)
        if not g.contains(la):
            return self.ring.zero
        out = self.ring.zero
        for rows, coeff in jacobi_trudi(la):
            term = self.ring.constant(coeff)
            for r in rows:
                term = poly_mul(term, self.segre.homogeneous_part(r), self.ring.truncation)
            out = out + term
        return out

    def neg(self, a):
        return -a

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def pow(self, a, n):
        return a ** n


class SchubertAlgebra:
    def __init__(self, modulus: int | None):
        self.g = Grassmannian(K, N)
        self.modulus = modulus

    def const(self, n):
        return self.g.one(self.modulus) * n

    def var(self, name):
        m = re.fullmatch(r"c(\d+)", name)
        if not m or not 1 <= int(m.group(1)) <= K:
            raise ExprEvalError(f"unknown variable {name!r}; available: c1, c2, c3, s[...]")
        return chern_of_tautological(self.g, int(m.group(1)), self.modulus)

    def schubert(self, la):
        return self.g.schubert(la, modulus=self.modulus)

    def neg(self, a):
        return -a

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def pow(self, a, n):
        return a ** n


@lru_cache(maxsize=None)
def _gr35(coefficients):
    return grassmannian_presentation(K, N, coefficients)


@lru_cache(maxsize=None)
def _section3():
    from .pipeline import Section3
    return Section3()


@lru_cache(maxsize=None)
def _ps5_zz():
    G = _gr35(ZZ)
    S5 = direct_sum_power(G.S, COPIES)
    ring = PolyRing(list(G.raw_ring.variables) + [GradedVariable("h", 1)], ZZ, G.dim + S5.rank - 1)
    return ring, BundleOverGrassmannian.from_bundle(S5, Grassmannian(K, N))


RINGS = ("gr35", "ps5", "schubert")
COEFFS = {"z2": GF2, "z": ZZ}


def evaluate(src: str, ring: str = "gr35", coeff: str = "z2") -> str:
    """Parse ``src``, evaluate it in the chosen ring and return the canonical text of the result."""
    if ring not in RINGS:
        raise ExprEvalError(f"unknown ring {ring!r}")
    if coeff not in COEFFS:
        raise ExprEvalError(f"unknown coefficients {coeff!r}")
    K_ = COEFFS[coeff]
    ast = parse(src, allow_minus=K_ is ZZ)
    if ring == "schubert":
        return schubert_text(evaluate_ast(ast, SchubertAlgebra(None if K_ is ZZ else 2)))
    if ring == "gr35":
        G = _gr35(K_)
        alg = PolynomialAlgebra(G.raw_ring, G.Q.total)
        value = evaluate_ast(ast, alg)
        if K_ is GF2:
            return to_text(G.reduce(value))
        return schubert_text(G.schubert(value))
    if K_ is GF2:
        s3 = _section3()
        ring_ = s3.bundle.ring
        alg = PolynomialAlgebra(ring_, change_ring(s3.grassmannian.Q.total, ring_))
        return to_text(s3.bundle.quotient.reduce(evaluate_ast(ast, alg)))
    ring_, oracle = _ps5_zz()
    alg = PolynomialAlgebra(ring_, change_ring(_gr35(ZZ).Q.total, ring_))
    return oracle.to_text(oracle.evaluate(evaluate_ast(ast, alg)))
