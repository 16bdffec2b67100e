"""Expression mini-language for spectral permutations (p = 3).

Atoms: I, P01, P12, N, X, XT, Z, Zc (Zc is the conjugate of Z).
Forms:  kron(a,b)   compose(a,b)   blockdiag(a,b,c)   diag(e0,...,e8)
        w^k*expr    -expr
Diagonal entries are root literals: 1, w, w^2, optionally negated.

parse() builds an AST, evaluate() turns it into a GenPerm, render() is the
canonical writer (parse ∘ render ∘ parse is the identity), and
conjugate_expr() computes W = p^(-n)·C·P·C* structurally: atom images come
from the conjugation table, Kronecker/product/rotation nodes combine
factor-wise, and block-diagonal nodes use the additive decomposition.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .cyclotomic import RootScalar
from .genperm import (
    DenseCycMatrix,
    GenPerm,
    as_dense,
    block_diag,
    compose,
    conjugate_blockdiag,
    conjugate_by_c,
    conjugate_table,
    gamma,
    kron,
    pauli_z,
    scale,
    _downcast,
)

ATOM_NAMES = ("I", "P01", "P12", "N", "X", "XT", "Z", "Zc")


class ExprParseError(ValueError):
    pass


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Rot:
    sign: int
    k: int
    child: "Expr"


@dataclass(frozen=True)
class Kron:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Compose:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class BlockDiag:
    items: tuple


@dataclass(frozen=True)
class Diag:
    entries: tuple  # of RootScalar


Expr = Atom | Rot | Kron | Compose | BlockDiag | Diag

_TOKENS = re.compile(r"\s*(w\^[0-9]+|[A-Za-z][A-Za-z0-9]*|[0-9]+|[(),*^-])")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[str] = []
        pos = 0
        while pos < len(text):
            m = _TOKENS.match(text, pos)
            if m is None:
                raise ExprParseError(f"bad character at position {pos} in {text!r}")
            self.tokens.append(m.group(1))
            pos = m.end()
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def pop(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ExprParseError(f"unexpected end of expression in {self.text!r}")
        self.i += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.pop()
        if got != tok:
            raise ExprParseError(f"expected {tok!r}, got {got!r} in {self.text!r}")

    def parse(self) -> Expr:
        node = self.parse_expr()
        if self.peek() is not None:
            raise ExprParseError(f"trailing input {self.peek()!r} in {self.text!r}")
        return node

    def parse_expr(self) -> Expr:
        tok = self.peek()
        if tok == "-":
            self.pop()
            child = self.parse_expr()
            return _fold_rot(-1, 0, child)
        if tok is not None and (tok == "w" or tok.startswith("w^")):
            save = self.i
            self.pop()
            k = 1 if tok == "w" else int(tok[2:])
            if self.peek() == "*":
                self.pop()
                child = self.parse_expr()
                return _fold_rot(1, k, child)
            self.i = save  # bare root literal is only legal inside diag(...)
            raise ExprParseError(f"dangling rotation {tok!r} in {self.text!r}")
        return self.parse_call()

    def parse_call(self) -> Expr:
        tok = self.pop()
        if tok == "kron" or tok == "compose":
            self.expect("(")
            left = self.parse_expr()
            self.expect(",")
            right = self.parse_expr()
            self.expect(")")
            return Kron(left, right) if tok == "kron" else Compose(left, right)
        if tok == "blockdiag":
            self.expect("(")
            items = [self.parse_expr()]
            while self.peek() == ",":
                self.pop()
                items.append(self.parse_expr())
            self.expect(")")
            return BlockDiag(tuple(items))
        if tok == "diag":
            self.expect("(")
            entries = [self.parse_root()]
            while self.peek() == ",":
                self.pop()
                entries.append(self.parse_root())
            self.expect(")")
            return Diag(tuple(entries))
        if tok in ATOM_NAMES:
            return Atom(tok)
        raise ExprParseError(f"unknown name {tok!r} in {self.text!r}")

    def parse_root(self) -> RootScalar:
        sign = 1
        tok = self.pop()
        if tok == "-":
            sign = -1
            tok = self.pop()
        if tok == "1":
            return RootScalar(3, sign, 0)
        if tok == "w":
            if self.peek() == "^":
                self.pop()
                return RootScalar(3, sign, int(self.pop()))
            return RootScalar(3, sign, 1)
        if tok.startswith("w^"):
            return RootScalar(3, sign, int(tok[2:]))
        raise ExprParseError(f"bad diagonal entry {tok!r} in {self.text!r}")


def _fold_rot(sign: int, k: int, child: Expr) -> Expr:
    if isinstance(child, Rot):
        return Rot(sign * child.sign, (k + child.k) % 3, child.child)
    return Rot(sign, k % 3, child)


def parse(text: str) -> Expr:
    return _Parser(text).parse()


def _render_root(r: RootScalar) -> str:
    body = "1" if r.exponent == 0 else ("w" if r.exponent == 1 else f"w^{r.exponent}")
    return ("-" if r.sign < 0 else "") + body


def render(node: Expr) -> str:
    if isinstance(node, Atom):
        return node.name
    if isinstance(node, Rot):
        prefix = "-" if node.sign < 0 else ""
        if node.k:
            prefix += f"w^{node.k}*"
        return prefix + render(node.child)
    if isinstance(node, Kron):
        return f"kron({render(node.left)},{render(node.right)})"
    if isinstance(node, Compose):
        return f"compose({render(node.left)},{render(node.right)})"
    if isinstance(node, BlockDiag):
        return f"blockdiag({','.join(render(i) for i in node.items)})"
    if isinstance(node, Diag):
        return f"diag({','.join(_render_root(e) for e in node.entries)})"
    raise TypeError(f"not an expression node: {node!r}")


def _atom_perm(name: str) -> GenPerm:
    if name == "Z":
        return pauli_z(3)
    if name == "Zc":
        return pauli_z(3, conjugated=True)
    return gamma(name)


def evaluate(node: Expr) -> GenPerm:
    if isinstance(node, Atom):
        return _atom_perm(node.name)
    if isinstance(node, Rot):
        return scale(evaluate(node.child), RootScalar(3, node.sign, node.k))
    if isinstance(node, Kron):
        return kron(evaluate(node.left), evaluate(node.right))
    if isinstance(node, Compose):
        return compose(evaluate(node.left), evaluate(node.right))
    if isinstance(node, BlockDiag):
        return block_diag([evaluate(i) for i in node.items])
    if isinstance(node, Diag):
        return GenPerm.from_diag(3, node.entries)
    raise TypeError(f"not an expression node: {node!r}")


_ATOM_CONJ: dict[str, GenPerm] = {}


def _atom_conjugate(name: str) -> GenPerm:
    img = _ATOM_CONJ.get(name)
    if img is None:
        if name in ("Z", "Zc"):
            img = conjugate_by_c(_atom_perm(name))
        else:
            img = conjugate_table(name)
        _ATOM_CONJ[name] = img
    return img


def conjugate_expr(node: Expr) -> "GenPerm | DenseCycMatrix":
    """Structural route to W; agrees exactly with conjugate_by_c(evaluate(node))."""
    if isinstance(node, Atom):
        return _atom_conjugate(node.name)
    if isinstance(node, Rot):
        child = conjugate_expr(node.child)
        s = RootScalar(3, node.sign, node.k)
        return scale(child, s) if isinstance(child, GenPerm) else child.scale_root(s)
    if isinstance(node, Kron):
        left = conjugate_expr(node.left)
        right = conjugate_expr(node.right)
        if isinstance(left, GenPerm) and isinstance(right, GenPerm):
            return kron(left, right)
        return _downcast(as_dense(left).kron(as_dense(right)))
    if isinstance(node, Compose):
        left = conjugate_expr(node.left)
        right = conjugate_expr(node.right)
        if isinstance(left, GenPerm) and isinstance(right, GenPerm):
            return compose(left, right)
        return _downcast(as_dense(left).matmul(as_dense(right)))
    if isinstance(node, BlockDiag):
        return conjugate_blockdiag([evaluate(i) for i in node.items])
    if isinstance(node, Diag):
        size = len(node.entries)
        if size == 9:
            blocks = [
                GenPerm.from_diag(3, node.entries[3 * i : 3 * i + 3]) for i in range(3)
            ]
            return conjugate_blockdiag(blocks)
        return conjugate_by_c(GenPerm.from_diag(3, node.entries))
    raise TypeError(f"not an expression node: {node!r}")
