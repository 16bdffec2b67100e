"""Exact arithmetic in the cyclotomic integer rings Z[ξ_p] for p in {3, 4, 5, 6}.

ξ denotes a primitive p-th root of unity.  Every value is an integer vector
in the power basis {1, ξ, ..., ξ^(d-1)} kept fully reduced modulo the p-th
cyclotomic polynomial, so equality (and hashing) is plain coefficient
equality:

    Φ_3 = x² + x + 1            Φ_4 = x² + 1
    Φ_5 = x⁴ + x³ + x² + x + 1  Φ_6 = x² - x + 1

Coefficients are Python ints, so nothing here ever overflows or rounds.
The canonical text form writes ξ as ``x``: ``"3"``, ``"3x"``, ``"-1-1x"``,
``"2x^3"`` (the last only for p=5, where the basis has degree 4).
"""

from __future__ import annotations

import re

SUPPORTED_RADICES = (3, 4, 5, 6)

_DEGREE = {3: 2, 4: 2, 5: 4, 6: 2}

# ξ^d written in the power basis, d = deg Φ_p.
_FOLD = {
    3: (-1, -1),
    4: (-1, 0),
    5: (-1, -1, -1, -1),
    6: (-1, 1),
}


class RadixMismatch(ValueError):
    """Operands live in different rings Z[ξ_p]."""


class NotAUnitRoot(ValueError):
    """Value is not of the form ±ξ^k."""


class NotDivisible(ValueError):
    """No exact integer quotient exists."""

    def __init__(self, message: str, index: int | None = None, value=None):
        super().__init__(message)
        self.index = index
        self.value = value


def degree(p: int) -> int:
    """deg Φ_p, the length of the reduced coefficient vector."""
    _check_radix(p)
    return _DEGREE[p]


def _check_radix(p: int) -> None:
    if p not in _DEGREE:
        raise ValueError(f"unsupported radix {p}; expected one of {SUPPORTED_RADICES}")


def rotate_coeffs(p: int, coeffs: tuple, k: int) -> tuple:
    """Coefficients of ξ^k · v, reduced; v given by `coeffs`."""
    fold = _FOLD[p]
    for _ in range(k % p):
        top = coeffs[-1]
        shifted = (0,) + coeffs[:-1]
        coeffs = tuple(s + top * f for s, f in zip(shifted, fold))
    return coeffs


class CycInt:
    """An element of Z[ξ_p] in reduced power-basis form.  Immutable."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        _check_radix(p)
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != _DEGREE[p]:
            raise ValueError(
                f"radix {p} needs exactly {_DEGREE[p]} coefficients, got {len(coeffs)}"
            )
        self.p = p
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "CycInt":
        _check_radix(p)
        return cls(p, (0,) * _DEGREE[p])

    @classmethod
    def one(cls, p: int) -> "CycInt":
        return cls.from_int(p, 1)

    @classmethod
    def from_int(cls, p: int, value: int) -> "CycInt":
        _check_radix(p)
        return cls(p, (int(value),) + (0,) * (_DEGREE[p] - 1))

    @classmethod
    def root(cls, p: int, k: int = 1) -> "CycInt":
        """ξ^k, reduced."""
        _check_radix(p)
        return cls(p, _root_coeffs(p)[k % p])

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycInt):
            if other.p != self.p:
                raise RadixMismatch(f"radix mismatch: {self.p} vs {other.p}")
            return other
        if isinstance(other, int):
            return CycInt.from_int(self.p, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycInt(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycInt(self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CycInt(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.p
        a, b = self.coeffs, other.coeffs
        if p != 5:
            a0, a1 = a
            b0, b1 = b
            c2 = a1 * b1
            f0, f1 = _FOLD[p]
            return CycInt(p, (a0 * b0 + f0 * c2, a0 * b1 + a1 * b0 + f1 * c2))
        d = 4
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        fold = _FOLD[p]
        for i in range(2 * d - 2, d - 1, -1):
            c = conv[i]
            if c:
                conv[i] = 0
                for j, f in enumerate(fold):
                    conv[i - d + j] += c * f
        return CycInt(p, tuple(conv[:d]))

    __rmul__ = __mul__

    def mul_root(self, k: int) -> "CycInt":
        """self · ξ^k (cheap coefficient rotation, no convolution)."""
        if k % self.p == 0:
            return self
        return CycInt(self.p, rotate_coeffs(self.p, self.coeffs, k))

    def conj(self) -> "CycInt":
        """Complex conjugate: the automorphism ξ ↦ ξ^(p-1)."""
        rows = _conj_basis(self.p)
        d = _DEGREE[self.p]
        out = [0] * d
        for c, row in zip(self.coeffs, rows):
            if c:
                for i in range(d):
                    out[i] += c * row[i]
        return CycInt(self.p, tuple(out))

    def abs_squared(self) -> "CycInt":
        """self · conj(self); equals the rational integer |self|² when it is one."""
        return self * self.conj()

    def as_root_scalar(self) -> "RootScalar":
        """Decompose as ±ξ^k, preferring sign +1; NotAUnitRoot otherwise."""
        found = _unit_lookup(self.p).get(self.coeffs)
        if found is None:
            raise NotAUnitRoot(f"{self} is not of the form ±ξ^k (p={self.p})")
        sign, k = found
        return RootScalar(self.p, sign, k)

    def div_exact_int(self, d: int) -> "CycInt":
        """self / d when every coefficient is divisible by d."""
        if d == 0:
            raise ValueError("division by zero")
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise NotDivisible(f"{self} is not divisible by {d}", value=self)
            out.append(q)
        return CycInt(self.p, tuple(out))

    # -- protocol -----------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycInt.from_int(self.p, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"CycInt({self.p}, {self.coeffs})"

    def __str__(self) -> str:
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                term = str(c)
            elif i == 1:
                term = f"{c}x"
            else:
                term = f"{c}x^{i}"
            if parts and c > 0:
                parts.append("+" + term)
            else:
                parts.append(term)
        return "".join(parts) or "0"


class RootScalar:
    """±ξ^k as a compact (sign, exponent) pair; the scalar of one matrix entry."""

    __slots__ = ("p", "sign", "exponent")

    def __init__(self, p: int, sign: int = 1, exponent: int = 0):
        _check_radix(p)
        if sign not in (1, -1):
            raise ValueError(f"sign must be ±1, got {sign}")
        self.p = p
        self.sign = sign
        self.exponent = exponent % p

    def to_cyc(self) -> CycInt:
        r = CycInt.root(self.p, self.exponent)
        return r if self.sign == 1 else -r

    def apply(self, value: CycInt) -> CycInt:
        """self · value without building the intermediate CycInt."""
        out = value.mul_root(self.exponent)
        return out if self.sign == 1 else -out

    def __mul__(self, other: "RootScalar") -> "RootScalar":
        if not isinstance(other, RootScalar):
            return NotImplemented
        if other.p != self.p:
            raise RadixMismatch(f"radix mismatch: {self.p} vs {other.p}")
        return RootScalar(self.p, self.sign * other.sign, self.exponent + other.exponent)

    def conj(self) -> "RootScalar":
        return RootScalar(self.p, self.sign, -self.exponent)

    @property
    def is_one(self) -> bool:
        return self.sign == 1 and self.exponent == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootScalar):
            return NotImplemented
        return (self.p, self.sign, self.exponent) == (other.p, other.sign, other.exponent)

    def __hash__(self) -> int:
        return hash((self.p, self.sign, self.exponent))

    def __repr__(self) -> str:
        return f"RootScalar({self.p}, {self.sign:+d}, {self.exponent})"


# -- cached per-radix tables -------------------------------------------------

_ROOT_COEFFS: dict[int, tuple] = {}
_CONJ_BASIS: dict[int, tuple] = {}
_UNIT_LOOKUP: dict[int, dict] = {}


def _root_coeffs(p: int) -> tuple:
    table = _ROOT_COEFFS.get(p)
    if table is None:
        one = (1,) + (0,) * (_DEGREE[p] - 1)
        rows = [one]
        for _ in range(p - 1):
            rows.append(rotate_coeffs(p, rows[-1], 1))
        table = tuple(rows)
        _ROOT_COEFFS[p] = table
    return table


def _conj_basis(p: int) -> tuple:
    """conj(ξ^i) for the basis powers i = 0..d-1, as coefficient rows."""
    table = _CONJ_BASIS.get(p)
    if table is None:
        roots = _root_coeffs(p)
        table = tuple(roots[(-i) % p] for i in range(_DEGREE[p]))
        _CONJ_BASIS[p] = table
    return table


def _unit_lookup(p: int) -> dict:
    table = _UNIT_LOOKUP.get(p)
    if table is None:
        table = {}
        roots = _root_coeffs(p)
        for k in range(p):
            table.setdefault(roots[k], (1, k))
        for k in range(p):
            table.setdefault(tuple(-c for c in roots[k]), (-1, k))
        _UNIT_LOOKUP[p] = table
    return table


# -- text form ----------------------------------------------------------------

_TOKEN = re.compile(r"[+-]?[0-9]*x(?:\^[0-9]+)?|[+-]?[0-9]+")
_TERM = re.compile(r"([+-]?)([0-9]*)(x)?(?:\^([0-9]+))?$")


def parse_cyc(p: int, text: str) -> CycInt:
    """Inverse of str(CycInt): accepts forms like '3', '-1-1x', '1+2x', '2x^3'."""
    _check_radix(p)
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty cyclotomic literal")
    tokens = _TOKEN.findall(s)
    if "".join(tokens) != s:
        raise ValueError(f"cannot parse cyclotomic literal {text!r}")
    d = _DEGREE[p]
    coeffs = [0] * d
    for tok in tokens:
        m = _TERM.match(tok)
        if m is None or (not m.group(2) and not m.group(3)):
            raise ValueError(f"bad term {tok!r} in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            e = int(m.group(4)) if m.group(4) else 1
        else:
            e = 0
        if e >= d:
            raise ValueError(f"exponent {e} outside the reduced basis (degree {d})")
        coeffs[e] += sign * mag
    return CycInt(p, tuple(coeffs))


def xi(p: int, k: int = 1) -> CycInt:
    """Shorthand for CycInt.root(p, k)."""
    return CycInt.root(p, k)
