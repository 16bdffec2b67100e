"""p-valued functions as value vectors, their unit-circle sign vectors, and
the small structural operators on them (constant addition, tensor sum,
column vectorization, GF(3) polynomial evaluation).

Index convention, fixed throughout the package: a point
(x_1, ..., x_n) ∈ Z_p^n is flattened as x = x_1·p^(n-1) + ... + x_n,
i.e. x_1 is the MOST significant base-p digit.  The two-place ternary
product function x_1·x_2 therefore has value vector [000 012 021].
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .cyclotomic import CycInt, NotAUnitRoot, RadixMismatch, _check_radix


def digits_of(x: int, p: int, n: int) -> tuple[int, ...]:
    """Base-p digits of x, most significant first."""
    out = [0] * n
    for i in range(n - 1, -1, -1):
        x, out[i] = divmod(x, p)
    return tuple(out)


def index_of(digits: Sequence[int], p: int) -> int:
    x = 0
    for dgt in digits:
        x = x * p + dgt
    return x


def scalar_product(w: int, x: int, p: int, n: int) -> int:
    """Digitwise scalar product ⟨w·x⟩ mod p."""
    acc = 0
    for a, b in zip(digits_of(w, p, n), digits_of(x, p, n)):
        acc += a * b
    return acc % p


class NotASign(ValueError):
    """Vector is not the sign of any p-valued function."""

    def __init__(self, index: int, value):
        super().__init__(f"entry {index} = {value} is not ξ^k with sign +1")
        self.index = index
        self.value = value


class MvFunction:
    """A p-valued function of n variables as a length-p^n value vector."""

    __slots__ = ("p", "n", "values")

    def __init__(self, p: int, n: int, values: Iterable[int]):
        _check_radix(p)
        if n < 0:
            raise ValueError("variable count must be >= 0")
        values = tuple(int(v) for v in values)
        if len(values) != p**n:
            raise ValueError(f"expected {p**n} values for p={p}, n={n}, got {len(values)}")
        for v in values:
            if not 0 <= v < p:
                raise ValueError(f"value {v} outside Z_{p}")
        self.p = p
        self.n = n
        self.values = values

    @classmethod
    def from_digits(cls, p: int, n: int, text: str) -> "MvFunction":
        return cls(p, n, (int(ch) for ch in text.strip()))

    @classmethod
    def constant(cls, p: int, value: int, n: int = 0) -> "MvFunction":
        return cls(p, n, (value,) * p**n)

    def digit_string(self) -> str:
        return "".join(str(v) for v in self.values)

    def to_line(self) -> str:
        """Function file line format: 'p n d0d1…'."""
        return f"{self.p} {self.n} {self.digit_string()}"

    @classmethod
    def from_line(cls, line: str) -> "MvFunction":
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"expected 'p n digits', got {line!r}")
        return cls.from_digits(int(parts[0]), int(parts[1]), parts[2])

    def __call__(self, x: int) -> int:
        return self.values[x]

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MvFunction):
            return NotImplemented
        return (self.p, self.n, self.values) == (other.p, other.n, other.values)

    def __lt__(self, other: "MvFunction") -> bool:
        return (self.p, self.n, self.values) < (other.p, other.n, other.values)

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.values))

    def __repr__(self) -> str:
        return f"MvFunction({self.p}, {self.n}, {self.digit_string()!r})"


class SignVector:
    """Length-p^n vector of +ξ^k values: the sign representation ξ^f."""

    __slots__ = ("p", "n", "entries")

    def __init__(self, p: int, n: int, entries: Iterable[CycInt]):
        entries = tuple(entries)
        if len(entries) != p**n:
            raise ValueError(f"expected {p**n} entries for p={p}, n={n}")
        for i, e in enumerate(entries):
            if not isinstance(e, CycInt) or e.p != p:
                raise RadixMismatch(f"entry {i} is not in Z[ξ_{p}]")
            try:
                rs = e.as_root_scalar()
            except NotAUnitRoot as exc:
                raise NotASign(i, e) from exc
            if rs.sign != 1:
                raise NotASign(i, e)
        self.p = p
        self.n = n
        self.entries = entries

    def exponents(self) -> tuple[int, ...]:
        return tuple(e.as_root_scalar().exponent for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> CycInt:
        return self.entries[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignVector):
            return NotImplemented
        return (self.p, self.n, self.entries) == (other.p, other.n, other.entries)

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.entries))

    def __repr__(self) -> str:
        return f"SignVector({self.p}, {self.n}, [{', '.join(map(str, self.entries))}])"


def sign_of(f: MvFunction) -> SignVector:
    """F = [ξ^f(0), ξ^f(1), ...]."""
    roots = [CycInt.root(f.p, k) for k in range(f.p)]
    return SignVector(f.p, f.n, (roots[v] for v in f.values))


def _length_to_n(p: int, length: int) -> int:
    n, total = 0, 1
    while total < length:
        total *= p
        n += 1
    if total != length:
        raise ValueError(f"length {length} is not a power of {p}")
    return n


def try_from_sign(entries) -> MvFunction:
    """Recover f with ξ^f = entries; NotASign if any entry is not +ξ^k."""
    if isinstance(entries, SignVector):
        seq = entries.entries
        p = entries.p
    else:
        seq = tuple(entries)
        if not seq:
            raise ValueError("empty vector")
        p = seq[0].p
    n = _length_to_n(p, len(seq))
    values = []
    for i, e in enumerate(seq):
        if not isinstance(e, CycInt) or e.p != p:
            raise RadixMismatch(f"entry {i} is not in Z[ξ_{p}]")
        try:
            rs = e.as_root_scalar()
        except NotAUnitRoot as exc:
            raise NotASign(i, e) from exc
        if rs.sign != 1:
            raise NotASign(i, e)
        values.append(rs.exponent)
    return MvFunction(p, n, values)


def add_constant(f: MvFunction, c: int) -> MvFunction:
    """Pointwise f(x) + c mod p."""
    c %= f.p
    return MvFunction(f.p, f.n, ((v + c) % f.p for v in f.values))


def tensor_sum(f1: MvFunction, f2: MvFunction) -> MvFunction:
    """(f1 ⊞ f2)(x, y) = f1(x) + f2(y) mod p, with x the high digits."""
    if f1.p != f2.p:
        raise RadixMismatch(f"radix mismatch: {f1.p} vs {f2.p}")
    p = f1.p
    values = [(a + b) % p for a in f1.values for b in f2.values]
    return MvFunction(p, f1.n + f2.n, values)


# -- GF(3) polynomial expressions ----------------------------------------------

_FACTOR = re.compile(r"^(?:([0-9]+)|x([0-9]+)(?:\^([0-9]+))?)$")


class GF3Polynomial:
    """Sum of monomials c·x_i^e over Z_3, e.g. 'x1*x2 + 2*x2^2 + 1'."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        cleaned = []
        for coeff, powers in terms:
            if not 0 <= coeff <= 2:
                raise ValueError(f"coefficient {coeff} outside Z_3")
            powers = tuple(sorted(powers))
            for var, e in powers:
                if var < 1:
                    raise ValueError(f"bad variable index {var}")
                if not 0 <= e <= 2:
                    raise ValueError(f"exponent {e} must be < 3")
            cleaned.append((coeff, powers))
        self.terms = tuple(cleaned)

    @classmethod
    def parse(cls, text: str) -> "GF3Polynomial":
        terms = []
        for chunk in text.replace(" ", "").split("+"):
            if not chunk:
                raise ValueError(f"empty term in {text!r}")
            coeff = 1
            powers: dict[int, int] = {}
            for factor in chunk.split("*"):
                m = _FACTOR.match(factor)
                if m is None:
                    raise ValueError(f"bad factor {factor!r} in {text!r}")
                if m.group(1) is not None:
                    literal = int(m.group(1))
                    if literal >= 3:
                        raise ValueError(f"coefficient {literal} outside Z_3 in {factor!r}")
                    coeff = (coeff * literal) % 3
                else:
                    var = int(m.group(2))
                    e = int(m.group(3)) if m.group(3) else 1
                    if e >= 3:
                        raise ValueError(f"exponent {e} must be < 3 in {factor!r}")
                    powers[var] = powers.get(var, 0) + e
            terms.append((coeff, tuple(powers.items())))
        return cls(terms)

    @property
    def max_var(self) -> int:
        return max((var for _, powers in self.terms for var, _ in powers), default=0)

    def evaluate(self, point: Sequence[int]) -> int:
        total = 0
        for coeff, powers in self.terms:
            term = coeff
            for var, e in powers:
                term = (term * pow(point[var - 1], e, 3)) % 3
            total = (total + term) % 3
        return total

    def __str__(self) -> str:
        chunks = []
        for coeff, powers in self.terms:
            factors = [str(coeff)] if (coeff != 1 or not powers) else []
            for var, e in powers:
                factors.append(f"x{var}" if e == 1 else f"x{var}^{e}")
            chunks.append("*".join(factors))
        return " + ".join(chunks) if chunks else "0"


def eval_polynomial(poly: GF3Polynomial, n: int) -> MvFunction:
    """Value vector of the polynomial over all 3^n points."""
    if poly.max_var > n:
        raise ValueError(f"polynomial references x{poly.max_var} but n={n}")
    values = [poly.evaluate(digits_of(x, 3, n)) for x in range(3**n)]
    return MvFunction(3, n, values)


# -- vec / un-vec --------------------------------------------------------------


def vec_columns(matrix: Sequence[Sequence]) -> list:
    """Stack the columns of a square matrix, first column first."""
    side = len(matrix)
    for row in matrix:
        if len(row) != side:
            raise ValueError("matrix is not square")
    return [matrix[i][j] for j in range(side) for i in range(side)]


def un_vec(vector: Sequence, side: int) -> list[list]:
    """Inverse of vec_columns."""
    if len(vector) != side * side:
        raise ValueError(f"length {len(vector)} is not {side}×{side}")
    return [[vector[j * side + i] for j in range(side)] for i in range(side)]
