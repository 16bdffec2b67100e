"""Generalized permutation matrices and their conjugation by the transform.

A generalized permutation has exactly one nonzero entry per row and column,
each of the form ±ξ^k; it is stored row-sparse as (column, scalar) pairs so
application to a vector is O(size).  The module provides

  * the six elementary 3×3 straight permutations Γ = {I, P01, P12, N, X, XT},
  * the diagonal modulation matrices Z = diag(1, ξ, ξ², ...) and Z*,
  * Kronecker / block-diagonal / product composition and scalar rotation,
  * conjugation W = p^(-n)·C(n)·P·C*(n), both by dense computation and by
    the precomputed images of Γ (I↦I, N↦Z*·P12, P12↦P12, P01↦Z·P12,
    X↦Z, XT↦Z*), which combine factor-wise over Kronecker products.

Conjugating a matrix without Kronecker structure can leave the ring: the
exact result is then roots/3-valued.  DenseCycMatrix therefore carries an
integer numerator matrix plus a positive denominator, normalized by content.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .cyclotomic import CycInt, NotAUnitRoot, NotDivisible, RadixMismatch, RootScalar
from .mvfunction import _length_to_n
from .vctransform import Spectrum, build_c


class NotFlat(ValueError):
    """Spectrum is not p^(n/2) times unit roots, so it defines no diagonal."""


GAMMA_NAMES = ("I", "P01", "P12", "N", "X", "XT")

# row -> column maps of the elementary straight permutations
_GAMMA_COLS = {
    "I": (0, 1, 2),
    "P01": (1, 0, 2),
    "P12": (0, 2, 1),
    "N": (2, 1, 0),
    "X": (2, 0, 1),
    "XT": (1, 2, 0),
}


class GenPerm:
    """Sparse generalized permutation: rows[r] = (column, ±ξ^k)."""

    __slots__ = ("p", "size", "cols", "scalars")

    def __init__(self, p: int, cols: Sequence[int], scalars: Sequence[RootScalar]):
        cols = tuple(cols)
        scalars = tuple(scalars)
        size = len(cols)
        if len(scalars) != size:
            raise ValueError("columns and scalars differ in length")
        if sorted(cols) != list(range(size)):
            raise ValueError(f"column indices {cols} are not a permutation")
        for s in scalars:
            if s.p != p:
                raise RadixMismatch(f"scalar {s!r} not over radix {p}")
        self.p = p
        self.size = size
        self.cols = cols
        self.scalars = scalars

    @classmethod
    def from_diag(cls, p: int, scalars: Iterable[RootScalar]) -> "GenPerm":
        scalars = tuple(scalars)
        return cls(p, range(len(scalars)), scalars)

    def apply(self, vec):
        """Matrix-vector product; Spectrum in gives Spectrum back."""
        if isinstance(vec, Spectrum):
            out = self.apply(vec.entries)
            return Spectrum(vec.p, vec.n, out)
        seq = tuple(vec)
        if len(seq) != self.size:
            raise ValueError(f"size mismatch: {self.size} vs {len(seq)}")
        return [s.apply(seq[c]) for c, s in zip(self.cols, self.scalars)]

    def to_dense(self) -> "DenseCycMatrix":
        zero = CycInt.zero(self.p)
        rows = []
        for c, s in zip(self.cols, self.scalars):
            row = [zero] * self.size
            row[c] = s.to_cyc()
            rows.append(row)
        return DenseCycMatrix(self.p, rows)

    def is_straight(self) -> bool:
        return all(s.is_one for s in self.scalars)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GenPerm):
            return NotImplemented
        return (self.p, self.cols, self.scalars) == (other.p, other.cols, other.scalars)

    def __hash__(self) -> int:
        return hash((self.p, self.cols, self.scalars))

    def __repr__(self) -> str:
        entries = ", ".join(
            f"{r}->{c}:{s!r}" for r, (c, s) in enumerate(zip(self.cols, self.scalars))
        )
        return f"GenPerm({self.p}, [{entries}])"


class DenseCycMatrix:
    """numerator/denominator matrix over Z[ξ_p]; denominator content-reduced."""

    __slots__ = ("p", "rows", "denom")

    def __init__(self, p: int, rows, denom: int = 1):
        rows = tuple(tuple(cell for cell in row) for row in rows)
        size = len(rows)
        for row in rows:
            if len(row) != size:
                raise ValueError("matrix is not square")
            for cell in row:
                if not isinstance(cell, CycInt) or cell.p != p:
                    raise RadixMismatch(f"entry {cell!r} not in Z[ξ_{p}]")
        if denom == 0:
            raise ValueError("zero denominator")
        if denom < 0:
            rows = tuple(tuple(-cell for cell in row) for row in rows)
            denom = -denom
        content = 0
        for row in rows:
            for cell in row:
                for c in cell.coeffs:
                    content = math.gcd(content, c)
        g = math.gcd(content, denom)
        if g > 1:
            rows = tuple(tuple(cell.div_exact_int(g) for cell in row) for row in rows)
            denom //= g
        self.p = p
        self.rows = rows
        self.denom = denom

    @property
    def size(self) -> int:
        return len(self.rows)

    def apply(self, vec):
        """Exact matrix-vector product; NotDivisible if the 1/denom scale fails."""
        if isinstance(vec, Spectrum):
            return Spectrum(vec.p, vec.n, self.apply(vec.entries))
        seq = tuple(vec)
        if len(seq) != self.size:
            raise ValueError(f"size mismatch: {self.size} vs {len(seq)}")
        out = []
        for row in self.rows:
            acc = CycInt.zero(self.p)
            for cell, v in zip(row, seq):
                if cell:
                    acc = acc + cell * v
            out.append(acc if self.denom == 1 else acc.div_exact_int(self.denom))
        return out

    def matmul(self, other: "DenseCycMatrix") -> "DenseCycMatrix":
        if other.size != self.size:
            raise ValueError("size mismatch")
        cols = list(zip(*other.rows))
        rows = [
            [_dot(row, col, self.p) for col in cols]
            for row in self.rows
        ]
        return DenseCycMatrix(self.p, rows, self.denom * other.denom)

    def kron(self, other: "DenseCycMatrix") -> "DenseCycMatrix":
        rows = [
            [a * b for a in arow for b in brow]
            for arow in self.rows
            for brow in other.rows
        ]
        return DenseCycMatrix(self.p, rows, self.denom * other.denom)

    def add(self, other: "DenseCycMatrix") -> "DenseCycMatrix":
        if other.size != self.size or other.denom != self.denom:
            raise ValueError("shape/denominator mismatch")
        rows = [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        ]
        return DenseCycMatrix(self.p, rows, self.denom)

    def scale_root(self, s: RootScalar) -> "DenseCycMatrix":
        rows = [[s.apply(cell) for cell in row] for row in self.rows]
        return DenseCycMatrix(self.p, rows, self.denom)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseCycMatrix):
            return NotImplemented
        return (self.p, self.rows, self.denom) == (other.p, other.rows, other.denom)

    def __hash__(self) -> int:
        return hash((self.p, self.rows, self.denom))

    def __repr__(self) -> str:
        scale = "" if self.denom == 1 else f" / {self.denom}"
        body = "; ".join(" ".join(str(c) for c in row) for row in self.rows)
        return f"DenseCycMatrix({self.p}, [{body}]{scale})"


def _dot(row, col, p) -> CycInt:
    acc = CycInt.zero(p)
    for a, b in zip(row, col):
        if a and b:
            acc = acc + a * b
    return acc


def as_dense(m) -> DenseCycMatrix:
    return m.to_dense() if isinstance(m, GenPerm) else m


# -- constructors --------------------------------------------------------------


def identity(p: int, size: int) -> GenPerm:
    one = RootScalar(p)
    return GenPerm(p, range(size), [one] * size)


def gamma(name: str) -> GenPerm:
    """One of the elementary 3×3 straight permutations Γ (p = 3)."""
    cols = _GAMMA_COLS.get(name)
    if cols is None:
        raise ValueError(f"unknown elementary permutation {name!r}; expected {GAMMA_NAMES}")
    one = RootScalar(3)
    return GenPerm(3, cols, [one] * 3)


def pauli_z(p: int, conjugated: bool = False) -> GenPerm:
    """diag(1, ξ, ξ², ...) or its conjugate diag(1, ξ^-1, ...)."""
    step = -1 if conjugated else 1
    return GenPerm.from_diag(p, (RootScalar(p, 1, step * k) for k in range(p)))


def kron(a: GenPerm, b: GenPerm) -> GenPerm:
    """Kronecker product; the first factor owns the high digits."""
    if a.p != b.p:
        raise RadixMismatch(f"radix mismatch: {a.p} vs {b.p}")
    cols = []
    scalars = []
    for c1, s1 in zip(a.cols, a.scalars):
        for c2, s2 in zip(b.cols, b.scalars):
            cols.append(c1 * b.size + c2)
            scalars.append(s1 * s2)
    return GenPerm(a.p, cols, scalars)


def compose(a: GenPerm, b: GenPerm) -> GenPerm:
    """Matrix product a·b."""
    if a.p != b.p:
        raise RadixMismatch(f"radix mismatch: {a.p} vs {b.p}")
    if a.size != b.size:
        raise ValueError(f"size mismatch: {a.size} vs {b.size}")
    cols = []
    scalars = []
    for ca, sa in zip(a.cols, a.scalars):
        cols.append(b.cols[ca])
        scalars.append(sa * b.scalars[ca])
    return GenPerm(a.p, cols, scalars)


def scale(a: GenPerm, s: RootScalar) -> GenPerm:
    """Rotate every nonzero entry by the scalar s."""
    return GenPerm(a.p, a.cols, [s * t for t in a.scalars])


def block_diag(blocks: Sequence[GenPerm]) -> GenPerm:
    if not blocks:
        raise ValueError("no blocks")
    p = blocks[0].p
    cols = []
    scalars = []
    offset = 0
    for blk in blocks:
        if blk.p != p:
            raise RadixMismatch("blocks with mixed radices")
        cols.extend(c + offset for c in blk.cols)
        scalars.extend(blk.scalars)
        offset += blk.size
    return GenPerm(p, cols, scalars)


def diag_from_flat_spectrum(s: Spectrum) -> GenPerm:
    """P = p^(-n/2)·diag(S); NotFlat unless every scaled entry is ±ξ^k."""
    if s.n % 2:
        raise NotFlat(f"odd variable count {s.n}: p^(n/2) is not an integer")
    scale_int = s.p ** (s.n // 2)
    scalars = []
    for w, e in enumerate(s.entries):
        try:
            scalars.append(e.div_exact_int(scale_int).as_root_scalar())
        except (NotDivisible, NotAUnitRoot) as exc:
            raise NotFlat(f"entry {w} = {e} is not {scale_int}·(±ξ^k)") from exc
    return GenPerm.from_diag(s.p, scalars)


def apply(m, vec):
    """Apply a GenPerm or DenseCycMatrix to a vector or Spectrum."""
    return m.apply(vec)


# -- conjugation ---------------------------------------------------------------

_C_ROWS_CACHE: dict[tuple[int, int], tuple] = {}


def _c_rows(p: int, n: int) -> tuple:
    key = (p, n)
    rows = _C_ROWS_CACHE.get(key)
    if rows is None:
        rows = build_c(p, n).rows
        _C_ROWS_CACHE[key] = rows
    return rows


def conjugate_by_c(m) -> "GenPerm | DenseCycMatrix":
    """W = p^(-n)·C(n)·m·C*(n), exact; returned as GenPerm when it is one."""
    p = m.p
    size = m.size
    n = _length_to_n(p, size)
    c = _c_rows(p, n)
    if isinstance(m, GenPerm):
        # C·P permutes/rotates the columns of C: (C·P)[i, cols[r]] = C[i, r]·s_r
        cp = [[None] * size for _ in range(size)]
        for r, (col, s) in enumerate(zip(m.cols, m.scalars)):
            for i in range(size):
                cp[i][col] = s.apply(c[i][r])
        denom_in = 1
    else:
        cp = [[_dot(row, col, p) for col in zip(*m.rows)] for row in c]
        denom_in = m.denom
    # right-multiply by C*: entry (i, j) = Σ_k cp[i][k]·conj(C[k][j])
    cstar_cols = [[c[k][j].conj() for k in range(size)] for j in range(size)]
    out = [[_dot(cp[i], cstar_cols[j], p) for j in range(size)] for i in range(size)]
    dense = DenseCycMatrix(p, out, denom=p**n * denom_in)
    return _downcast(dense)


def _downcast(dense: DenseCycMatrix) -> "GenPerm | DenseCycMatrix":
    perm = _try_genperm(dense)
    return perm if perm is not None else dense


def _try_genperm(dense: DenseCycMatrix) -> GenPerm | None:
    if dense.denom != 1:
        return None
    size = dense.size
    cols = []
    scalars = []
    seen = set()
    for row in dense.rows:
        hit = None
        for j, cell in enumerate(row):
            if cell:
                if hit is not None:
                    return None
                hit = j
        if hit is None or hit in seen:
            return None
        try:
            scalars.append(row[hit].as_root_scalar())
        except NotAUnitRoot:
            return None
        seen.add(hit)
        cols.append(hit)
    return GenPerm(dense.p, cols, scalars)


def is_generalized_permutation(m) -> bool:
    """One ±ξ^k nonzero per row and column, nothing else."""
    if isinstance(m, GenPerm):
        return True
    return _try_genperm(m) is not None


_CONJUGATE_TABLE: dict[str, GenPerm] | None = None


def conjugate_table(name: str) -> GenPerm:
    """The tabulated image of an elementary permutation under conjugation."""
    global _CONJUGATE_TABLE
    if _CONJUGATE_TABLE is None:
        z = pauli_z(3)
        zc = pauli_z(3, conjugated=True)
        p12 = gamma("P12")
        _CONJUGATE_TABLE = {
            "I": gamma("I"),
            "N": compose(zc, p12),
            "P12": p12,
            "P01": compose(z, p12),
            "X": z,
            "XT": zc,
        }
    perm = _CONJUGATE_TABLE.get(name)
    if perm is None:
        raise ValueError(f"unknown elementary permutation {name!r}; expected {GAMMA_NAMES}")
    return perm


def c_diag_c_component(index: int) -> DenseCycMatrix:
    """3^(-1)·C(1)·diag(e_index)·C*(1): the reusable block-diagonal pieces."""
    if index not in (0, 1, 2):
        raise ValueError("index must be 0, 1 or 2")
    c = _c_rows(3, 1)
    rows = [[c[i][index] * c[j][index].conj() for j in range(3)] for i in range(3)]
    return DenseCycMatrix(3, rows, denom=3)


def conjugate_blockdiag(blocks: Sequence[GenPerm]) -> "GenPerm | DenseCycMatrix":
    """W(2) for blockdiag(B0, B1, B2) via the additive Kronecker decomposition.

    With the block index on the high base-3 digit,
    blockdiag(B0, B1, B2) = Σ_i diag(e_i) ⊗ B_i, so
    W(2) = Σ_i (3^(-1)·C·diag(e_i)·C*) ⊗ (3^(-1)·C·B_i·C*),
    computed as integer numerators over the common denominator 9.  The
    reusable selector conjugates C·diag(e_i)·C* are the rank-one matrices
    exposed as c_diag_c_component().  (For diagonal blocks the two factor
    orders describe the same matrix; the asymmetric cases fix this one.)
    """
    if len(blocks) != 3 or any(b.size != 3 or b.p != 3 for b in blocks):
        raise ValueError("expected exactly 3 generalized permutations of size 3 (p=3)")
    c = _c_rows(3, 1)
    total = None
    for i, blk in enumerate(blocks):
        selector = DenseCycMatrix(
            3, [[c[a][i] * c[b][i].conj() for b in range(3)] for a in range(3)]
        )
        right = _conjugate_numerator_3(blk, c)  # C·B_i·C*, denominator 3 implied
        term = selector.kron(DenseCycMatrix(3, right.rows))
        total = term if total is None else total.add(term)
    return _downcast(DenseCycMatrix(3, total.rows, denom=9 * total.denom))


def _conjugate_numerator_3(blk: GenPerm, c) -> DenseCycMatrix:
    cp = [[None] * 3 for _ in range(3)]
    for r, (col, s) in enumerate(zip(blk.cols, blk.scalars)):
        for i in range(3):
            cp[i][col] = s.apply(c[i][r])
    rows = [
        [_dot(cp[i], [c[k][j].conj() for k in range(3)], 3) for j in range(3)]
        for i in range(3)
    ]
    return DenseCycMatrix(3, rows)
