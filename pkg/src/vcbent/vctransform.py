"""The Vilenkin-Chrestenson transform pair over Z[ξ_p], exact end to end.

C(1)[j, k] = ξ^(j·k mod p) and C(n) is the n-fold Kronecker power of C(1),
so C(n)·C*(n) = p^n·I.  The forward direction applies the conjugate matrix
C*(n); the inverse is F = p^(-n)·C(n)·S with an explicit divisibility
check, so a candidate spectrum that is not p^n times anything is rejected
instead of rounded.

forward() is the dense O(p^2n) reference.  forward_fast() factors the
transform into n radix-p stages (one per base-p digit) for O(n·p^n)
multiply-adds; both produce identical exact output.  The stage kernel runs
on int64 numpy arrays whenever coefficient growth provably fits, and falls
back to Python big ints otherwise.
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

import numpy as np

from .cyclotomic import CycInt, NotDivisible, degree, rotate_coeffs
from .mvfunction import SignVector, _length_to_n, digits_of

DEFAULT_SIZE_LIMIT = 3**10


class SizeLimitExceeded(ValueError):
    """p^n is above the configured size guard."""


def size_limit() -> int:
    """Active p^n guard; BENT_SIZE_LIMIT in the environment overrides it."""
    raw = os.environ.get("BENT_SIZE_LIMIT")
    return int(raw) if raw else DEFAULT_SIZE_LIMIT


def _guard(p: int, n: int, limit: int | None) -> None:
    bound = size_limit() if limit is None else limit
    if p**n > bound:
        raise SizeLimitExceeded(f"{p}^{n} exceeds the size limit {bound}")


class Spectrum:
    """Length-p^n vector of CycInt spectral coefficients S(w)."""

    __slots__ = ("p", "n", "entries")

    def __init__(self, p: int, n: int, entries: Iterable[CycInt]):
        entries = tuple(entries)
        if len(entries) != p**n:
            raise ValueError(f"expected {p**n} entries for p={p}, n={n}")
        for e in entries:
            if not isinstance(e, CycInt) or e.p != p:
                raise ValueError(f"entry {e!r} is not in Z[ξ_{p}]")
        self.p = p
        self.n = n
        self.entries = entries

    @classmethod
    def from_strict_exponents(cls, p: int, n: int, exponents: Sequence[int]) -> "Spectrum":
        """S(w) = p^(n/2)·ξ^t(w); n must be even."""
        if n % 2:
            raise ValueError("strict exponent form needs an even variable count")
        scale = p ** (n // 2)
        return cls(p, n, (CycInt.root(p, e) * scale for e in exponents))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> CycInt:
        return self.entries[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return (self.p, self.n, self.entries) == (other.p, other.n, other.entries)

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.entries))

    def __repr__(self) -> str:
        return f"Spectrum({self.p}, {self.n}, [{', '.join(map(str, self.entries))}])"


class VCMatrix:
    """Dense C(n) with entries ξ^⟨j·k⟩."""

    __slots__ = ("p", "n", "rows")

    def __init__(self, p: int, n: int, rows):
        self.p = p
        self.n = n
        self.rows = tuple(tuple(row) for row in rows)

    def __getitem__(self, i: int):
        return self.rows[i]


def build_c(p: int, n: int, limit: int | None = None) -> VCMatrix:
    """C(n) built as the n-fold Kronecker product of C(1)."""
    _guard(p, n, limit)
    roots = [CycInt.root(p, k) for k in range(p)]
    rows = [[roots[0]]]
    for _ in range(n):
        rows = [
            [roots[(j * k) % p] * cell for k in range(p) for cell in row]
            for j in range(p)
            for row in rows
        ]
    return VCMatrix(p, n, rows)


def _as_entries(vec) -> tuple[int, int, tuple[CycInt, ...]]:
    if isinstance(vec, (Spectrum, SignVector)):
        return vec.p, vec.n, tuple(vec.entries)
    seq = tuple(vec)
    if not seq:
        raise ValueError("empty vector")
    p = seq[0].p
    return p, _length_to_n(p, len(seq)), seq


def forward(vec, limit: int | None = None) -> Spectrum:
    """S(w) = Σ_x ξ^(-⟨w·x⟩)·F(x), computed densely and exactly."""
    p, n, entries = _as_entries(vec)
    _guard(p, n, limit)
    size = p**n
    point_digits = [digits_of(x, p, n) for x in range(size)]
    out = []
    for w in range(size):
        wd = point_digits[w]
        acc = CycInt.zero(p)
        for xd, fx in zip(point_digits, entries):
            dot = 0
            for a, b in zip(wd, xd):
                dot += a * b
            acc = acc + fx.mul_root(-dot)
        out.append(acc)
    return Spectrum(p, n, out)


def forward_fast(vec, limit: int | None = None) -> Spectrum:
    """Butterfly-factored forward transform; identical output to forward()."""
    p, n, entries = _as_entries(vec)
    _guard(p, n, limit)
    rows = _apply_stages([e.coeffs for e in entries], p, n, conjugate=True)
    return Spectrum(p, n, (CycInt(p, r) for r in rows))


def inverse(vec, limit: int | None = None) -> list[CycInt]:
    """F = p^(-n)·C(n)·S with exact division; NotDivisible when S is not an image."""
    p, n, entries = _as_entries(vec)
    _guard(p, n, limit)
    rows = _apply_stages([e.coeffs for e in entries], p, n, conjugate=False)
    scale = p**n
    out = []
    for i, r in enumerate(rows):
        value = CycInt(p, r)
        try:
            out.append(value.div_exact_int(scale))
        except NotDivisible as exc:
            raise NotDivisible(
                f"coordinate {i} = {value} is not a multiple of {scale}",
                index=i,
                value=value,
            ) from exc
    return out


def is_flat(vec) -> bool:
    """True iff every |S(w)|² equals p^n."""
    p, n, entries = _as_entries(vec)
    target = CycInt.from_int(p, p**n)
    return all(e.abs_squared() == target for e in entries)


def spectrum_kron(a: Spectrum, b: Spectrum) -> Spectrum:
    """Kronecker product of spectra; first factor owns the high digits."""
    if a.p != b.p:
        raise ValueError(f"radix mismatch: {a.p} vs {b.p}")
    return Spectrum(a.p, a.n + b.n, (u * v for u in a.entries for v in b.entries))


# -- the staged kernel ---------------------------------------------------------

_STAGE_TENSORS: dict[tuple[int, bool], np.ndarray] = {}


def _stage_tensor(p: int, conjugate: bool) -> np.ndarray:
    """T[i, j] = the d×d integer matrix of multiplication by ξ^(∓i·j)."""
    key = (p, conjugate)
    tensor = _STAGE_TENSORS.get(key)
    if tensor is None:
        d = degree(p)
        tensor = np.zeros((p, p, d, d), dtype=np.int64)
        for i in range(p):
            for j in range(p):
                e = (-i * j) % p if conjugate else (i * j) % p
                for col in range(d):
                    unit = tuple(1 if t == col else 0 for t in range(d))
                    tensor[i, j, :, col] = rotate_coeffs(p, unit, e)
        _STAGE_TENSORS[key] = tensor
    return tensor


def _apply_stages(rows: list[tuple], p: int, n: int, conjugate: bool) -> list[tuple]:
    if n == 0:
        return list(rows)
    maxabs = max((abs(c) for row in rows for c in row), default=0)
    # per stage each output coefficient is a sum of p rotations, each of
    # which mixes at most two input coefficients: growth factor <= 2p
    if maxabs * (2 * p) ** n < 2**62:
        return _apply_stages_numpy(rows, p, n, conjugate)
    return _apply_stages_python(rows, p, n, conjugate)


def _apply_stages_numpy(rows: list[tuple], p: int, n: int, conjugate: bool) -> list[tuple]:
    d = degree(p)
    tensor = _stage_tensor(p, conjugate)
    arr = np.array(rows, dtype=np.int64)
    size = p**n
    for s in range(n):
        lead = p**s
        trail = size // (lead * p)
        view = arr.reshape(lead, p, trail, d)
        arr = np.einsum("ijce,ajbe->aibc", tensor, view).reshape(size, d)
    return [tuple(int(c) for c in row) for row in arr]


def _apply_stages_python(rows: list[tuple], p: int, n: int, conjugate: bool) -> list[tuple]:
    d = degree(p)
    exps = [[(-i * j) % p if conjugate else (i * j) % p for j in range(p)] for i in range(p)]
    size = p**n
    for s in range(n):
        lead = p**s
        trail = size // (lead * p)
        out = list(rows)
        for a in range(lead):
            base = a * p * trail
            for b in range(trail):
                idx = [base + j * trail + b for j in range(p)]
                spokes = [rows[i] for i in idx]
                for i in range(p):
                    acc = [0] * d
                    for j in range(p):
                        rot = rotate_coeffs(p, spokes[j], exps[i][j])
                        for t in range(d):
                            acc[t] += rot[t]
                    out[idx[i]] = tuple(acc)
        rows = out
    return rows


# -- spectrum file format ------------------------------------------------------


def format_spectrum_lines(s: Spectrum) -> list[str]:
    """Header 'p n' then one CycInt per line."""
    return [f"{s.p} {s.n}"] + [str(e) for e in s.entries]


def parse_spectrum_lines(lines: Sequence[str]) -> Spectrum:
    """Accepts the entry-per-line form or the compact 'exp:d0d1…' strict form."""
    from .cyclotomic import parse_cyc

    meaningful = [ln.strip() for ln in lines if ln.strip()]
    if not meaningful:
        raise ValueError("empty spectrum file")
    header = meaningful[0].split()
    if len(header) != 2:
        raise ValueError(f"expected 'p n' header, got {meaningful[0]!r}")
    p, n = int(header[0]), int(header[1])
    body = meaningful[1:]
    if len(body) == 1 and body[0].startswith("exp:"):
        digits = body[0][4:]
        if len(digits) != p**n:
            raise ValueError(f"expected {p**n} exponent digits, got {len(digits)}")
        return Spectrum.from_strict_exponents(p, n, [int(ch) for ch in digits])
    if len(body) != p**n:
        raise ValueError(f"expected {p**n} entries, got {len(body)}")
    return Spectrum(p, n, (parse_cyc(p, ln) for ln in body))
