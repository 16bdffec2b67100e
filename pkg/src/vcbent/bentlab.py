"""Bentness predicates over exact circular spectra.

A p-valued f is bent iff every coefficient of the circular spectrum of its
sign ξ^f has |S(w)|² = p^n ("flat").  Flatness is necessary but NOT
sufficient for a candidate spectrum vector: recovering a function also
needs the inverse transform to divide exactly and the result to be a sign
vector, and spectrum_is_bent() reports the first stage that fails.

Strict bentness additionally asks S(w) = p^(n/2)·ξ^t(w) for every w; the
exponent function t is the dual.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cyclotomic import CycInt, NotAUnitRoot, NotDivisible, _root_coeffs
from .mvfunction import MvFunction, NotASign, add_constant, digits_of, sign_of, try_from_sign
from .vctransform import Spectrum, inverse, is_flat


class NotStrict(ValueError):
    """Spectrum is flat-magnitude but not p^(n/2) times pure powers of ξ."""


class NotAFunction(ValueError):
    """Negated sign vector is not the sign of any p-valued function."""

    def __init__(self, message: str, witness: CycInt):
        super().__init__(message)
        self.witness = witness


class NotBentSpectrum(ValueError):
    """Candidate spectrum recovers no function; stage pinpoints the failure."""

    STAGES = ("not-flat", "not-divisible", "not-a-sign")

    def __init__(self, stage: str, index: int, value: CycInt):
        super().__init__(f"{stage} at index {index}: {value}")
        self.stage = stage
        self.witness = (index, value)


@dataclass(frozen=True)
class BentVerdict:
    is_flat: bool
    is_bent: bool
    is_strict_bent: bool
    failure_witness: tuple[int, CycInt] | None = None

    def to_json_dict(self) -> dict:
        witness = None
        if self.failure_witness is not None:
            witness = {"index": self.failure_witness[0], "value": str(self.failure_witness[1])}
        return {
            "flat": self.is_flat,
            "bent": self.is_bent,
            "strict": self.is_strict_bent,
            "witness": witness,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


# dot-product rows ⟨w·x⟩ are shared by every spectrum over the same (p, n)
_DOT_ROWS: dict[tuple[int, int], dict[int, tuple]] = {}
_DIGITS: dict[tuple[int, int], list] = {}


def _point_digits(p: int, n: int) -> list:
    key = (p, n)
    table = _DIGITS.get(key)
    if table is None:
        table = [digits_of(x, p, n) for x in range(p**n)]
        _DIGITS[key] = table
    return table


def _dot_row(p: int, n: int, w: int) -> tuple:
    rows = _DOT_ROWS.setdefault((p, n), {})
    row = rows.get(w)
    if row is None:
        pts = _point_digits(p, n)
        wd = pts[w]
        row = tuple(sum(a * b for a, b in zip(wd, xd)) % p for xd in pts)
        rows[w] = row
    return row


def _spectrum_entry(p: int, values, row, roots) -> CycInt:
    # S(w) = Σ_x ξ^(f(x) - ⟨w·x⟩): tally the exponents, then one weighted sum.
    # fx - dx lies in -(p-1)..(p-1); Python's negative indexing folds mod p.
    counts = [0] * p
    for fx, dx in zip(values, row):
        counts[fx - dx] += 1
    d = len(roots[0])
    return CycInt(p, tuple(sum(counts[k] * roots[k][i] for k in range(p)) for i in range(d)))


def circular_spectrum(f: MvFunction) -> Spectrum:
    """The spectrum of ξ^f; value-identical to forward(sign_of(f))."""
    p, n = f.p, f.n
    roots = _root_coeffs(p)
    entries = [
        _spectrum_entry(p, f.values, _dot_row(p, n, w), roots) for w in range(p**n)
    ]
    return Spectrum(p, n, entries)


def is_bent(f: MvFunction) -> BentVerdict:
    """Flat/bent/strict classification with the first flatness witness."""
    p, n = f.p, f.n
    roots = _root_coeffs(p)
    target = CycInt.from_int(p, p**n)
    entries = []
    for w in range(p**n):
        s = _spectrum_entry(p, f.values, _dot_row(p, n, w), roots)
        if s.abs_squared() != target:
            return BentVerdict(False, False, False, failure_witness=(w, s))
        entries.append(s)
    spectrum = Spectrum(p, n, entries)
    try:
        strict_exponents(spectrum)
        strict = True
    except NotStrict:
        strict = False
    return BentVerdict(True, True, strict)


def spectrum_is_bent(s: Spectrum) -> MvFunction:
    """Recover g with spectrum s, or raise NotBentSpectrum at the first bad stage."""
    target = CycInt.from_int(s.p, s.p**s.n)
    for w, e in enumerate(s.entries):
        if e.abs_squared() != target:
            raise NotBentSpectrum("not-flat", w, e)
    try:
        entries = inverse(s)
    except NotDivisible as exc:
        raise NotBentSpectrum("not-divisible", exc.index, exc.value) from exc
    try:
        return try_from_sign(entries)
    except NotASign as exc:
        raise NotBentSpectrum("not-a-sign", exc.index, exc.value) from exc


def strict_exponents(s: Spectrum) -> tuple[int, ...]:
    """t with S(w) = p^(n/2)·ξ^t(w) for all w; NotStrict otherwise."""
    if s.n % 2:
        raise NotStrict(f"odd variable count {s.n}")
    scale = s.p ** (s.n // 2)
    out = []
    for w, e in enumerate(s.entries):
        try:
            rs = e.div_exact_int(scale).as_root_scalar()
        except (NotDivisible, NotAUnitRoot) as exc:
            raise NotStrict(f"entry {w} = {e} is not {scale}·ξ^k") from exc
        if rs.sign != 1:
            raise NotStrict(f"entry {w} = {e} is {scale}·(-ξ^{rs.exponent})")
        out.append(rs.exponent)
    return tuple(out)


def dual(f: MvFunction) -> MvFunction:
    """The exponent function of a strict bent spectrum; itself bent."""
    t = strict_exponents(circular_spectrum(f))
    return MvFunction(f.p, f.n, t)


def negate_classify(f: MvFunction) -> MvFunction:
    """Classify -ξ^f: a p/2 shift of f when p is even, NotAFunction when odd."""
    neg_first = -CycInt.root(f.p, f.values[0])
    if f.p % 2:
        raise NotAFunction(
            f"-ξ^{f.values[0]} = ξ^({f.values[0]}+{f.p}/2) has no exponent in Z_{f.p}",
            witness=neg_first,
        )
    g = add_constant(f, f.p // 2)
    expected = [-e for e in sign_of(f).entries]
    if list(sign_of(g).entries) != expected:
        raise AssertionError("negation invariant violated")  # unreachable
    return g
