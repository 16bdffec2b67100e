"""Independent brute-force ground truth: exhaustive bent-function scans.

all_bent() walks every value vector in base-p counter order and keeps the
functions whose circular spectrum is flat.  It shares nothing with the
constructive generator, so set equality between the two certifies both.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from .bentlab import is_bent
from .mvfunction import MvFunction

# p^(p^n) candidate functions must stay enumerable at desk scale
SCAN_GUARD = 2**20


class ScanTooLarge(ValueError):
    pass


def _scan_chunk(args: tuple[int, int, int, int]) -> list[tuple[int, ...]]:
    p, n, start, stop = args
    size = p**n
    found = []
    for code in range(start, stop):
        values = [0] * size
        c = code
        for i in range(size - 1, -1, -1):
            c, values[i] = divmod(c, p)
        f = MvFunction(p, n, values)
        if is_bent(f).is_bent:
            found.append(f.values)
    return found


def all_bent(p: int = 3, n: int = 2, jobs: int = 1) -> set[MvFunction]:
    """Every p-valued n-place function with a flat circular spectrum."""
    size = p**n
    total = p**size
    if total > SCAN_GUARD:
        raise ScanTooLarge(f"{p}^{size} = {total} candidate functions exceed {SCAN_GUARD}")
    if jobs <= 1:
        found = _scan_chunk((p, n, 0, total))
    else:
        chunk = -(-total // jobs)
        ranges = [(p, n, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
        found = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_scan_chunk, ranges):
                found.extend(part)
    return {MvFunction(p, n, values) for values in found}


def all_bent_1place() -> set[MvFunction]:
    """All ternary one-place functions with |S(w)|² = 3 for every w."""
    out = set()
    for values in product(range(3), repeat=3):
        f = MvFunction(3, 1, values)
        if is_bent(f).is_bent:
            out.add(f)
    return out


@dataclass(frozen=True)
class CertifyReport:
    missing: tuple[MvFunction, ...]  # in reference, absent from generated
    extra: tuple[MvFunction, ...]  # generated, absent from reference

    @property
    def passed(self) -> bool:
        return not self.missing and not self.extra

    def summary(self) -> str:
        if self.passed:
            return "certified: sets identical"
        return f"difference: {len(self.missing)} missing, {len(self.extra)} extra"


def certify(generated: set[MvFunction], reference: set[MvFunction]) -> CertifyReport:
    """Symmetric-difference listing; empty difference = pass."""
    missing = tuple(sorted(reference - generated))
    extra = tuple(sorted(generated - reference))
    return CertifyReport(missing, extra)
