"""Merino-Welsh inequality checks and the exhaustive rank-2 verification.

For a loopless and coloopless matroid the three inequality forms are

    max(T(2,0), T(0,2)) >= T(1,1)          (max)
    T(2,0) + T(0,2)     >= 2 T(1,1)        (additive)
    T(2,0) *  T(0,2)    >= T(1,1)^2        (multiplicative)

and multiplicative implies additive implies max (AM-GM plus nonnegativity).
All arithmetic is exact.

Rank-2 matroids without loops are exactly "parallel classes + all cross
pairs as bases", so their isomorphism classes are integer partitions of n
into at least two parts; a coloop occurs precisely when there are exactly
two classes and one is a singleton.  Enumerating partitions instead of
labeled matroids keeps the n <= 12 sweep at 77 partitions rather than
astronomically many labeled families, without changing any verdict.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb

from .bitset import bits
from .errors import ColoopsPresentError, LoopsPresentError
from .flats import is_split
from .isomorphism import certificates_match
from .matroid import Matroid, minimal, rank2_from_partition
from .tutte import tutte_dc, tutte_subset_sum


@dataclass(frozen=True)
class MWReport:
    """The three Tutte evaluations and the verdicts for each inequality."""

    n: int
    rank: int
    t20: int
    t02: int
    t11: int
    max_ok: bool
    add_ok: bool
    mult_ok: bool

    def to_dict(self) -> dict:
        return {"format": "mw-v1", "n": self.n, "rank": self.rank,
                "t20": str(self.t20), "t02": str(self.t02), "t11": str(self.t11),
                "max": self.max_ok, "add": self.add_ok, "mult": self.mult_ok}

    @property
    def all_ok(self) -> bool:
        return self.max_ok and self.add_ok and self.mult_ok


def report_from_evaluations(n: int, rank: int, t20: int, t02: int, t11: int) -> MWReport:
    return MWReport(n=n, rank=rank, t20=t20, t02=t02, t11=t11,
                    max_ok=max(t20, t02) >= t11,
                    add_ok=t20 + t02 >= 2 * t11,
                    mult_ok=t20 * t02 >= t11 * t11)


def check_mw(m: Matroid, engine: str = "dc") -> MWReport:
    """Evaluate the three points and decide all three inequalities.

    Requires a loopless and coloopless matroid; raises naming the offending
    elements otherwise.
    """
    loops = m.loops()
    if loops:
        raise LoopsPresentError(bits(loops))
    coloops = m.coloops()
    if coloops:
        raise ColoopsPresentError(bits(coloops))
    if engine == "dc":
        t = tutte_dc(m)
    elif engine == "subset":
        t = tutte_subset_sum(m)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return report_from_evaluations(m.n, m.rank,
                                   t.evaluate(2, 0), t.evaluate(0, 2),
                                   t.evaluate(1, 1))


# -- exhaustive rank-2 verification ----------------------------------------

def partitions_descending(n: int, max_part: int | None = None):
    """Integer partitions of n in decreasing-lex order, parts descending."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_descending(n - first, first):
            yield (first,) + rest


def rank2_census_partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of n indexing the loopless coloopless rank-2 matroids:
    at least two parts, excluding exactly-two-parts-with-a-singleton (the
    coloop pattern)."""
    out = []
    for p in partitions_descending(n):
        if len(p) < 2:
            continue
        if len(p) == 2 and p[1] == 1:
            continue
        out.append(p)
    return out


@dataclass(frozen=True)
class Rank2Census:
    n: int
    partitions: tuple[tuple[int, ...], ...]
    reports: tuple[MWReport, ...]
    all_pass: bool

    def to_dict(self) -> dict:
        return {"format": "rank2-census-v1", "n": self.n,
                "partitions": len(self.partitions), "all_pass": self.all_pass}


def _census_entry(partition: tuple[int, ...]) -> MWReport:
    m = rank2_from_partition(partition)
    # the coloop-exclusion predicate is derived, so make it self-checking
    if m.coloops():
        raise ColoopsPresentError(bits(m.coloops()))
    if m.loops():
        raise LoopsPresentError(bits(m.loops()))
    return check_mw(m)


def verify_rank2_exhaustive(n_max: int, threads: int = 1) -> list[Rank2Census]:
    """One census per 2 <= n <= n_max over all rank-2 isomorphism classes."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    censuses = []
    for n in range(2, n_max + 1):
        parts = rank2_census_partitions(n)
        if threads > 1 and parts:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                reports = list(pool.map(_census_entry, parts))
        else:
            reports = [_census_entry(p) for p in parts]
        censuses.append(Rank2Census(
            n=n, partitions=tuple(parts), reports=tuple(reports),
            all_pass=all(r.mult_ok for r in reports)))
    return censuses


def rank2_threshold_check(n: int) -> bool:
    """Whether C(n,2)^2 <= 2^n; true from n = 13 on, which is why the
    exhaustive rank-2 sweep only needs to reach n = 12."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return comb(n, 2) ** 2 <= 2 ** n


# -- closed-form family suite ----------------------------------------------

@dataclass(frozen=True)
class MinimalFamilyRow:
    k: int
    n: int
    bases_ok: bool
    dual_ok: bool
    connected_ok: bool
    split_ok: bool
    mult_ok: bool

    @property
    def ok(self) -> bool:
        return (self.bases_ok and self.dual_ok and self.connected_ok
                and self.split_ok and self.mult_ok)


@dataclass(frozen=True)
class MinimalFamilySummary:
    rows: tuple[MinimalFamilyRow, ...]
    all_ok: bool


def minimal_family_suite(k_max: int, n_max: int) -> MinimalFamilySummary:
    """Check the minimal matroids T_{k,n} for 1 <= k <= min(k_max, n-1),
    n <= n_max: basis count k(n-k)+1, dual certificate matches T_{n-k,n},
    connectivity, split classification, and the multiplicative inequality."""
    if n_max > 14:
        raise ValueError("n_max above 14 is past the intended desk scale")
    rows = []
    for n in range(2, n_max + 1):
        for k in range(1, min(k_max, n - 1) + 1):
            m = minimal(k, n)
            rows.append(MinimalFamilyRow(
                k=k, n=n,
                bases_ok=len(m.bases) == k * (n - k) + 1,
                dual_ok=certificates_match(m.dual(), minimal(n - k, n)),
                connected_ok=m.is_connected(),
                split_ok=is_split(m),
                mult_ok=check_mw(m).mult_ok,
            ))
    return MinimalFamilySummary(rows=tuple(rows), all_ok=all(r.ok for r in rows))
