"""Matroids represented by explicit basis families.

Conventions used throughout the package:

  * The ground set is E = {0, ..., n-1}.  Subsets of E are int bitmasks
    (bit i set <=> element i in the subset), see `bitset`.
  * A matroid is stored as its full family of bases, each an n-bit mask of
    popcount `rank`.  Every query (rank, closure, minors, duals, circuits)
    is a short popcount loop over that family; this is exact and more than
    fast enough at the target scale (general matroids up to ~20 elements).
  * rank(A) = max over bases B of |A & B|, which equals the matroid rank
    of A because every independent set extends to a basis.

Minors (`delete`/`contract`/`restrict`) reindex the surviving elements to
{0, ..., n'-1} order-preservingly and record the relabeling in
`element_map` (new index -> old element).  `element_map` is ignored by
equality and hashing: two matroids are equal iff they have the same ground
set size, rank, and basis family.
"""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations
from math import comb

from .bitset import bits, drop_bit, mask_of
from .errors import (
    EmptyBasesError,
    ExchangeViolationError,
    LimitExceededError,
    WrongBasisSizeError,
)

# Full-table methods (independence/rank tables, circuits) allocate 2^n bytes.
TABLE_LIMIT = 20

# Spanning-forest enumeration cutoff for graphic().
GRAPHIC_EDGE_LIMIT = 20


class Matroid:
    """An immutable matroid given by its bases.

    The constructor performs only cheap structural checks (sizes, ranges,
    non-emptiness); it trusts the caller that the family satisfies basis
    exchange.  Use `from_bases` for untrusted input -- it additionally runs
    the full exchange check -- or call `check_exchange()` explicitly.
    """

    __slots__ = ("n", "rank", "bases", "element_map", "_cache")

    def __init__(self, n: int, rank: int, bases: Iterable[int],
                 element_map: tuple[int, ...] | None = None):
        bases = frozenset(bases)
        if not bases:
            raise EmptyBasesError("a matroid needs at least one basis")
        if not 0 <= rank <= n:
            raise ValueError(f"rank {rank} out of range for n={n}")
        full = (1 << n) - 1
        for b in bases:
            if b & ~full:
                raise ValueError(f"basis mask {b:#x} has elements >= n={n}")
            if b.bit_count() != rank:
                raise WrongBasisSizeError(
                    f"basis {tuple(bits(b))} has {b.bit_count()} elements, "
                    f"expected rank {rank}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "bases", bases)
        object.__setattr__(self, "element_map", element_map)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("Matroid instances are immutable")

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return (self.n == other.n and self.rank == other.rank
                and self.bases == other.bases)

    def __hash__(self):
        return hash((self.n, self.rank, self.bases))

    def __repr__(self):
        return f"Matroid(n={self.n}, rank={self.rank}, bases={len(self.bases)})"

    # -- rank oracle ---------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_subset(self, a: int):
        if a < 0 or a & ~self.full_mask:
            raise ValueError(f"subset mask {a:#x} not within ground set of size {self.n}")

    def rank_of(self, a: int) -> int:
        """Rank of the subset `a` (an n-bit mask)."""
        self._check_subset(a)
        if a == 0:
            return 0
        return max((b & a).bit_count() for b in self.bases)

    def is_independent(self, a: int) -> bool:
        return self.rank_of(a) == a.bit_count()

    def closure(self, a: int) -> int:
        """Smallest flat containing `a`: all e with rank(a|{e}) = rank(a)."""
        self._check_subset(a)
        r = self.rank_of(a)
        cl = a
        rest = self.full_mask & ~a
        while rest:
            low = rest & -rest
            rest ^= low
            if self.rank_of(a | low) == r:
                cl |= low
        return cl

    # -- loops, coloops, connectivity -----------------------------------

    def loops(self) -> int:
        """Mask of elements contained in no basis."""
        union = 0
        for b in self.bases:
            union |= b
        return self.full_mask & ~union

    def coloops(self) -> int:
        """Mask of elements contained in every basis."""
        inter = self.full_mask
        for b in self.bases:
            inter &= b
        return inter

    def is_clean(self) -> bool:
        """No loops and no coloops."""
        return self.loops() == 0 and self.coloops() == 0

    def independence_table(self) -> bytearray:
        """indep[mask] = 1 iff mask is independent, for every mask < 2^n."""
        if self.n > TABLE_LIMIT:
            raise LimitExceededError(f"n={self.n} exceeds table limit {TABLE_LIMIT}")
        cached = self._cache.get("indep")
        if cached is not None:
            return cached
        indep = bytearray(1 << self.n)
        stack = []
        for b in self.bases:
            if not indep[b]:
                indep[b] = 1
                stack.append(b)
        while stack:
            m = stack.pop()
            rest = m
            while rest:
                low = rest & -rest
                rest ^= low
                child = m ^ low
                if not indep[child]:
                    indep[child] = 1
                    stack.append(child)
        self._cache["indep"] = indep
        return indep

    def rank_table(self) -> bytearray:
        """rank[mask] for every mask < 2^n, by DP over the independence table."""
        cached = self._cache.get("ranktab")
        if cached is not None:
            return cached
        indep = self.independence_table()
        table = bytearray(1 << self.n)
        for m in range(1, 1 << self.n):
            if indep[m]:
                table[m] = m.bit_count()
            else:
                # rank of a dependent set equals the max over single removals
                best = 0
                rest = m
                while rest:
                    low = rest & -rest
                    rest ^= low
                    r = table[m ^ low]
                    if r > best:
                        best = r
                table[m] = best
        self._cache["ranktab"] = table
        return table

    def circuits(self) -> list[int]:
        """All circuits (minimal dependent sets) as masks, ascending."""
        cached = self._cache.get("circuits")
        if cached is not None:
            return cached
        indep = self.independence_table()
        out = []
        for m in range(1, 1 << self.n):
            if indep[m]:
                continue
            rest = m
            minimal = True
            while rest:
                low = rest & -rest
                rest ^= low
                if not indep[m ^ low]:
                    minimal = False
                    break
            if minimal:
                out.append(m)
        self._cache["circuits"] = out
        return out

    def components(self) -> list[int]:
        """Connected components as masks, ordered by smallest element.

        Two elements are in one component iff some circuit contains both;
        loops and coloops end up as singleton components.
        """
        cached = self._cache.get("components")
        if cached is not None:
            return cached
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.circuits():
            els = bits(c)
            r0 = find(els[0])
            for e in els[1:]:
                parent[find(e)] = r0
        groups: dict[int, int] = {}
        for e in range(self.n):
            r = find(e)
            groups[r] = groups.get(r, 0) | (1 << e)
        comps = sorted(groups.values(), key=lambda m: m & -m)
        self._cache["components"] = comps
        return comps

    def is_connected(self) -> bool:
        return self.n >= 1 and len(self.components()) == 1

    def parallel_classes(self) -> list[int]:
        """Parallel classes of the non-loop elements, as masks.

        e and f are parallel iff rank({e,f}) = 1, i.e. no basis contains both.
        """
        cached = self._cache.get("parclasses")
        if cached is not None:
            return cached
        loops = self.loops()
        nonloops = self.full_mask & ~loops
        seen = 0
        classes = []
        for e in range(self.n):
            bit = 1 << e
            if bit & (loops | seen):
                continue
            co = 0
            for b in self.bases:
                if b & bit:
                    co |= b
            cls = bit | (nonloops & ~co)
            classes.append(cls)
            seen |= cls
        self._cache["parclasses"] = classes
        return classes

    def is_uniform(self) -> bool:
        """True iff the bases are all rank-sized subsets of the ground set."""
        return len(self.bases) == comb(self.n, self.rank)

    # -- minors, duals, sums ---------------------------------------------

    def delete(self, e: int) -> Matroid:
        """Delete element e; ground set reindexed, mapping in element_map."""
        if not 0 <= e < self.n:
            raise IndexError(f"element {e} out of range for n={self.n}")
        bit = 1 << e
        keep = [b for b in self.bases if not b & bit]
        if keep:
            new_bases = [drop_bit(b, e) for b in keep]
            new_rank = self.rank
        else:  # e is a coloop
            new_bases = [drop_bit(b ^ bit, e) for b in self.bases]
            new_rank = self.rank - 1
        emap = tuple(i for i in range(self.n) if i != e)
        return Matroid(self.n - 1, new_rank, new_bases, element_map=emap)

    def contract(self, e: int) -> Matroid:
        """Contract element e (deletion if e is a loop); reindexed as in delete."""
        if not 0 <= e < self.n:
            raise IndexError(f"element {e} out of range for n={self.n}")
        bit = 1 << e
        if self.loops() & bit:
            return self.delete(e)
        new_bases = [drop_bit(b ^ bit, e) for b in self.bases if b & bit]
        emap = tuple(i for i in range(self.n) if i != e)
        return Matroid(self.n - 1, self.rank - 1, new_bases, element_map=emap)

    def restrict(self, a: int) -> Matroid:
        """Restriction to the subset `a`, reindexed; bases are the maximal
        intersections of bases with `a`."""
        self._check_subset(a)
        inter = {b & a for b in self.bases}
        r = max(m.bit_count() for m in inter)
        kept = tuple(bits(a))
        new_bases = {_compress(m, kept) for m in inter if m.bit_count() == r}
        return Matroid(len(kept), r, new_bases, element_map=kept)

    def dual(self) -> Matroid:
        """Matroid whose bases are the complements of this one's bases."""
        full = self.full_mask
        return Matroid(self.n, self.n - self.rank, (full ^ b for b in self.bases))

    def direct_sum(self, other: Matroid) -> Matroid:
        """Direct sum; `other`'s elements are shifted up by self.n."""
        shift = self.n
        new_bases = [b1 | (b2 << shift) for b1 in self.bases for b2 in other.bases]
        return Matroid(self.n + other.n, self.rank + other.rank, new_bases)

    # -- validation -----------------------------------------------------

    def check_exchange(self) -> None:
        """Verify the basis exchange axiom over all basis pairs; raise with a
        witness (B1, B2, e) on the first failure."""
        family = self.bases
        ordered = sorted(family)
        for b1 in ordered:
            for b2 in ordered:
                if b1 == b2:
                    continue
                only1 = b1 & ~b2
                cand = b2 & ~b1
                rest = only1
                while rest:
                    low = rest & -rest
                    rest ^= low
                    removed = b1 ^ low
                    swap = cand
                    ok = False
                    while swap:
                        f = swap & -swap
                        swap ^= f
                        if (removed | f) in family:
                            ok = True
                            break
                    if not ok:
                        raise ExchangeViolationError(
                            bits(b1), bits(b2), low.bit_length() - 1)

    # -- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        """matroid-bases-v1 record, in canonical order (bases sorted
        ascending within, lexicographically across)."""
        basis_lists = sorted(bits(b) for b in self.bases)
        return {"format": "matroid-bases-v1", "n": self.n, "rank": self.rank,
                "bases": basis_lists}


def _compress(mask: int, kept: tuple[int, ...]) -> int:
    out = 0
    for new, old in enumerate(kept):
        if mask >> old & 1:
            out |= 1 << new
    return out


def matroid_from_dict(d: dict) -> Matroid:
    """Parse and fully validate a matroid-bases-v1 record."""
    if d.get("format") != "matroid-bases-v1":
        raise ValueError(f"not a matroid-bases-v1 record: {d.get('format')!r}")
    return from_bases(int(d["n"]), int(d["rank"]), d["bases"])


# -- constructors --------------------------------------------------------

def from_bases(n: int, rank: int, bases: Iterable[Iterable[int]]) -> Matroid:
    """Build a matroid from explicit bases, validating the exchange axiom."""
    masks = []
    for b in bases:
        subset = tuple(b)
        for e in subset:
            if not 0 <= e < n:
                raise ValueError(f"element {e} outside ground set of size {n}")
        masks.append(mask_of(subset))
    m = Matroid(n, rank, masks)
    m.check_exchange()
    return m


def uniform(k: int, n: int) -> Matroid:
    """Uniform matroid U_{k,n}: every k-subset is a basis."""
    if not 0 <= k <= n:
        raise ValueError(f"uniform({k},{n}): need 0 <= k <= n")
    return Matroid(n, k, (mask_of(c) for c in combinations(range(n), k)))


def minimal(k: int, n: int) -> Matroid:
    """Minimal matroid T_{k,n}: the unique connected rank-k matroid on n
    elements with the minimum basis count k(n-k)+1.

    Graphically a (k+1)-cycle with one edge replaced by n-k parallel copies;
    here elements 0..k-1 are the cycle path and k..n-1 the parallel class.
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"minimal({k},{n}): need 1 <= k <= n-1")
    path = (1 << k) - 1
    bases = [path]
    for i in range(k):
        for p in range(k, n):
            bases.append((path ^ (1 << i)) | (1 << p))
    return Matroid(n, k, bases)


def rank2_from_partition(class_sizes: Iterable[int]) -> Matroid:
    """Loopless rank-2 matroid with the given parallel-class sizes; bases are
    the pairs taking their two elements from different classes."""
    sizes = list(class_sizes)
    if len(sizes) < 2:
        raise ValueError("need at least 2 parallel classes for rank 2")
    if any(s < 1 for s in sizes):
        raise ValueError("every class must have at least one element")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    n = starts[-1]
    bases = []
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for e in range(starts[i], starts[i + 1]):
                for f in range(starts[j], starts[j + 1]):
                    bases.append((1 << e) | (1 << f))
    return Matroid(n, 2, bases)


def graphic(g, limit: int = GRAPHIC_EDGE_LIMIT) -> Matroid:
    """Cycle matroid of a multigraph: elements are edges, bases the maximum
    spanning forests.  Graph self-loops become matroid loops."""
    if len(g.edges) > limit:
        raise LimitExceededError(
            f"{len(g.edges)} edges exceed the brute-force limit {limit}")
    rank = g.vertex_count - g.component_count()
    return Matroid(len(g.edges), rank, g.max_spanning_forests())
