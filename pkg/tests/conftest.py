"""Shared fixtures and independent desk oracles.

The oracles here deliberately avoid the package's optimized code paths
(rank tables, canonical memo keys) so that agreement is a real cross-check
rather than the same computation twice.
"""

from __future__ import annotations

from itertools import combinations, permutations

import pytest

from splitmw import Multigraph, graphic
from splitmw.bitset import bits, mask_of
from splitmw.corpus import doubled_doubled_4cycle, figure_minimal_graph, k4_graph


@pytest.fixture
def k4():
    return graphic(k4_graph())


@pytest.fixture
def dd4():
    return graphic(doubled_doubled_4cycle())


@pytest.fixture
def figure_graph():
    return figure_minimal_graph()


@pytest.fixture
def triangle():
    return Multigraph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def fano():
    """The Fano plane: non-graphic, non-uniform, paving, rank 3 on 7 points."""
    from splitmw import from_bases
    lines = [{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
             {1, 4, 6}, {2, 3, 6}, {2, 4, 5}]
    bases = [c for c in combinations(range(7), 3) if set(c) not in lines]
    return from_bases(7, 3, bases)


def brute_isomorphic(m1, m2) -> bool:
    """Plain permutation sweep; only sensible for n <= 7."""
    if (m1.n, m1.rank, len(m1.bases)) != (m2.n, m2.rank, len(m2.bases)):
        return False
    target = m2.bases
    for perm in permutations(range(m1.n)):
        remapped = set()
        for b in m1.bases:
            nb = 0
            for e in bits(b):
                nb |= 1 << perm[e]
            remapped.add(nb)
        if remapped == target:
            return True
    return False


def connected_by_partition_oracle(m) -> bool:
    """A matroid is connected iff no proper nonempty subset A satisfies
    rank(A) + rank(E\\A) = rank(E)."""
    if m.n == 0:
        return False
    full = m.full_mask
    for a in range(1, full):
        if m.rank_of(a) + m.rank_of(full ^ a) == m.rank:
            return False
    return True


def oracle_tutte_coeffs(m) -> dict[tuple[int, int], int]:
    """Corank-nullity sum evaluated from scratch with itertools, producing a
    sparse {(i, j): coeff} dict.  No rank tables, no recursion."""
    n, r = m.n, m.rank
    poly: dict[tuple[int, int], int] = {}
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            a = mask_of(subset)
            ra = max((b & a).bit_count() for b in m.bases) if a else 0
            da, db = r - ra, size - ra
            # accumulate (x-1)^da * (y-1)^db term by binomial expansion
            from math import comb
            for i in range(da + 1):
                ci = comb(da, i) * ((-1) ** (da - i))
                for j in range(db + 1):
                    key = (i, j)
                    poly[key] = poly.get(key, 0) + ci * comb(db, j) * ((-1) ** (db - j))
    return {k: v for k, v in poly.items() if v}


def dense_to_sparse(t) -> dict[tuple[int, int], int]:
    return {(i, j): c
            for i, row in enumerate(t.coeffs)
            for j, c in enumerate(row) if c}
