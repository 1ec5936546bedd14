"""Subsets of {0,...,n-1} as int bitmasks."""

from __future__ import annotations

from collections.abc import Iterable


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def bits(mask: int) -> list[int]:
    """Indices of the set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def drop_bit(mask: int, e: int) -> int:
    """Remove position e and shift everything above it down one slot."""
    low = mask & ((1 << e) - 1)
    return low | ((mask >> (e + 1)) << e)


def compress(mask: int, kept: tuple[int, ...]) -> int:
    """Re-express mask on the relabeled ground set given by `kept` (ascending)."""
    out = 0
    for new, old in enumerate(kept):
        if mask >> old & 1:
            out |= 1 << new
    return out
