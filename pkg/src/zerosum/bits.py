"""Helpers for sets of small non-negative integers stored as int bitmasks."""

from __future__ import annotations

from typing import Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def rotate_bits(mask: int, a: int, n: int) -> int:
    """Cyclic shift of an n-bit mask by ``a``: the set ``{s + a mod n}``."""
    if a == 0:
        return mask
    full = (1 << n) - 1
    return ((mask << a) | (mask >> (n - a))) & full
