"""Helpers for vertex sets stored as int bitmasks."""


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices) -> int:
    """Bitmask with the given positions set."""
    m = 0
    for i in indices:
        m |= 1 << i
    return m
