"""Index-set arithmetic on Python ints.

A point set of a space with n points is an int whose bit i is set when point i
belongs to the set. Inclusion is ``a & b == a``; meet and join are ``&`` and ``|``.
"""

from collections.abc import Iterable, Iterator

Mask = int


def mask_of(indices: Iterable[int]) -> Mask:
    """Build a mask from point indices."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def bits(mask: Mask) -> Iterator[int]:
    """Yield the set indices of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def indices(mask: Mask) -> tuple[int, ...]:
    return tuple(bits(mask))


def popcount(mask: Mask) -> int:
    return mask.bit_count()


def is_subset(a: Mask, b: Mask) -> bool:
    """True when a ⊑ b."""
    return a & b == a


def canonical_key(mask: Mask) -> tuple[int, tuple[int, ...]]:
    """Sort key of the canonical open order: cardinality, then lexicographic indices."""
    return (mask.bit_count(), indices(mask))


def full_mask(n: int) -> Mask:
    return (1 << n) - 1


def join_all(masks: Iterable[Mask]) -> Mask:
    result = 0
    for m in masks:
        result |= m
    return result


def subsets_of(mask: Mask) -> Iterator[Mask]:
    """Yield every submask of mask (including 0 and mask itself)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
