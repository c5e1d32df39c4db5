"""Lazy, deterministic iterators over the index sets of the catalog sums."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from itertools import product

VecIndex = tuple[int, ...]


def compositions(n: int, s: int) -> Iterator[tuple[int, ...]]:
    """All s-tuples of nonnegative integers summing to n, in colexicographic order.

    ``compositions(0, 0)`` yields the empty tuple; s = 0 with n > 0 is rejected.
    """
    if n < 0 or s < 0:
        raise ValueError(f"compositions need n >= 0 and s >= 0, got n={n}, s={s}")
    if s == 0 and n > 0:
        raise ValueError(f"no composition of {n} into zero parts")
    return _compositions(n, s)


def _compositions(n: int, s: int) -> Iterator[tuple[int, ...]]:
    if s == 0:
        yield ()
        return
    if s == 1:
        yield (n,)
        return
    # last part varies slowest: colex order
    for last in range(n + 1):
        for head in _compositions(n - last, s - 1):
            yield head + (last,)


def vec_range(n: Sequence[int]) -> Iterator[VecIndex]:
    """Every k with 0 <= k <= n componentwise, row-major (last component fastest)."""
    _check_nonnegative(n)
    return product(*(range(c + 1) for c in n))


def vec_compositions(n: Sequence[int], s: int) -> Iterator[tuple[VecIndex, ...]]:
    """All s-tuples of N^m vectors summing componentwise to n.

    Realized as the cartesian product of per-component integer compositions, so the
    count is prod_i C(n_i + s - 1, s - 1).
    """
    _check_nonnegative(n)
    for c in n:
        compositions(c, s)  # validates s against each component
    return _vec_compositions(tuple(n), s)


def _vec_compositions(n: VecIndex, s: int) -> Iterator[tuple[VecIndex, ...]]:
    per_component = [tuple(_compositions(c, s)) for c in n]
    for choice in product(*per_component):
        yield tuple(tuple(part[j] for part in choice) for j in range(s))


def _check_nonnegative(n: Sequence[int]) -> None:
    if any(c < 0 for c in n):
        raise ValueError(f"negative component in {tuple(n)}")
