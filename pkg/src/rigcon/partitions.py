"""Integer partitions as explicit part lists.

The canonical enumeration order used everywhere in the package is
lexicographic on the part tuples, so ``() < (1,) < (1, 1) < (2,) < ...``.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive integers. ``Partition()`` is the empty partition."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        for k, x in enumerate(parts):
            if x < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
            if k and parts[k - 1] < x:
                raise ValueError(f"partition parts must weakly decrease: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_unsorted(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted((x for x in parts if x > 0), reverse=True))

    def size(self) -> int:
        return sum(self)

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for x in self:
            out[x] = out.get(x, 0) + 1
        return out

    def column_count(self, i: int) -> int:
        return sum(min(x, i) for x in self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for x in self if x > j) for j in range(self[0]))

    def largest(self) -> int:
        return self[0] if self else 0

    def __repr__(self):
        return f"Partition({list(self)})"


def size(rho: Partition) -> int:
    return sum(rho)


def multiplicity(rho: Partition, i: int) -> int:
    """Number of parts equal to ``i``."""
    if i < 1:
        raise ValueError("multiplicity is defined for i >= 1")
    return sum(1 for x in rho if x == i)


def column_count(rho: Partition, i: int) -> int:
    """Boxes in the first ``i`` columns, i.e. ``sum(min(part, i))``."""
    if i < 0:
        raise ValueError("column index must be nonnegative")
    return sum(min(x, i) for x in rho)


def _box(p: int, m: int) -> Iterator[tuple[int, ...]]:
    # lexicographic: shorter prefixes first, then increasing next part
    yield ()
    if m == 0:
        return
    for first in range(1, p + 1):
        for rest in _box(first, m - 1):
            yield (first,) + rest


def partitions_in_box(p: int, m: int) -> list[Partition]:
    """All partitions with at most ``m`` parts, each at most ``p``, in lexicographic order."""
    if p < 0 or m < 0:
        raise ValueError("box dimensions must be nonnegative")
    return [Partition(x) for x in _box(p, m)]


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` (optionally with parts bounded), lexicographic order."""
    if n < 0:
        return
    if max_part is None:
        max_part = n

    def rec(remaining, bound):
        if remaining == 0:
            yield ()
            return
        for first in range(1, min(bound, remaining) + 1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for x in rec(n, max_part):
        yield Partition(x)


def complement_in_box(rho: Partition, p: int, m: int) -> Partition:
    """Complement of ``rho`` inside the ``p x m`` box (``m`` rows of length ``p``)."""
    if len(rho) > m or (rho and rho[0] > p):
        raise ValueError(f"{list(rho)} does not fit in a {p}x{m} box")
    padded = list(rho) + [0] * (m - len(rho))
    return Partition(x for x in (p - y for y in reversed(padded)) if x > 0)
