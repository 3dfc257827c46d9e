"""Integer partitions, strict partitions, and their scalar statistics.

Partitions are immutable values with structural equality.  Parts are kept
as tuples of positive integers in decreasing order, and every generated
list of partitions comes out in reverse-lexicographic order so that tables
and reports downstream are deterministic.  Row indices used elsewhere in
the package are 1-based, matching the usual combinatorial convention.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator


class Partition:
    """A weakly decreasing sequence of positive integer parts."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        p = tuple(int(x) for x in parts)
        for a, b in zip(p, p[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {p}")
        if p and p[-1] < 1:
            raise ValueError(f"parts must be positive: {p}")
        self._parts = p

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def weight(self) -> int:
        """Number of cells, the sum of all parts."""
        return sum(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, k):
        return self._parts[k]

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._parts!r})"

    def __str__(self) -> str:
        return format_partition(self)


class StrictPartition(Partition):
    """A strictly decreasing partition, the shape of a shifted diagram."""

    __slots__ = ()

    def __init__(self, parts: Iterable[int] = ()):
        super().__init__(parts)
        for a, b in zip(self._parts, self._parts[1:]):
            if a == b:
                raise ValueError(f"parts must be strictly decreasing: {self._parts}")


@dataclass(frozen=True)
class PartitionStatistics:
    """Row counts by parity, the parity bit, and the centralizer order."""

    odd_rows: int
    even_rows: int
    parity: int
    centralizer_order: int


def _descending(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for k in range(min(n, cap), 0, -1):
        for rest in _descending(n - k, k):
            yield (k,) + rest


def _descending_distinct(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for k in range(min(n, cap), 0, -1):
        for rest in _descending_distinct(n - k, k - 1):
            yield (k,) + rest


def _descending_odd(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    start = min(n, cap)
    if start % 2 == 0:
        start -= 1
    for k in range(start, 0, -2):
        for rest in _descending_odd(n - k, k):
            yield (k,) + rest


def generate_partitions(n: int, constraint: str = "all") -> list[Partition]:
    """All partitions of n in reverse-lexicographic order.

    The constraint selects the family: "all" for every partition,
    "distinct" for strict partitions (returned as StrictPartition), and
    "all-odd" for partitions with every part odd.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if constraint == "all":
        return [Partition(p) for p in _descending(n, n)]
    if constraint == "distinct":
        return [StrictPartition(p) for p in _descending_distinct(n, n)]
    if constraint == "all-odd":
        return [Partition(p) for p in _descending_odd(n, n)]
    raise ValueError(f"unknown constraint {constraint!r}")


def centralizer_order(pi: Partition) -> int:
    """Order of the centralizer of a permutation whose cycle type is pi."""
    z = 1
    for i, m in Counter(pi.parts).items():
        z *= i**m * math.factorial(m)
    return z


def parity(la: Partition) -> int:
    """1 when the number of even parts is odd, else 0."""
    return sum(1 for p in la.parts if p % 2 == 0) % 2


def classical_rank(la: Partition) -> int:
    """Number of diagonal cells of the unshifted diagram."""
    return sum(1 for i, p in enumerate(la.parts, start=1) if p >= i)


def statistics(la: Partition) -> PartitionStatistics:
    odd = sum(1 for p in la.parts if p % 2 == 1)
    return PartitionStatistics(
        odd_rows=odd,
        even_rows=len(la) - odd,
        parity=parity(la),
        centralizer_order=centralizer_order(la),
    )


def format_partition(la: Partition) -> str:
    """Comma-separated parts; the empty partition prints as "-"."""
    if not la.parts:
        return "-"
    return ",".join(str(p) for p in la.parts)


def parse_partition(text: str) -> Partition:
    """Read a comma-separated part list; "-" or "" is the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return Partition(parts)


def parse_strict_partition(text: str) -> StrictPartition:
    return StrictPartition(parse_partition(text).parts)
