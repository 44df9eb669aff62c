"""Combinatorial counts of generalized cubic partitions.

Nothing here touches the series code: the counts come from a coin-change
style dynamic program or, for small n, from listing every partition.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "ColoredPartitionSpec",
    "colored_partition_counts",
    "count_colored_partitions",
    "enumerate_colored_partitions",
    "ENUMERATION_LIMIT",
]

ENUMERATION_LIMIT = 20


@dataclass(frozen=True)
class ColoredPartitionSpec:
    """Partitions of ``n`` whose even parts come in ``c`` colors."""

    n: int
    c: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if self.c < 1:
            raise ValueError(f"c must be >= 1, got {self.c}")


def colored_partition_counts(n_max: int, c: int) -> list[int]:
    """``[a_c(0), ..., a_c(n_max)]`` by unbounded knapsack.

    Part sizes are processed in ascending order.  An odd size is one coin
    type; an even size is ``c`` interchangeable coin types, i.e. the same
    update applied ``c`` times.
    """
    ColoredPartitionSpec(n_max, c)
    table = [0] * (n_max + 1)
    table[0] = 1
    for size in range(1, n_max + 1):
        for _ in range(c if size % 2 == 0 else 1):
            for total in range(size, n_max + 1):
                table[total] += table[total - size]
    return table


def count_colored_partitions(spec: ColoredPartitionSpec | int, c: int | None = None) -> int:
    """a_c(n).  Accepts a spec or the pair ``(n, c)``."""
    if not isinstance(spec, ColoredPartitionSpec):
        spec = ColoredPartitionSpec(spec, c)
    return colored_partition_counts(spec.n, spec.c)[spec.n]


def _partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def _colorings(parts: tuple[int, ...], c: int):
    """Color multisets for one partition; colors are nondecreasing within equal even parts."""
    if not parts:
        yield ()
        return
    head, tail = parts[0], parts[1:]
    if head % 2:
        for rest in _colorings(tail, c):
            yield ((head, 0),) + rest
        return
    for color in range(1, c + 1):
        for rest in _colorings(tail, c):
            # enforce canonical order among copies of the same size
            if rest and rest[0][0] == head and rest[0][1] < color:
                continue
            yield ((head, color),) + rest


def enumerate_colored_partitions(spec: ColoredPartitionSpec | int, c: int | None = None, listing: bool = False):
    """Count (and optionally list) partitions by literal enumeration.

    Each partition is a tuple of ``(size, color)`` pairs with color 0 on odd
    sizes.  Only ``n <= 20`` is accepted.  Returns the count, or
    ``(count, listing)`` when ``listing`` is true.
    """
    if not isinstance(spec, ColoredPartitionSpec):
        spec = ColoredPartitionSpec(spec, c)
    if spec.n > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration is limited to n <= {ENUMERATION_LIMIT}, got {spec.n}")
    found = [col for parts in _partitions(spec.n, spec.n) for col in _colorings(parts, spec.c)]
    if listing:
        return len(found), found
    return len(found)
