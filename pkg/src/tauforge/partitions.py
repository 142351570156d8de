"""Partitions, their index sequences, periodicity, and shift canonicalization.

A partition lambda = (l_1 >= ... >= l_m > 0) determines the strictly
decreasing sequence V = (l_1, l_2 - 1, ..., l_m - m + 1, -m, -m - 1, ...):
a finite head followed by every integer <= -m.  lambda is n-periodic when
V - n is contained in V; because the tail is closed under subtraction it is
enough to check the head elements.

``canonicalize_shifts`` removes the gauge freedom of the shift vectors
attached to a Grassmann cell: for each column j and each later row i the
entry at position d = l_j - j - l_i + i is overwritten by
-s_d(c_1, ..., c_{d-1}, 0), which forces s_d(c) = 0.  The remaining free
entries number exactly |lambda|.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .schur import ShiftLike, ShiftVector, schur_constant

#: Guard for the periodic-partition enumerator.
MAX_ENUMERATION_SIZE = 30


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive parts; () is the empty partition."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        last = None
        for p in self.parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
            if last is not None and p > last:
                raise ValueError("parts must be weakly decreasing")
            last = p

    @classmethod
    def coerce(cls, value: "Partition | Iterable[int]") -> "Partition":
        if isinstance(value, Partition):
            return value
        return cls(tuple(int(p) for p in value))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class VSequence:
    """Head of the V sequence plus the threshold below which all integers lie."""

    head: tuple[int, ...]
    tail_start: int  # every integer <= tail_start is a member

    def __contains__(self, v: int) -> bool:
        return v <= self.tail_start or v in self.head

    def truncated(self, lowest: int) -> list[int]:
        """All members >= lowest, in decreasing order (test helper)."""
        out = [h for h in self.head if h >= lowest]
        out.extend(range(self.tail_start, lowest - 1, -1))
        return out


def v_sequence(partition: Partition | Iterable[int]) -> VSequence:
    p = Partition.coerce(partition)
    m = len(p)
    head = tuple(part - i for i, part in enumerate(p.parts))
    return VSequence(head=head, tail_start=-m)


def is_n_periodic(partition: Partition | Iterable[int], n: int) -> bool:
    """True when V - n is contained in V (head check suffices)."""
    if n < 2:
        raise ValueError("periodicity requires n >= 2")
    vs = v_sequence(partition)
    return all((h - n) in vs for h in vs.head)


def partitions_of(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of ``total`` as weakly decreasing tuples."""
    if total < 0:
        return
    if total == 0:
        yield ()
        return
    cap = total if max_part is None else min(max_part, total)
    for first in range(cap, 0, -1):
        for rest in partitions_of(total - first, first):
            yield (first,) + rest


def all_partitions(max_size: int) -> Iterator[Partition]:
    """Every partition with |lambda| <= max_size, increasing size order."""
    for total in range(max_size + 1):
        for parts in partitions_of(total):
            yield Partition(parts)


def enumerate_n_periodic(n: int, max_size: int) -> list[Partition]:
    """All n-periodic partitions with |lambda| <= max_size, sorted by (size, parts)."""
    if max_size > MAX_ENUMERATION_SIZE:
        raise ValueError(
            f"max_size {max_size} exceeds the enumeration guard {MAX_ENUMERATION_SIZE}"
        )
    found = [p for p in all_partitions(max_size) if is_n_periodic(p, n)]
    found.sort(key=lambda p: (p.size, p.parts))
    return found


def expected_shift_lengths(partition: Partition | Iterable[int]) -> list[int]:
    """Length l_j + m - j required of the j-th column shift vector (1-based j)."""
    p = Partition.coerce(partition)
    m = len(p)
    return [p.parts[j - 1] + m - j for j in range(1, m + 1)]


def constrained_indices(partition: Partition | Iterable[int]) -> list[tuple[int, ...]]:
    """Per column j, the 1-based entry positions fixed by canonicalization."""
    p = Partition.coerce(partition)
    m = len(p)
    out: list[tuple[int, ...]] = []
    for j in range(1, m + 1):
        ds = sorted(
            p.parts[j - 1] - j - p.parts[i - 1] + i for i in range(j + 1, m + 1)
        )
        out.append(tuple(ds))
    return out


def canonicalize_shifts(
    partition: Partition | Iterable[int], shifts: Sequence[ShiftLike]
) -> list[ShiftVector]:
    """Overwrite the constrained entries of each column's shift vector.

    Entry positions follow ``constrained_indices``; each constrained entry
    c_d becomes -s_d(c_1, ..., c_{d-1}, 0), which zeroes s_d of the column
    vector.  Applied in increasing d order so earlier overwrites feed later
    ones.  Every column vector must have exactly its expected length.
    """
    p = Partition.coerce(partition)
    m = len(p)
    if len(shifts) != m:
        raise ValueError(f"expected {m} shift vectors, got {len(shifts)}")
    lengths = expected_shift_lengths(p)
    result: list[ShiftVector] = []
    for j in range(1, m + 1):
        cv = ShiftVector.coerce(shifts[j - 1])
        if len(cv) != lengths[j - 1]:
            raise ValueError(
                f"column {j} shift vector must have length {lengths[j - 1]}, "
                f"got {len(cv)}"
            )
        entries = list(cv.entries)
        for d in constrained_indices(p)[j - 1]:
            prefix = tuple(entries[: d - 1]) + (Fraction(0),)
            entries[d - 1] = -schur_constant(d, ShiftVector(prefix))
        result.append(ShiftVector(tuple(entries)))
    return result


def free_parameter_count(partition: Partition | Iterable[int]) -> int:
    """Number of shift entries left free by canonicalization (= |lambda|)."""
    p = Partition.coerce(partition)
    lengths = expected_shift_lengths(p)
    constrained = constrained_indices(p)
    return sum(lengths[j] - len(constrained[j]) for j in range(len(p)))
