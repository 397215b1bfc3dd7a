"""Partition calculus for nilpotent-orbit combinatorics in the classical types.

Partitions are stored without trailing zeros; padding is always an explicit
argument.  A partition "has type" B/C/D when the usual multiplicity parity
condition holds:

* type B  (so_{2n+1}, partitions of 2n+1): every even part has even multiplicity;
* type C  (sp_{2n},   partitions of 2n):   every odd  part has even multiplicity;
* type D  (so_{2n},   partitions of 2n):   every even part has even multiplicity.

Type A imposes no condition (partitions of n for gl_n).

The X-collapse of a partition is the dominance-largest partition of type X
below it.  It is computed here by greedy repair of parity violations; the
brute-force dominance-maximum enumeration lives in :mod:`orbitkl.oracles`
and the two must agree (this is checked exhaustively in the test suite).

>>> p = Partition.parse("4,3")
>>> collapse(p, LieType.parse("B3")).parts
(3, 3, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator

from .errors import DomainError

FAMILIES = ("A", "B", "C", "D")


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise DomainError(f"nonpositive interior part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,2,2"`` or exponent form ``"3^1,2^2"`` (empty string = empty partition)."""
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        parts: list[int] = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if "^" in chunk:
                base, _, exp = chunk.partition("^")
                parts.extend([int(base)] * int(exp))
            else:
                parts.append(int(chunk))
        return cls(sorted(parts, reverse=True))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def padded(self, length: int) -> tuple[int, ...]:
        """Parts padded with zeros to at least ``length`` entries."""
        return self.parts + (0,) * max(0, length - len(self.parts))

    def multiplicity(self, value: int) -> int:
        return self.parts.count(value)

    def distinct_parts(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.parts), reverse=True))


@dataclass(frozen=True)
class LieType:
    """A classical family with its rank.

    A(n-1) goes with gl_n and partitions of n, B(n) with so_{2n+1},
    C(n) with sp_{2n} and D(n) with so_{2n}.
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise DomainError(f"rank must be >= 1, got {self.rank}")
        if self.family == "D" and self.rank < 2:
            raise DomainError("family D needs rank >= 2")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        text = text.strip()
        if len(text) < 2:
            raise ValueError(f"cannot parse Lie type from {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    @property
    def ambient_size(self) -> int:
        """Size of partitions labelling nilpotent orbits (the matrix size)."""
        if self.family == "A":
            return self.rank + 1
        if self.family == "B":
            return 2 * self.rank + 1
        return 2 * self.rank

    @property
    def algebra_dimension(self) -> int:
        """dim gl_n for A, dim so_N / sp_N otherwise."""
        n, N = self.rank, self.ambient_size
        if self.family == "A":
            return N * N
        if self.family == "C":
            return n * (2 * n + 1)
        return N * (N - 1) // 2

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def transpose(p: Partition) -> Partition:
    """Column lengths of the Young diagram of ``p``.

    >>> transpose(Partition((3, 1, 1))).parts
    (3, 1, 1)
    """
    if not p.parts:
        return p
    cols = [0] * p.parts[0]
    for part in p.parts:
        for i in range(part):
            cols[i] += 1
    return Partition(cols)


def dominance_leq(p: Partition, q: Partition) -> bool:
    """Whether all partial sums of ``p`` are bounded by those of ``q``.

    Comparing partitions of different sizes is an error, not False.
    """
    if p.size != q.size:
        raise DomainError(f"dominance needs equal sizes, got {p.size} != {q.size}")
    length = max(len(p), len(q))
    a = p.padded(length)
    b = q.padded(length)
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def is_type(p: Partition, t: LieType) -> bool:
    """The multiplicity parity test of the family (size checked first)."""
    if p.size != t.ambient_size:
        raise DomainError(
            f"partition of {p.size} does not label an orbit of {t} "
            f"(need size {t.ambient_size})"
        )
    if t.family == "A":
        return True
    bad_parity = 0 if t.family in ("B", "D") else 1  # parity of constrained parts
    return all(
        p.multiplicity(v) % 2 == 0
        for v in p.distinct_parts()
        if v % 2 == bad_parity
    )


def collapse(p: Partition, t: LieType) -> Partition:
    """Dominance-largest partition of type ``t`` below ``p``.

    Greedy repair: locate the largest part with a parity violation, shave a
    box off its last occurrence and drop the box onto the first later row
    that can absorb it (or a new row).  Each step moves strictly down in
    dominance, so the loop terminates.
    """
    if t.family == "A":
        if p.size != t.ambient_size:
            raise DomainError(f"size mismatch: {p.size} vs {t.ambient_size}")
        return p
    bad_parity = 0 if t.family in ("B", "D") else 1
    parts = list(p.parts)
    if sum(parts) != t.ambient_size:
        raise DomainError(f"size mismatch: {sum(parts)} vs {t.ambient_size}")
    while True:
        violator = max(
            (v for v in set(parts) if v % 2 == bad_parity and parts.count(v) % 2 == 1),
            default=None,
        )
        if violator is None:
            break
        i = len(parts) - 1 - parts[::-1].index(violator)  # last occurrence
        parts[i] -= 1
        for j in range(i + 1, len(parts)):
            if parts[j] <= violator - 2:
                parts[j] += 1
                break
        else:
            parts.append(1)
        parts = [x for x in parts if x > 0]
    return Partition(parts)


def is_special(p: Partition, t: LieType) -> bool:
    """Lusztig-special test: the transpose must have the prescribed type.

    B: p^t again of type B;  C: p^t of type C;  D: p^t of type C (not D).
    Every type-A partition is special.
    """
    if not is_type(p, t):
        raise DomainError(f"{p} is not a type-{t.family} partition")
    if t.family == "A":
        return True
    pt = transpose(p)
    bad_parity = 0 if t.family == "B" else 1  # C and D both test type C on p^t
    return all(
        pt.multiplicity(v) % 2 == 0
        for v in pt.distinct_parts()
        if v % 2 == bad_parity
    )


def dominance_covers_below(p: Partition) -> list[Partition]:
    """All partitions reached from ``p`` by one legal downward box move.

    A move takes a box off row ``i`` and puts it on a lower row ``j`` (or a
    new bottom row); the result must again be weakly decreasing.

    >>> [c.parts for c in dominance_covers_below(Partition((3, 1)))]
    [(2, 2), (2, 1, 1)]
    """
    out: list[Partition] = []
    seen: set[tuple[int, ...]] = set()
    rows = list(p.parts)
    n = len(rows)
    for i in range(n):
        for j in range(i + 1, n + 1):
            cand = rows.copy() + [0]
            cand[i] -= 1
            cand[j] += 1
            trimmed = tuple(x for x in cand if x > 0)
            if trimmed == p.parts or trimmed in seen:
                continue
            if all(trimmed[k] >= trimmed[k + 1] for k in range(len(trimmed) - 1)):
                # the untrimmed sequence must also be valid (no box below a hole)
                if all(cand[k] >= cand[k + 1] for k in range(len(cand) - 1)):
                    seen.add(trimmed)
                    out.append(Partition(trimmed))
    return out


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n == 0:
        yield Partition(())
        return
    if max_part is None:
        max_part = n
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


def gcd_of_parts(p: Partition) -> int:
    from math import gcd

    return reduce(gcd, p.parts, 0)
