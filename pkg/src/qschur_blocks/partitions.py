"""Integer partitions, dominance, nodes and the arithmetic parameters (e, p).

Partitions are stored without trailing zeros but are read 1-based, with
``mu.part(i) == 0`` for ``i > len(mu)``, so formulas carry over verbatim from
the usual row/column notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple


class SizeMismatchError(ValueError):
    """Raised when two partitions that must have the same size do not."""


class NodeNotInDiagramError(ValueError):
    pass


class Partition(tuple):
    """An immutable partition, a non-increasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((3, 1, 0))``
    equals ``Partition((3, 1))``.  Ordering is lexicographic on the parts.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, x in enumerate(parts):
            if x <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < x:
                raise ValueError(f"partition parts must be non-increasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"29,6,4"``; ``""`` and ``"0"`` give the empty partition."""
        text = text.strip().strip("()")
        if text in ("", "0"):
            return cls()
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad partition {text!r}: {exc}") from None

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The 1-based part ``mu_i``; zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def nodes(self) -> Iterator["Node"]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield Node(i, j)

    def has_node(self, node: tuple[int, int]) -> bool:
        i, j = node
        return i >= 1 and 1 <= j <= self.part(i)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "0"


class Node(NamedTuple):
    """A box ``(row, col)`` of a diagram, 1-based."""

    row: int
    col: int


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class ArithmeticParams:
    """Quantum characteristic ``e >= 2`` and field characteristic ``p``."""

    e: int
    p: int = 0

    def __post_init__(self):
        if self.e < 2:
            raise ValueError(f"quantum characteristic e must be >= 2, got {self.e}")
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"characteristic p must be 0 or prime, got {self.p}")

    def moduli(self, limit: int) -> Iterator[int]:
        """Yield ``1, e, ep, ep^2, ...`` up to and including ``limit``.

        When ``p == 0`` the set is just ``{1, e}``.
        """
        if limit < 1:
            return
        yield 1
        s = self.e
        while s <= limit:
            yield s
            if self.p == 0:
                return
            s *= self.p


@lru_cache(maxsize=65536)
def conjugate(mu: Partition) -> Partition:
    if not mu:
        return Partition()
    return Partition(sum(1 for x in mu if x >= j) for j in range(1, mu[0] + 1))


def _check_same_size(lhs: Partition, rhs: Partition) -> None:
    if lhs.size != rhs.size:
        raise SizeMismatchError(f"{lhs} and {rhs} have sizes {lhs.size} != {rhs.size}")


def dominates(lhs: Partition, rhs: Partition) -> bool:
    """True iff every prefix sum of ``lhs`` is at least that of ``rhs``."""
    _check_same_size(lhs, rhs)
    a = b = 0
    for i in range(max(len(lhs), len(rhs))):
        a += lhs.part(i + 1)
        b += rhs.part(i + 1)
        if a < b:
            return False
    return True


def strictly_dominates(lhs: Partition, rhs: Partition) -> bool:
    return lhs != rhs and dominates(lhs, rhs)


def partitions_of(r: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``r`` in reverse lexicographic order."""
    if r < 0:
        return
    if max_part is None:
        max_part = r

    def rec(rest: int, cap: int, prefix: list[int]):
        if rest == 0:
            yield Partition(prefix)
            return
        for first in range(min(rest, cap), 0, -1):
            prefix.append(first)
            yield from rec(rest - first, first, prefix)
            prefix.pop()

    yield from rec(r, max_part, [])


def hook_length(mu: Partition, node: tuple[int, int]) -> int:
    a, b = node
    if not mu.has_node(node):
        raise NodeNotInDiagramError(f"{tuple(node)} is not a node of {mu}")
    mu_c = conjugate(mu)
    return mu.part(a) - a + mu_c.part(b) - b + 1


def hook_lengths(mu: Partition) -> list[list[int]]:
    """Row-by-row grid of hook lengths."""
    mu_c = conjugate(mu)
    return [[mu.part(a) - a + mu_c.part(b) - b + 1 for b in range(1, mu.part(a) + 1)]
            for a in range(1, len(mu) + 1)]


def residue(node: tuple[int, int], e: int) -> int:
    i, j = node
    return (j - i) % e
