"""Rim hooks: removal, wrapping, and partitions with only horizontal e-hooks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .abacus import beta_numbers, e_core, partition_from_betas
from .partitions import Node, NodeNotInDiagramError, Partition, conjugate


@dataclass(frozen=True, order=True)
class RimHookInfo:
    """The rim hook ``R_ab`` of a partition, indexed by its corner ``(a, b)``.

    ``foot_residue`` is ``None`` when no ``e`` was supplied.
    """

    corner: Node
    size: int
    leg: int
    hand: Node
    foot: Node
    foot_residue: Optional[int] = None

    @property
    def horizontal(self) -> bool:
        return self.leg == 0


def rim_hook(mu: Partition, corner: tuple[int, int], e: int | None = None) -> RimHookInfo:
    a, b = corner
    if not mu.has_node(corner):
        raise NodeNotInDiagramError(f"{tuple(corner)} is not a node of {mu}")
    col_len = conjugate(mu).part(b)
    return RimHookInfo(
        corner=Node(a, b),
        size=mu.part(a) - a + col_len - b + 1,
        leg=col_len - a,
        hand=Node(a, mu.part(a)),
        foot=Node(col_len, b),
        foot_residue=None if e is None else (b - col_len) % e,
    )


def rim_hook_nodes(mu: Partition, corner: tuple[int, int]) -> frozenset[Node]:
    """The rim hook as a set of nodes, read straight off the diagram."""
    a, b = corner
    if not mu.has_node(corner):
        raise NodeNotInDiagramError(f"{tuple(corner)} is not a node of {mu}")
    col_len = conjugate(mu).part(b)
    return frozenset(
        Node(i, j)
        for i in range(a, col_len + 1)
        for j in range(b, mu.part(a) + 1)
        if mu.has_node((i, j)) and not mu.has_node((i + 1, j + 1))
    )


def removable_hooks(mu: Partition, h: int, e: int | None = None) -> list[RimHookInfo]:
    """Every rim hook of size ``h``; unwrapping any of them leaves a partition."""
    return [info for info in (rim_hook(mu, n, e) for n in mu.nodes()) if info.size == h]


def remove_rim_hook(mu: Partition, corner: tuple[int, int]) -> Partition:
    info = rim_hook(mu, corner)
    betas = list(beta_numbers(mu, len(mu)))
    betas[info.corner.row - 1] -= info.size
    return partition_from_betas(betas)


def wrap_hook_candidates(nu: Partition, h: int, e: int | None = None) -> set[tuple[Partition, RimHookInfo]]:
    """All ways of wrapping an ``h``-rim hook onto ``nu``.

    Each result pairs the new partition with the wrapped hook, found by moving
    one bead ``h`` places to the right on ``len(nu) + h`` beads.
    """
    if h < 1:
        raise ValueError(f"hook size must be positive, got {h}")
    betas = beta_numbers(nu, len(nu) + h)
    occupied = set(betas)
    out = set()
    for b in betas:
        if b + h in occupied:
            continue
        new = sorted(occupied - {b} | {b + h}, reverse=True)
        mu = partition_from_betas(new)
        row = new.index(b + h) + 1
        col = _column_with_hook(mu, row, h)
        out.add((mu, rim_hook(mu, (row, col), e)))
    return out


def _column_with_hook(mu: Partition, row: int, h: int) -> int:
    # hook lengths strictly decrease along a row
    mu_c = conjugate(mu)
    for col in range(1, mu.part(row) + 1):
        if mu.part(row) - row + mu_c.part(col) - col + 1 == h:
            return col
    raise AssertionError(f"no {h}-hook in row {row} of {mu}")


@lru_cache(maxsize=None)
def only_horizontal_hooks(mu: Partition, e: int) -> bool:
    """True iff ``mu`` only contains horizontal ``e``-hooks.

    That is, ``mu`` is an ``e``-core, or every removable ``e``-hook is
    horizontal and unwrapping any of them leaves a partition with the same
    property.
    """
    hooks = removable_hooks(mu, e)
    if not hooks:
        return True
    if any(not info.horizontal for info in hooks):
        return False
    return all(only_horizontal_hooks(remove_rim_hook(mu, info.corner), e) for info in hooks)


def horizontal_condition_a(mu: Partition, e: int) -> bool:
    """Divisibility of hook lengths by ``e`` is constant down every column."""
    mu_c = conjugate(mu)
    for c in range(1, mu.part(1) + 1):
        flags = {(mu.part(a) - a + mu_c.part(c) - c + 1) % e == 0
                 for a in range(1, mu_c.part(c) + 1)}
        if len(flags) > 1:
            return False
    return True


def horizontal_condition_c(mu: Partition, e: int) -> bool:
    """``mu_i - mu_{i+1} = -1 (mod e)`` wherever row ``i+1`` exceeds the e-core."""
    kappa = e_core(mu, e)
    return all((mu.part(i) - mu.part(i + 1)) % e == e - 1
               for i in range(1, len(mu)) if mu.part(i + 1) > kappa.part(i + 1))
