"""Beta numbers, abacus configurations, cores and weights.

A set of ``l`` beta numbers for ``mu`` is ``beta_i = mu_i - i + l``.  On an
abacus with ``e`` runners, bead position ``b`` lies on runner ``b % e`` in
row ``b // e``.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import Partition

BEAD = "●"
GAP = "·"


def beta_numbers(mu: Partition, l: int | None = None) -> tuple[int, ...]:
    """The ``l``-beta numbers of ``mu`` in decreasing order.

    >>> beta_numbers(Partition((4, 4, 3, 1)), 6)
    (9, 8, 6, 3, 1, 0)
    """
    if l is None:
        l = max(len(mu), 1)
    if l < len(mu):
        raise ValueError(f"need at least {len(mu)} beads for {mu}, got {l}")
    return tuple(mu.part(i) - i + l for i in range(1, l + 1))


def partition_from_betas(betas) -> Partition:
    """Inverse of :func:`beta_numbers`; accepts beads in any order."""
    beads = sorted(betas, reverse=True)
    if len(set(beads)) != len(beads) or (beads and beads[-1] < 0):
        raise ValueError(f"beads must be distinct non-negative integers: {beads}")
    l = len(beads)
    return Partition(b - l + i for i, b in enumerate(beads, start=1))


@lru_cache(maxsize=65536)
def e_core(mu: Partition, e: int) -> Partition:
    """Push every bead as high as it will go on its runner.

    ``e == 1`` gives the empty partition.  The ``0``-core convention
    (``core_0(mu) == mu``) is left to callers.
    """
    if e < 1:
        raise ValueError(f"e must be positive, got {e}")
    betas = beta_numbers(mu)
    counts = [0] * e
    for b in betas:
        counts[b % e] += 1
    return partition_from_betas(j + k * e for j in range(e) for k in range(counts[j]))


def e_weight(mu: Partition, e: int) -> int:
    removed = mu.size - e_core(mu, e).size
    assert removed % e == 0, (mu, e)
    return removed // e


def is_core(mu: Partition, e: int) -> bool:
    return e_core(mu, e) == mu


def same_e_core(lhs: Partition, rhs: Partition, e: int) -> bool:
    return e_core(lhs, e) == e_core(rhs, e)


def runner(bead: int, e: int) -> int:
    return bead % e


def render_abacus(mu: Partition, e: int, l: int | None = None) -> str:
    """Draw the ``l``-bead abacus of ``mu`` with ``e`` runners as text."""
    beads = set(beta_numbers(mu, l))
    nrows = (max(beads) // e + 1) if beads else 1
    width = len(str(e - 1))
    lines = [" ".join(str(j).rjust(width) for j in range(e))]
    for row in range(nrows):
        cells = (BEAD if row * e + j in beads else GAP for j in range(e))
        lines.append(" ".join(c.rjust(width) for c in cells))
    return "\n".join(lines)
