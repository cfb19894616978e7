"""Block classification for a weight poset, computed two independent ways.

The invariant route groups partitions by (e-core, ``s``, p-core of ``chi``);
the linkage route takes connected components of the Jantzen graph.  The
verifier checks that the two set partitions coincide.
"""

from __future__ import annotations

import logging
import weakref
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from itertools import combinations
from math import gcd
from typing import NamedTuple, Optional

from .abacus import e_core, is_core
from .jantzen import JantzenGraph, edge_path, jantzen_graph, linkage_classes
from .partitions import ArithmeticParams, Partition, dominates, partitions_of

log = logging.getLogger(__name__)
_warned = weakref.WeakSet()


class NotCosaturatedError(ValueError):
    pass


class InvariantViolation(AssertionError):
    """An internal consistency check failed; this is a bug, not bad input."""


@dataclass(frozen=True, eq=False)
class WeightPoset:
    """A finite set of partitions of ``r`` together with ``(e, p)``.

    ``params`` is ``None`` only for reduced posets at ``p = 0``, which carry
    no Jantzen edges (``edge_free``).
    """

    members: frozenset[Partition]
    r: int
    params: Optional[ArithmeticParams]
    spec: str = ""
    edge_free: bool = False

    def __post_init__(self):
        bad = sorted({mu.size for mu in self.members} - {self.r})
        if bad:
            raise ValueError(f"poset for r={self.r} contains partitions of sizes {bad}")

    @classmethod
    def from_spec(cls, spec, params: ArithmeticParams) -> "WeightPoset":
        from .posets import generate_poset_members
        return cls(generate_poset_members(spec), spec.r, params, str(spec))

    def __contains__(self, mu) -> bool:
        return mu in self.members

    def __len__(self) -> int:
        return len(self.members)

    def core(self, mu: Partition) -> Partition:
        return e_core(mu, self.params.e)

    @cached_property
    def _ell_by_core(self) -> dict[Partition, int]:
        ell = {}
        for lam in self.members:
            kappa = self.core(lam)
            last = max((j for j in range(1, len(lam) + 1) if lam.part(j) != kappa.part(j)), default=0)
            ell[kappa] = max(ell.get(kappa, 0), last)
        return ell

    @cached_property
    def cosaturated(self) -> bool:
        return self._closed_upward(same_core=False)

    @cached_property
    def e_cosaturated(self) -> bool:
        if self.params is None:
            return self.cosaturated
        return self._closed_upward(same_core=True)

    def _closed_upward(self, same_core: bool) -> bool:
        if not self.members:
            return True
        low = min(mu.part(1) for mu in self.members)
        for nu in partitions_of(self.r):
            if nu in self.members or nu.part(1) < low:
                continue
            for lam in self.members:
                if same_core and self.core(nu) != self.core(lam):
                    continue
                if dominates(nu, lam):
                    return False
        return True


class BlockInvariants(NamedTuple):
    core: Partition
    ell: int
    s: int
    chi: Partition
    chi_pcore: Partition

    def key(self) -> tuple:
        """Two members share a block label iff their keys agree."""
        return (self.core, self.s, self.chi_pcore if self.s > 1 else None)


@dataclass(frozen=True)
class BlockClass:
    core: Partition
    s: int
    chi_pcore: Optional[Partition]
    members: tuple[Partition, ...]


@dataclass(frozen=True)
class BlockDecomposition:
    classes: tuple[BlockClass, ...]
    method: str
    edge_certificate: Optional[JantzenGraph] = field(default=None, compare=False)

    def as_set_partition(self) -> frozenset[frozenset[Partition]]:
        return frozenset(frozenset(c.members) for c in self.classes)

    def class_of(self, mu: Partition) -> BlockClass:
        for c in self.classes:
            if mu in c.members:
                return c
        raise KeyError(mu)


def _require_member(poset: WeightPoset, mu: Partition) -> None:
    if mu not in poset.members:
        raise KeyError(f"{mu} is not in the poset")


def members_with_core(poset: WeightPoset, kappa: Partition) -> frozenset[Partition]:
    if not is_core(kappa, poset.params.e):
        raise ValueError(f"{kappa} is not a {poset.params.e}-core")
    return frozenset(mu for mu in poset.members if poset.core(mu) == kappa)


def length_function(poset: WeightPoset, mu: Partition) -> int:
    """Last row in which some member with the same e-core differs from that core."""
    _require_member(poset, mu)
    return poset._ell_by_core[poset.core(mu)]


def s_lambda(poset: WeightPoset, mu: Partition) -> int:
    """Largest ``s`` in ``{1, e, ep, ...}`` with ``mu_i - mu_{i+1} = -1 (mod s)``
    for ``i < ell``; 1 when ``ell <= 1``.
    """
    ell = length_function(poset, mu)
    if ell <= 1:
        return 1
    g = reduce(gcd, (mu.part(i) - mu.part(i + 1) + 1 for i in range(1, ell)))
    e, p = poset.params.e, poset.params.p
    if g % e:
        return 1
    s = e
    while p and g % (s * p) == 0:
        s *= p
    return s


def s_lambda_scan(poset: WeightPoset, mu: Partition) -> int:
    """Definition-faithful scan of the admissible moduli, for cross-checking."""
    ell = length_function(poset, mu)
    if ell <= 1:
        return 1
    return max(s for s in poset.params.moduli(poset.r + 1)
               if all((mu.part(i) - mu.part(i + 1)) % s == (-1) % s for i in range(1, ell)))


def chi_lambda(poset: WeightPoset, mu: Partition) -> Partition:
    """Row counts of horizontal ``s``-hooks, measured against the ``s``-core."""
    s = s_lambda(poset, mu)
    ell = length_function(poset, mu)
    score = e_core(mu, s)
    rows = max(len(mu), len(score))
    diffs = [mu.part(i) - score.part(i) for i in range(1, rows + 1)]
    if any(d % s for d in diffs):
        raise InvariantViolation(f"chi of {mu} is not integral (s={s}, s-core {score})")
    chi = [d // s for d in diffs]
    if any(x < 0 for x in chi) or any(chi[i] < chi[i + 1] for i in range(len(chi) - 1)):
        raise InvariantViolation(f"chi of {mu} is not a partition: {chi}")
    if s > 1 and any(chi[ell:]):
        raise InvariantViolation(f"chi of {mu} is non-zero below row {ell}: {chi}")
    return Partition(chi)


def chi_with_e_core(poset: WeightPoset, mu: Partition) -> tuple[Fraction, ...]:
    """``(mu_i - kappa_i) / s`` against the e-core, kept as fractions.

    Only agrees with :func:`chi_lambda` when ``s == e``; exposed for
    diagnostics.
    """
    s = s_lambda(poset, mu)
    kappa = poset.core(mu)
    return tuple(Fraction(mu.part(i) - kappa.part(i), s)
                 for i in range(1, max(len(mu), len(kappa)) + 1))


def p_core(chi: Partition, p: int) -> Partition:
    return chi if p == 0 else e_core(chi, p)


def block_label(poset: WeightPoset, mu: Partition) -> BlockInvariants:
    _require_member(poset, mu)
    chi = chi_lambda(poset, mu)
    return BlockInvariants(
        core=poset.core(mu),
        ell=length_function(poset, mu),
        s=s_lambda(poset, mu),
        chi=chi,
        chi_pcore=p_core(chi, poset.params.p),
    )


def _check_poset(poset: WeightPoset) -> None:
    if poset.params is None:
        raise ValueError("block decompositions need (e, p)")
    if not poset.e_cosaturated:
        raise NotCosaturatedError(f"poset {poset.spec or '?'} is not e-cosaturated")
    if not poset.cosaturated and poset not in _warned:
        _warned.add(poset)
        log.warning("poset %s is e-cosaturated but not cosaturated", poset.spec or "?")


def _order(members) -> tuple[Partition, ...]:
    return tuple(sorted(members, reverse=True))


def sim_lambda_classes(poset: WeightPoset) -> BlockDecomposition:
    _check_poset(poset)
    groups: dict[tuple, list[Partition]] = {}
    labels = {}
    for mu in poset.members:
        inv = block_label(poset, mu)
        groups.setdefault(inv.key(), []).append(mu)
        labels[inv.key()] = inv
    classes = [BlockClass(k[0], k[1], k[2], _order(ms)) for k, ms in groups.items()]
    classes.sort(key=lambda c: c.members[0], reverse=True)
    return BlockDecomposition(tuple(classes), "invariant-classification")


def jantzen_blocks(poset: WeightPoset, threads: int = 1) -> BlockDecomposition:
    _check_poset(poset)
    graph = jantzen_graph(poset.members, poset.params, threads=threads)
    classes = []
    for comp in linkage_classes(graph):
        members = _order(comp)
        inv = block_label(poset, members[0])
        k = inv.key()
        classes.append(BlockClass(k[0], k[1], k[2], members))
    return BlockDecomposition(tuple(classes), "jantzen-linkage", graph)


@dataclass
class VerificationReport:
    poset: WeightPoset
    invariant_blocks: BlockDecomposition
    jantzen_blocks: BlockDecomposition
    equal: bool
    counterexample: Optional[dict] = None

    @property
    def n_blocks(self) -> int:
        return len(self.invariant_blocks.classes)


def verify_main_theorem(poset: WeightPoset, threads: int = 1) -> VerificationReport:
    """Compare the invariant classification with the Jantzen linkage classes."""
    sim = sim_lambda_classes(poset)
    jan = jantzen_blocks(poset, threads=threads)
    equal = sim.as_set_partition() == jan.as_set_partition()
    counter = None
    if not equal:
        graph = jan.edge_certificate
        for lam, mu in combinations(_order(poset.members), 2):
            same_label = mu in sim.class_of(lam).members
            linked = mu in jan.class_of(lam).members
            if same_label != linked:
                counter = {
                    "pair": (lam, mu),
                    "same_label": same_label,
                    "linked": linked,
                    "labels": (block_label(poset, lam), block_label(poset, mu)),
                    "path": edge_path(graph, lam, mu) if linked else None,
                }
                break
    return VerificationReport(poset, sim, jan, equal, counter)


def frobenius_reduction(poset: WeightPoset, kappa: Partition,
                        s: int) -> tuple[WeightPoset, dict[Partition, Partition]]:
    """Replace the ``(kappa, s)`` members by their ``chi`` partitions.

    The reduced poset lives at ``(e, p) = (p, p)``; at ``p = 0`` it has no
    Jantzen edges and no parameters.
    """
    params = poset.params
    if s <= 1 or s not in set(params.moduli(max(s, poset.r + 1))):
        raise ValueError(f"s={s} is not an admissible modulus > 1 for (e, p)=({params.e}, {params.p})")
    chosen = [nu for nu in members_with_core(poset, kappa) if s_lambda(poset, nu) == s]
    if not chosen:
        raise ValueError(f"no members with core {kappa} and s={s}")
    mapping = {nu: chi_lambda(poset, nu) for nu in chosen}
    sizes = {chi.size for chi in mapping.values()}
    if len(sizes) != 1:
        raise InvariantViolation(f"reduced partitions have mixed sizes {sorted(sizes)}")
    reduced_params = ArithmeticParams(params.p, params.p) if params.p else None
    reduced = WeightPoset(
        frozenset(mapping.values()), sizes.pop(), reduced_params,
        spec=f"reduction({poset.spec};core={kappa};s={s})",
        edge_free=params.p == 0,
    )
    return reduced, mapping
