"""Recipes for finite sets of partitions of r, and their text syntax.

Grammar::

    all | maxlen:<n> | dominating:<parts> | explicit:@<file>

optionally intersected with a filter ``nonempty-core`` or ``core:<parts>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .abacus import e_core, is_core
from .partitions import Partition, dominates, partitions_of


@dataclass(frozen=True)
class AllPartitions:
    r: int

    def __str__(self):
        return "all"


@dataclass(frozen=True)
class MaxLength:
    n: int
    r: int

    def __str__(self):
        return f"maxlen:{self.n}"


@dataclass(frozen=True)
class Dominating:
    mu: Partition

    @property
    def r(self) -> int:
        return self.mu.size

    def __str__(self):
        return f"dominating:{self.mu}"


@dataclass(frozen=True)
class Explicit:
    partitions: tuple[Partition, ...]
    source: str = ""

    def __post_init__(self):
        sizes = {mu.size for mu in self.partitions}
        if len(sizes) > 1:
            raise ValueError(f"explicit poset mixes partition sizes {sorted(sizes)}")

    @property
    def r(self) -> int:
        return self.partitions[0].size if self.partitions else 0

    def __str__(self):
        return f"explicit:@{self.source}" if self.source else "explicit"


@dataclass(frozen=True)
class NonemptyECore:
    e: int

    def __call__(self, mu: Partition) -> bool:
        return len(e_core(mu, self.e)) > 0

    def __str__(self):
        return "nonempty-core"


@dataclass(frozen=True)
class ECoreEquals:
    e: int
    kappa: Partition

    def __post_init__(self):
        if not is_core(self.kappa, self.e):
            raise ValueError(f"{self.kappa} is not a {self.e}-core")

    def __call__(self, mu: Partition) -> bool:
        return e_core(mu, self.e) == self.kappa

    def __str__(self):
        return f"core:{self.kappa}"


BasePoset = Union[AllPartitions, MaxLength, Dominating, Explicit]
PosetFilter = Union[NonemptyECore, ECoreEquals]


@dataclass(frozen=True)
class Filtered:
    base: BasePoset
    keep: PosetFilter

    @property
    def r(self) -> int:
        return self.base.r

    def __str__(self):
        return f"{self.base}+{self.keep}"


PosetSpec = Union[AllPartitions, MaxLength, Dominating, Explicit, Filtered]


def generate_poset_members(spec: PosetSpec) -> frozenset[Partition]:
    if isinstance(spec, Filtered):
        return frozenset(mu for mu in generate_poset_members(spec.base) if spec.keep(mu))
    if isinstance(spec, AllPartitions):
        return frozenset(partitions_of(spec.r))
    if isinstance(spec, MaxLength):
        return frozenset(mu for mu in partitions_of(spec.r) if len(mu) <= spec.n)
    if isinstance(spec, Dominating):
        # partitions dominating mu have first part >= mu_1
        low = spec.mu.part(1)
        return frozenset(lam for lam in partitions_of(spec.r)
                         if lam.part(1) >= low and dominates(lam, spec.mu))
    if isinstance(spec, Explicit):
        return frozenset(spec.partitions)
    raise TypeError(f"unknown poset spec {spec!r}")


def read_partition_file(path: str | Path) -> tuple[Partition, ...]:
    """One partition per line; blank lines and ``#`` comments are skipped."""
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(Partition.parse(line))
    return tuple(out)


def parse_poset_spec(text: str, r: int | None = None, filter_text: str | None = None,
                     e: int | None = None) -> PosetSpec:
    """Turn CLI-style text into a :data:`PosetSpec`.

    ``r`` is required for ``all`` and ``maxlen`` and is checked against the
    size implied by the other forms.
    """
    kind, _, arg = text.strip().partition(":")
    if kind == "all":
        base = AllPartitions(_need_r(r, text))
    elif kind == "maxlen":
        base = MaxLength(int(arg), _need_r(r, text))
    elif kind == "dominating":
        base = Dominating(Partition.parse(arg))
    elif kind == "explicit":
        if not arg.startswith("@"):
            raise ValueError("explicit posets are given as explicit:@<file>")
        base = Explicit(read_partition_file(arg[1:]), source=arg[1:])
    else:
        raise ValueError(f"unknown poset kind {kind!r}")
    if r is not None and base.r != r and not (isinstance(base, Explicit) and not base.partitions):
        raise ValueError(f"poset {text!r} has r={base.r} but --r {r} was given")
    if not filter_text:
        return base
    if e is None:
        raise ValueError("filters need e")
    fkind, _, farg = filter_text.strip().partition(":")
    if fkind == "nonempty-core":
        return Filtered(base, NonemptyECore(e))
    if fkind == "core":
        return Filtered(base, ECoreEquals(e, Partition.parse(farg)))
    raise ValueError(f"unknown filter {filter_text!r}")


def _need_r(r: int | None, text: str) -> int:
    if r is None:
        raise ValueError(f"poset {text!r} needs --r")
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    return r
