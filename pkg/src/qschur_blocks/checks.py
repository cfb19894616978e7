"""Exhaustive and randomized consistency suites.

Each ``check_*`` function returns a :class:`SuiteResult` counting the cases
it looked at and describing every violation found.  The CLI ``invariants``
command and the test suite both run these.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .abacus import beta_numbers, e_core, e_weight, is_core, partition_from_betas
from .blocks import (WeightPoset, block_label, chi_lambda, frobenius_reduction,
                     jantzen_blocks, length_function, members_with_core, s_lambda,
                     s_lambda_scan, sim_lambda_classes)
from .hooks import (horizontal_condition_a, horizontal_condition_c, only_horizontal_hooks,
                    remove_rim_hook, rim_hook, rim_hook_nodes, wrap_hook_candidates)
from .jantzen import (jantzen_graph, jantzen_nonzero, jantzen_partners,
                      jantzen_partners_by_columns, linkage_classes, nu_ep, row_hook_moves)
from .partitions import (ArithmeticParams, Partition, conjugate, dominates, hook_lengths,
                         partitions_of, strictly_dominates)
from .posets import AllPartitions, Dominating, ECoreEquals, Filtered, MaxLength

CAMPAIGN_PARAMS = [(2, 0), (3, 0), (4, 0), (2, 3), (3, 2), (4, 3), (5, 2)]
SYMMETRY_PARAMS = [(2, 0), (3, 0), (2, 3), (3, 2)]


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def expect(self, cond: bool, msg) -> None:
        self.checked += 1
        if not cond:
            self.violations.append(msg() if callable(msg) else str(msg))

    def merge(self, other: "SuiteResult") -> "SuiteResult":
        self.checked += other.checked
        self.violations.extend(other.violations)
        return self

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.checked} checks, {len(self.violations)} violations"


def _all_partitions(max_r: int, min_r: int = 0) -> Iterable[Partition]:
    for r in range(min_r, max_r + 1):
        yield from partitions_of(r)


# -- partitions and hooks ---------------------------------------------------

def check_conjugation(max_r: int = 14) -> SuiteResult:
    res = SuiteResult("conjugate is an involution")
    for mu in _all_partitions(max_r):
        res.expect(conjugate(conjugate(mu)) == mu, lambda: f"{mu}")
    return res


def check_dominance(max_r: int = 12) -> SuiteResult:
    res = SuiteResult("dominance is a partial order reversed by conjugation")
    for r in range(max_r + 1):
        parts = list(partitions_of(r))
        for lam in parts:
            res.expect(dominates(lam, lam), lambda: f"reflexivity {lam}")
            for mu in parts:
                d = dominates(lam, mu)
                res.expect(d == dominates(conjugate(mu), conjugate(lam)),
                           lambda: f"duality {lam} {mu}")
                if d and lam != mu:
                    res.expect(not dominates(mu, lam), lambda: f"antisymmetry {lam} {mu}")
        if r <= 8:
            for a in parts:
                for b in parts:
                    if not dominates(a, b):
                        continue
                    for c in parts:
                        if dominates(b, c):
                            res.expect(dominates(a, c), lambda: f"transitivity {a} {b} {c}")
    return res


def check_hook_sizes(max_r: int = 12) -> SuiteResult:
    res = SuiteResult("rim hook size equals hook length")
    for mu in _all_partitions(max_r):
        hooks = hook_lengths(mu)
        for node in mu.nodes():
            res.expect(len(rim_hook_nodes(mu, node)) == hooks[node.row - 1][node.col - 1],
                       lambda: f"{mu} at {tuple(node)}")
    return res


def check_wrap_roundtrip(max_r: int = 10, max_h: int = 6) -> SuiteResult:
    res = SuiteResult("unwrapping then wrapping restores the partition")
    for mu in _all_partitions(max_r):
        for node in mu.nodes():
            info = rim_hook(mu, node)
            nu = remove_rim_hook(mu, node)
            wraps = {lam: hook for lam, hook in wrap_hook_candidates(nu, info.size)}
            res.expect(mu in wraps and wraps[mu].corner == info.corner,
                       lambda: f"{mu} at {tuple(node)}")
    for nu in _all_partitions(max_r):
        for h in range(1, max_h + 1):
            for mu, info in wrap_hook_candidates(nu, h):
                res.expect(mu.size == nu.size + h and remove_rim_hook(mu, info.corner) == nu,
                           lambda: f"{nu} + {h}-hook -> {mu}")
    return res


def check_horizontal_equivalence(max_r: int = 12, es=(2, 3, 4, 5)) -> SuiteResult:
    res = SuiteResult("horizontal-hook conditions (a), (b), (c) agree")
    for mu in _all_partitions(max_r):
        for e in es:
            a = horizontal_condition_a(mu, e)
            b = only_horizontal_hooks(mu, e)
            c = horizontal_condition_c(mu, e)
            res.expect(a == b == c, lambda: f"{mu} e={e}: a={a} b={b} c={c}")
    return res


# -- abacus -----------------------------------------------------------------

def check_core_bead_count(max_r: int = 12, es=(2, 3, 4, 5)) -> SuiteResult:
    res = SuiteResult("e-core does not depend on the bead count")
    for mu in _all_partitions(max_r):
        for e in es:
            base = e_core(mu, e)
            for l in (len(mu), len(mu) + 1, len(mu) + e):
                counts = Counter(b % e for b in beta_numbers(mu, l))
                pushed = partition_from_betas(j + k * e for j, n in counts.items() for k in range(n))
                res.expect(pushed == base, lambda: f"{mu} e={e} l={l}")
    return res


def check_core_characterisation(max_r: int = 12, es=(2, 3, 4, 5)) -> SuiteResult:
    res = SuiteResult("e-core iff no hook divisible by e iff weight 0")
    for mu in _all_partitions(max_r):
        for e in es:
            no_div = all(h % e for row in hook_lengths(mu) for h in row)
            res.expect(is_core(mu, e) == no_div == (e_weight(mu, e) == 0), lambda: f"{mu} e={e}")
    return res


def check_bead_moves(max_r: int = 10, max_h: int = 6, es=(2, 3, 4, 5)) -> SuiteResult:
    res = SuiteResult("bead moves correspond to wrapped rim hooks")
    for nu in _all_partitions(max_r):
        for h in range(1, max_h + 1):
            l = len(nu) + h
            betas = beta_numbers(nu, l)
            moved = {}
            for b in betas:
                if b + h not in betas:
                    moved[partition_from_betas(set(betas) - {b} | {b + h})] = b
            for e in es:
                wraps = {mu: info for mu, info in wrap_hook_candidates(nu, h, e)}
                res.expect(set(wraps) == set(moved), lambda: f"{nu} h={h}")
                for mu, info in wraps.items():
                    src = moved.get(mu)
                    # runner of the source bead, shifted by the bead count
                    res.expect(src is not None and info.foot_residue == (src + 1 - l) % e,
                               lambda: f"foot residue {nu} -> {mu} e={e}")
    return res


# -- Jantzen coefficients ---------------------------------------------------

def _params(pairs) -> list[ArithmeticParams]:
    return [ArithmeticParams(e, p) for e, p in pairs]


def check_jantzen_symmetry(max_r: int = 10, pairs=SYMMETRY_PARAMS) -> SuiteResult:
    res = SuiteResult("J(lam,mu) != 0 iff J(mu',lam') != 0")
    for params in _params(pairs):
        for r in range(max_r + 1):
            parts = list(partitions_of(r))
            for lam in parts:
                lowers = {edge.lower for edge in jantzen_partners(lam, params)}
                for mu in parts:
                    res.expect((mu in lowers) == jantzen_nonzero(conjugate(mu), conjugate(lam), params),
                               lambda: f"{lam} {mu} {params}")
    return res


def check_rows_columns(max_r: int = 10, pairs=SYMMETRY_PARAMS) -> SuiteResult:
    res = SuiteResult("row and column criteria give the same coefficients")
    for params in _params(pairs):
        for r in range(max_r + 1):
            parts = list(partitions_of(r))
            lowers = {lam: {e.lower for e in jantzen_partners(lam, params)} for lam in parts}
            for mu in parts:
                uppers = {e.upper for e in jantzen_partners_by_columns(mu, params)}
                for lam in parts:
                    res.expect((mu in lowers[lam]) == (lam in uppers),
                               lambda: f"{lam} {mu} {params}")
    return res


def check_edges(max_r: int = 10, pairs=CAMPAIGN_PARAMS) -> SuiteResult:
    """Edges strictly lower in dominance, keep the e-core, and have one witness."""
    res = SuiteResult("edges preserve e-core, strict dominance, unique witness")
    for params in _params(pairs):
        for lam in _all_partitions(max_r):
            moves = Counter(mu for _, _, _, mu, _ in row_hook_moves(lam)
                            if strictly_dominates(lam, mu))
            for edge in jantzen_partners(lam, params):
                mu = edge.lower
                res.expect(strictly_dominates(lam, mu), lambda: f"dominance {lam} {mu}")
                res.expect(e_core(lam, params.e) == e_core(mu, params.e), lambda: f"core {lam} {mu}")
                res.expect(moves[mu] == 1, lambda: f"{moves[mu]} witnesses for {lam} -> {mu}")
    return res


def check_projectivity(max_r: int = 10, pairs=CAMPAIGN_PARAMS) -> SuiteResult:
    res = SuiteResult("column-constant valuations iff no Jantzen partner above")
    for params in _params(pairs):
        for r in range(max_r + 1):
            parts = list(partitions_of(r))
            hit = {e.lower for lam in parts for e in jantzen_partners(lam, params)}
            for mu in parts:
                hooks = hook_lengths(mu)
                mu_c = conjugate(mu)
                constant = all(len({nu_ep(hooks[a - 1][c - 1], params)
                                    for a in range(1, mu_c.part(c) + 1)}) == 1
                               for c in range(1, mu.part(1) + 1))
                no_cols = not jantzen_partners_by_columns(mu, params)
                res.expect(constant == no_cols == (mu not in hit), lambda: f"{mu} {params}")
    return res


# -- weight posets ----------------------------------------------------------

def check_main_theorem(poset: WeightPoset) -> SuiteResult:
    res = SuiteResult("invariant classes equal Jantzen linkage classes")
    sim = sim_lambda_classes(poset).as_set_partition()
    jan = jantzen_blocks(poset).as_set_partition()
    res.expect(sim == jan, lambda: f"{poset.spec} {poset.params}")
    return res


def check_poset_lemmas(poset: WeightPoset) -> SuiteResult:
    """Structural lemmas relating the invariants to the Jantzen graph."""
    res = SuiteResult("structural lemmas")
    params = poset.params
    members = sorted(poset.members, reverse=True)
    labels = {mu: block_label(poset, mu) for mu in members}
    graph = jantzen_graph(poset.members, params)
    comp = {}
    for i, cls in enumerate(linkage_classes(graph)):
        for mu in cls:
            comp[mu] = i

    for mu in members:
        res.expect(s_lambda(poset, mu) == s_lambda_scan(poset, mu), lambda: f"s scan {mu}")
        inv = labels[mu]
        res.expect(inv.s == 1 or inv.ell > 1, lambda: f"s>1 with ell<=1 {mu}")
        res.expect((inv.ell == 0) == (mu == inv.core), lambda: f"ell=0 iff core {mu}")

    # edges keep the e-core and s
    for edge in graph.edges:
        a, b = labels[edge.upper], labels[edge.lower]
        res.expect(a.core == b.core, lambda: f"edge core {edge.upper} {edge.lower}")
        res.expect(a.s == b.s, lambda: f"edge s {edge.upper} {edge.lower}")

    cores = {labels[mu].core for mu in members}
    for kappa in cores:
        klass = sorted(members_with_core(poset, kappa), reverse=True)
        ss = {labels[mu].s for mu in klass}
        if 1 in ss:
            res.expect(ss == {1}, lambda: f"s=1 not uniform on core {kappa}: {ss}")
            res.expect(len({comp[mu] for mu in klass}) == 1, lambda: f"core {kappa} not linked")
        for s in ss - {1}:
            chosen = [mu for mu in klass if labels[mu].s == s]
            for lam, mu in combinations(chosen, 2):
                res.expect(dominates(lam, mu) == dominates(labels[lam].chi, labels[mu].chi)
                           and dominates(mu, lam) == dominates(labels[mu].chi, labels[lam].chi),
                           lambda: f"chi dominance {lam} {mu}")
            reduced, mapping = frobenius_reduction(poset, kappa, s)
            for lam, mu in combinations(chosen, 2):
                for x, y in ((lam, mu), (mu, lam)):
                    j = jantzen_nonzero(x, y, params)
                    if params.p == 0:
                        res.expect(not j, lambda: f"p=0 edge inside (core {kappa}, s {s}): {x} {y}")
                    else:
                        jr = jantzen_nonzero(mapping[x], mapping[y], reduced.params)
                        res.expect(j == jr, lambda: f"Frobenius {x} {y} -> {mapping[x]} {mapping[y]}")

    for mu in members:
        inv = labels[mu]
        if inv.ell >= 2:
            res.merge(_check_runners(poset, mu, inv.ell, inv.s))
        if inv.s > 1:
            res.merge(_check_chi_hooks(mu, inv.chi, inv.s))
    return res


def _check_runners(poset: WeightPoset, mu: Partition, ell: int, s_mu: int) -> SuiteResult:
    res = SuiteResult("runners")
    betas = beta_numbers(mu, max(poset.r, 1))
    for s in poset.params.moduli(poset.r + 1):
        same = len({b % s for b in betas[:ell]}) == 1
        res.expect((s_mu >= s) == same, lambda: f"runner lemma {mu} s={s}")
    return res


def _check_chi_hooks(mu: Partition, chi: Partition, s: int) -> SuiteResult:
    res = SuiteResult("chi hooks")
    hooks = hook_lengths(mu)
    cols = [c for c in range(1, mu.part(1) + 1) if hooks[0][c - 1] % s == 0]
    chi_hooks = hook_lengths(chi)
    for a, row in enumerate(chi_hooks, start=1):
        for b, h in enumerate(row, start=1):
            big = cols[b - 1] if b <= len(cols) else None
            ok = big is not None and mu.has_node((a, big)) and hooks[a - 1][big - 1] == s * h
            res.expect(ok, lambda: f"chi hook {mu} ({a},{b})")
    scaled = Counter(h // s for row in hooks for h in row if h % s == 0)
    res.expect(scaled == Counter(h for row in chi_hooks for h in row),
               lambda: f"chi hook multiset {mu}")
    return res


def check_core_classes(max_r: int = 10, pairs=CAMPAIGN_PARAMS) -> SuiteResult:
    """On all partitions of r the blocks are exactly the e-core classes."""
    res = SuiteResult("blocks of all partitions are e-core classes")
    for params in _params(pairs):
        for r in range(1, max_r + 1):
            poset = WeightPoset.from_spec(AllPartitions(r), params)
            by_core = {}
            for mu in poset.members:
                by_core.setdefault(e_core(mu, params.e), set()).add(mu)
            expected = frozenset(frozenset(v) for v in by_core.values())
            jan = jantzen_blocks(poset).as_set_partition()
            sim = sim_lambda_classes(poset).as_set_partition()
            res.expect(jan == expected == sim, lambda: f"r={r} {params}")
    return res


def campaign_posets(max_r: int = 12, pairs=CAMPAIGN_PARAMS, n_random: int = 50,
                    seed: int = 0) -> Iterable[WeightPoset]:
    """All-partition, bounded-length and seeded random dominance posets."""
    rng = random.Random(seed)
    for e, p in pairs:
        params = ArithmeticParams(e, p)
        for r in range(1, max_r + 1):
            yield WeightPoset.from_spec(AllPartitions(r), params)
            for n in sorted({2, 3, r}):
                yield WeightPoset.from_spec(MaxLength(n, r), params)
        for _ in range(n_random):
            r = rng.randint(1, max_r)
            mu = rng.choice(list(partitions_of(r)))
            spec = Filtered(Dominating(mu), ECoreEquals(e, e_core(mu, e)))
            yield WeightPoset.from_spec(spec, params)


def run_all(max_r: int = 12, seed: int = 0, n_random: int = 50) -> list[SuiteResult]:
    """Every suite at sizes scaled from ``max_r`` (the acceptance sizes at 12)."""
    small = min(max_r, 10)
    results = [
        check_conjugation(max_r + 2),
        check_dominance(max_r),
        check_hook_sizes(max_r),
        check_wrap_roundtrip(small),
        check_horizontal_equivalence(max_r),
        check_core_bead_count(max_r),
        check_core_characterisation(max_r),
        check_bead_moves(small),
        check_jantzen_symmetry(small),
        check_rows_columns(small),
        check_edges(small),
        check_projectivity(small),
        check_core_classes(small),
    ]
    main = SuiteResult("main theorem campaign")
    lemmas = SuiteResult("structural lemmas on campaign posets")
    for poset in campaign_posets(max_r, n_random=n_random, seed=seed):
        main.merge(check_main_theorem(poset))
        lemmas.merge(check_poset_lemmas(poset))
    results += [main, lemmas]
    return results
