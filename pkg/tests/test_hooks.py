import pytest
from hypothesis import given, strategies as st

from conftest import P, partitions
from oracles import diagram, foot, from_diagram, hand, is_partition_diagram, is_rim_hook, rim_by_definition
from qschur_blocks import (horizontal_condition_a, horizontal_condition_c, only_horizontal_hooks,
                           partitions_of, remove_rim_hook, rim_hook, wrap_hook_candidates)
from qschur_blocks.hooks import removable_hooks, rim_hook_nodes
from qschur_blocks.partitions import NodeNotInDiagramError

DOMINATING_MEMBERS = [P(37, 2), P(35, 3, 1), P(34, 5), P(33, 4, 2), P(32, 6, 1), P(31, 8),
                 P(31, 5, 3), P(30, 7, 2), P(29, 9, 1), P(29, 6, 4)]


def test_rim_hook_fields():
    info = rim_hook(P(4, 4, 3, 1), (1, 1), e=3)
    assert (info.size, info.leg, info.hand, info.foot) == (7, 3, (1, 4), (4, 1))
    assert info.foot_residue == (1 - 4) % 3
    assert not info.horizontal
    assert rim_hook(P(4, 4, 3, 1), (1, 1)).foot_residue is None


def test_rim_hook_outside_diagram():
    with pytest.raises(NodeNotInDiagramError):
        rim_hook(P(2, 1), (2, 2))


@given(partitions(12))
def test_rim_hook_matches_diagram(mu):
    d = diagram(mu)
    for a, b in d:
        nodes = rim_by_definition(mu, a, b)
        info = rim_hook(mu, (a, b))
        assert rim_hook_nodes(mu, (a, b)) == nodes
        assert is_rim_hook(nodes)
        assert (info.hand, info.foot, info.size) == (hand(nodes), foot(nodes), len(nodes))
        assert info.leg == foot(nodes)[0] - hand(nodes)[0]
        rest = d - nodes
        assert is_partition_diagram(rest)
        assert remove_rim_hook(mu, (a, b)) == from_diagram(rest)


def _wraps_by_brute_force(nu, h):
    small = diagram(nu)
    out = set()
    for mu in partitions_of(nu.size + h):
        big = diagram(mu)
        if small <= big and is_rim_hook(big - small):
            out.add((mu, hand(big - small), foot(big - small)))
    return out


@pytest.mark.parametrize("nu", [P(), P(1), P(2, 1), P(3, 3), P(4, 2, 1), P(2, 2, 2, 1)])
@pytest.mark.parametrize("h", [1, 2, 3, 4, 5])
def test_wrap_candidates_match_brute_force(nu, h):
    got = {(mu, info.hand, info.foot) for mu, info in wrap_hook_candidates(nu, h)}
    assert got == _wraps_by_brute_force(nu, h)


def test_wrap_rejects_empty_hook():
    with pytest.raises(ValueError):
        wrap_hook_candidates(P(2), 0)


@given(partitions(9), st.integers(1, 5), st.sampled_from([2, 3, 4]))
def test_wrap_then_unwrap_round_trip(nu, h, e):
    for mu, info in wrap_hook_candidates(nu, h, e):
        assert info.size == h
        assert remove_rim_hook(mu, info.corner) == nu
        assert info.foot_residue == (info.foot.col - info.foot.row) % e


def test_removable_hooks():
    # hook lengths of (4,4,3,1): 7 5 4 2 / 6 4 3 1 / 4 2 1 / 1
    assert [i.corner for i in removable_hooks(P(4, 4, 3, 1), 3)] == [(2, 3)]
    assert sorted(i.corner for i in removable_hooks(P(4, 4, 3, 1), 4)) == [(1, 3), (2, 2), (3, 1)]


@pytest.mark.parametrize("mu, e, expected", [
    (P(7, 4), 3, False),
    (P(4, 2), 3, True),
    (P(3, 3), 3, False),
    (P(5, 3), 3, True),
])
def test_only_horizontal_hooks(mu, e, expected):
    assert only_horizontal_hooks(mu, e) is expected


@pytest.mark.parametrize("mu", DOMINATING_MEMBERS)
def test_dominating_poset_is_horizontal(mu):
    assert only_horizontal_hooks(mu, 3)


def _only_horizontal_by_diagram(mu, e):
    # remove every e-rim hook found on the diagram and recurse
    d = diagram(mu)
    hooks = [rim_by_definition(mu, a, b) for a, b in d]
    hooks = [h for h in hooks if len(h) == e]
    if any(len({i for i, _ in h}) > 1 for h in hooks):
        return False
    return all(_only_horizontal_by_diagram(from_diagram(d - h), e) for h in hooks)


def test_horizontal_against_diagram_oracle():
    for r in range(11):
        for mu in partitions_of(r):
            for e in (2, 3, 4):
                assert only_horizontal_hooks(mu, e) == _only_horizontal_by_diagram(mu, e), (mu, e)


@given(partitions(12), st.sampled_from([2, 3, 4, 5]))
def test_horizontal_conditions_equivalent(mu, e):
    b = only_horizontal_hooks(mu, e)
    assert horizontal_condition_a(mu, e) == b == horizontal_condition_c(mu, e)
