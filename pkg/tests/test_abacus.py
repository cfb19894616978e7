import pytest
from hypothesis import given, strategies as st

from conftest import GOLDEN, P, partitions
from oracles import core_by_stripping
from qschur_blocks import (beta_numbers, e_core, e_weight, partition_from_betas, partitions_of,
                           render_abacus, same_e_core)
from qschur_blocks.abacus import is_core
from qschur_blocks.partitions import hook_lengths


@pytest.mark.parametrize("mu, l, expected", [
    (P(4, 4, 3, 1), 6, (9, 8, 6, 3, 1, 0)),
    (P(4, 2), 6, (9, 6, 3, 2, 1, 0)),
    (P(), 3, (2, 1, 0)),
])
def test_beta_numbers(mu, l, expected):
    assert beta_numbers(mu, l) == expected


def test_beta_numbers_too_few_beads():
    with pytest.raises(ValueError):
        beta_numbers(P(2, 1, 1), 2)


@pytest.mark.parametrize("betas, expected", [
    ((9, 8, 6, 3, 1, 0), P(4, 4, 3, 1)),
    ((2, 1, 0), P()),
    ((3, 1), P(2, 1)),
])
def test_partition_from_betas(betas, expected):
    assert partition_from_betas(betas) == expected


@given(partitions(14), st.integers(0, 5))
def test_beta_round_trip(mu, extra):
    assert partition_from_betas(beta_numbers(mu, len(mu) + extra)) == mu


@pytest.mark.parametrize("mu, e, expected", [
    (P(4, 4, 3, 1), 3, P(4, 2)),
    (P(9, 2), 2, P(1)),
    (P(34, 5), 6, P(10, 5)),
])
def test_e_core(mu, e, expected):
    assert e_core(mu, e) == expected == core_by_stripping(mu, e)


def test_e_core_with_one_runner():
    assert e_core(P(4, 2, 1), 1) == P()


@pytest.mark.parametrize("mu, e, expected", [
    (P(4, 4, 3, 1), 3, 2),
    (P(4, 2), 3, 0),
    (P(30, 7, 2), 24, 0),
])
def test_e_weight(mu, e, expected):
    assert e_weight(mu, e) == expected


@pytest.mark.parametrize("lhs, rhs, e, expected", [
    (P(3), P(1, 1, 1), 3, True),
    (P(35, 3, 1), P(37, 2), 3, False),
    (P(2), P(1, 1), 3, False),
])
def test_same_e_core(lhs, rhs, e, expected):
    assert same_e_core(lhs, rhs, e) is expected


def test_core_matches_hook_stripping_exhaustively():
    for r in range(10):
        for mu in partitions_of(r):
            for e in (2, 3, 4, 5):
                assert e_core(mu, e) == core_by_stripping(mu, e), (mu, e)


@given(partitions(12), st.sampled_from([2, 3, 4, 5]))
def test_core_iff_no_hook_divisible(mu, e):
    no_div = all(h % e for row in hook_lengths(mu) for h in row)
    assert is_core(mu, e) == no_div == (e_weight(mu, e) == 0)


def _beads_drawn(text, e):
    rows = text.splitlines()[1:]
    return {r * e + j for r, row in enumerate(rows) for j, glyph in enumerate(row.split()) if glyph == "●"}


@pytest.mark.parametrize("mu, e, l, beads", [
    (P(4, 4, 3, 1), 3, 6, {0, 1, 3, 6, 8, 9}),
    (P(), 2, 2, {0, 1}),
    (P(4, 2), 3, 6, {0, 1, 2, 3, 6, 9}),
])
def test_render_abacus_beads(mu, e, l, beads):
    assert _beads_drawn(render_abacus(mu, e, l), e) == beads


def test_render_abacus_golden():
    text = render_abacus(P(4, 4, 3, 1), 3, 6) + "\n\n" + render_abacus(P(4, 2), 3, 6) + "\n"
    assert text == (GOLDEN / "abacus_figure.txt").read_text()
