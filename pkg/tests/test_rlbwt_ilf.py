import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csq.measures import bwt_run_count
from csq.rlbwt_ilf import append_terminator, build_ilf_index, ilf_query
from csq.text_core import Text, build_bundle

small_texts = st.lists(st.integers(0, 3), min_size=1, max_size=64)


# ---------------------------------------------------------------------------
# append_terminator


def test_append_terminator_example():
    tt = append_terminator(Text.from_symbols([0, 1], 2))
    assert list(tt.shifted.symbols) == [1, 2, 0]
    assert tt.shifted.sigma == 3


@given(small_texts)
@settings(max_examples=60, deadline=None)
def test_terminated_text_invariants(symbols):
    t = Text.from_symbols(symbols, 4)
    tt = append_terminator(t)
    n = t.n
    assert tt.shifted.n == n + 1
    assert tt.shifted.at(n + 1) == 0
    assert tt.shifted.symbols.count(0) == 1
    for j in range(1, n + 1):
        assert tt.shifted.at(j) == t.at(j) + 1
    b = build_bundle(t)
    assert tt.i_first == b.isa[1]
    assert tt.i_last == b.isa[n]


@given(small_texts)
@settings(max_examples=60, deadline=None)
def test_terminated_suffix_array_structure(symbols):
    """SA of the terminated text is [n+1] followed by the original SA."""
    t = Text.from_symbols(symbols, 4)
    tt = append_terminator(t)
    sa_orig = list(build_bundle(t).sa[1:])
    sa_term = list(build_bundle(tt.shifted).sa[1:])
    assert sa_term == [t.n + 1] + sa_orig


@given(small_texts)
@settings(max_examples=60, deadline=None)
def test_terminator_adds_at_most_three_runs(symbols):
    t = Text.from_symbols(symbols, 4)
    tt = append_terminator(t)
    assert bwt_run_count(tt.shifted) <= bwt_run_count(t) + 3


def test_append_terminator_figure_runs(fig_text):
    tt = append_terminator(fig_text)
    assert bwt_run_count(fig_text) == 6
    assert bwt_run_count(tt.shifted) <= 9


@given(small_texts)
@settings(max_examples=60, deadline=None)
def test_lf_is_arithmetic_within_bwt_runs(symbols):
    """On terminated texts, BWT[i-1] = BWT[i] implies LF[i] = LF[i-1] + 1."""
    tt = append_terminator(Text.from_symbols(symbols, 4))
    b = build_bundle(tt.shifted)
    for i in range(2, tt.shifted.n + 1):
        if b.bwt[i] == b.bwt[i - 1]:
            assert b.lf[i] == b.lf[i - 1] + 1


def test_append_terminator_rejects_width_overflow():
    with pytest.raises(ValueError):
        append_terminator(Text.from_symbols([0], 2**31 - 1))


# ---------------------------------------------------------------------------
# build_ilf_index


def test_boundary_count_equals_terminated_runs():
    t = Text.from_ascii("a" * 8)
    idx = build_ilf_index(t)
    assert idx.boundary_count == bwt_run_count(append_terminator(t).shifted)


def test_boundary_count_figure(fig_text):
    idx = build_ilf_index(fig_text)
    assert idx.boundary_count <= 6 + 3
    assert idx.r_original == 6


def test_boundary_count_all_distinct():
    t = Text.from_symbols([3, 1, 4, 2, 0], 5)
    assert build_ilf_index(t).boundary_count == t.n + 1


@given(small_texts)
@settings(max_examples=60, deadline=None)
def test_boundary_invariants(symbols):
    t = Text.from_symbols(symbols, 4)
    idx = build_ilf_index(t)
    assert idx.boundary_keys[0] == 1
    assert idx.boundary_count == idx.r_shifted
    assert idx.r_shifted <= idx.r_original + 3
    assert list(idx.boundary_keys) == sorted(idx.boundary_keys)


def test_remap_leaves_answers_unchanged():
    t = Text.from_symbols([5, 1000, 5, 7, 1000], 1001)
    b = build_bundle(t)
    idx = build_ilf_index(t)
    for i in range(1, t.n + 1):
        assert ilf_query(idx, i) == b.ilf[i]


# ---------------------------------------------------------------------------
# ilf_query


def test_ilf_query_figure_values(fig_text, fig_bundle):
    idx = build_ilf_index(fig_text)
    assert ilf_query(idx, 2) == 7
    assert ilf_query(idx, 1) == 19
    assert ilf_query(idx, 19) == 16
    for i in range(1, 20):
        assert ilf_query(idx, i) == fig_bundle.ilf[i]


def test_ilf_query_single_symbol():
    idx = build_ilf_index(Text.from_ascii("a"))
    assert ilf_query(idx, 1) == 1


def test_ilf_query_out_of_range(fig_text):
    idx = build_ilf_index(fig_text)
    with pytest.raises(IndexError):
        ilf_query(idx, 0)
    with pytest.raises(IndexError):
        ilf_query(idx, 20)


@given(small_texts, st.booleans())
@settings(max_examples=60, deadline=None)
def test_ilf_query_full_sweep_both_flavors(symbols, use_yfast):
    t = Text.from_symbols(symbols, 4)
    b = build_bundle(t)
    idx = build_ilf_index(t, use_yfast=use_yfast)
    for i in range(1, t.n + 1):
        assert ilf_query(idx, i) == b.ilf[i]


def test_ilf_query_larger_random_sweep():
    rng = random.Random(11)
    for _ in range(10):
        n = rng.randint(500, 2000)
        sigma = rng.choice([2, 4, 26])
        t = Text.from_symbols([rng.randrange(sigma) for _ in range(n)], sigma)
        b = build_bundle(t)
        idx = build_ilf_index(t)
        assert all(ilf_query(idx, i) == b.ilf[i] for i in range(1, n + 1))


def test_one_predecessor_query_per_lookup(fig_text):
    idx = build_ilf_index(fig_text)
    assert idx.pred_queries == 0
    for i in range(1, 20):
        ilf_query(idx, i)
    # Every position except the wrap-around i_last costs one search.
    assert idx.pred_queries == 19 - 1
