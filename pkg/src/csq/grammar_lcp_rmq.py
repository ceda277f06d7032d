"""Straight-line grammars with prefix-sum statistics, LCP RMQ, and LCE queries.

A straight-line grammar (SLG) has one rule per nonterminal over terminals
(arbitrary integers) and nonterminal references, and derives exactly one
string, the expansion of its start symbol.  This module builds an SLG whose
expansion is the differential LCP array of a text (A[1] = LCP[1] and
A[i] = LCP[i] - LCP[i-1], so prefix sums of A reconstruct LCP), equips every
rule with prefix/suffix/child statistics, and answers

* prefix_stats_query / suffix_stats_query — sum, minimum, and leftmost
  argmin of the partial sums of a prefix or suffix of a nonterminal's
  expansion, by descending O(height) rules with one small-set predecessor
  query each;
* interval_argmin_prefix_sum — leftmost argmin of A[1]+...+A[i] over an
  interval (b..e], by a left-suffix / middle-children / right-prefix
  decomposition at the deepest rule containing the interval;
* lcp_rmq — leftmost argmin of LCP over (b..e] (the same position, by the
  prefix-sum identity);
* lce_query — longest common extension of two suffixes, via two ISA
  lookups, one LCP RMQ, and one prefix-sum readout.

The grammar is built by deterministic round-based pairing of adjacent
symbols (memoizing distinct pairs), then widened by cutting every parse
tree at depth k, which caps right-hand sides at l = 2*2^k symbols and
divides the height by k.  Terminal values may be any integers; all sums use
exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, log2
from typing import Iterable, Mapping, Sequence, Union

from .predecessor import SmallSet, smallset_build, smallset_pred
from .text_core import Text, build_bundle

__all__ = [
    "DiffLcpArray",
    "LcpRmqIndex",
    "Nt",
    "RuleStats",
    "Slg",
    "SparseRmq",
    "build_diff_lcp_slg",
    "build_lcp_rmq_index",
    "build_rule_stats",
    "diff_lcp_from_bundle",
    "expand",
    "interval_argmin_prefix_sum",
    "lce_query",
    "lcp_rmq",
    "make_slg",
    "prefix_stats_query",
    "sparse_rmq",
    "sparse_rmq_build",
    "slg_from_rule_list",
    "suffix_stats_query",
    "validate_slg",
]


@dataclass(frozen=True)
class Nt:
    """A reference to nonterminal `id` inside a rule right-hand side."""

    id: int


Atom = Union[int, "Nt"]


@dataclass(frozen=True)
class Slg:
    """A straight-line grammar: rules[x] is the right-hand side of x.

    exp_lens and heights cache, per nonterminal, the expansion length and
    the parse-tree height (a rule of terminals has height 1).  Construct
    through make_slg, which validates and fills the caches.
    """

    rules: tuple[tuple[Atom, ...], ...]
    start: int
    exp_lens: tuple[int, ...] = ()
    heights: tuple[int, ...] = ()


def _topological_order(rules: Sequence[Sequence[Atom]]) -> list[int]:
    """Children-first order of nonterminal ids; rejects cycles and bad refs."""
    L = len(rules)
    state = [0] * L  # 0 unvisited, 1 in progress, 2 done
    order: list[int] = []
    for root in range(L):
        if state[root]:
            continue
        stack: list[tuple[int, int]] = [(root, 0)]
        state[root] = 1
        while stack:
            x, t = stack[-1]
            if t == len(rules[x]):
                stack.pop()
                state[x] = 2
                order.append(x)
                continue
            stack[-1] = (x, t + 1)
            a = rules[x][t]
            if isinstance(a, Nt):
                if not 0 <= a.id < L:
                    raise ValueError(f"rule {x} references missing nonterminal {a.id}")
                if state[a.id] == 1:
                    raise ValueError(f"cyclic rule involving nonterminal {a.id}")
                if state[a.id] == 0:
                    state[a.id] = 1
                    stack.append((a.id, 0))
    return order


def validate_slg(slg: Slg) -> tuple[int, int]:
    """Check well-formedness and return (size, height).

    Size is the sum over rules of max(|rhs|, 1); height is the parse-tree
    height of the start symbol.  Raises ValueError naming the offending
    nonterminal on a cycle or a dangling reference.
    """
    rules = slg.rules
    if not 0 <= slg.start < len(rules):
        raise ValueError(f"start symbol {slg.start} has no rule")
    order = _topological_order(rules)
    heights = [0] * len(rules)
    for x in order:
        best = 0
        for a in rules[x]:
            if isinstance(a, Nt):
                best = max(best, heights[a.id])
        heights[x] = 1 + best
    size = sum(max(len(r), 1) for r in rules)
    return size, heights[slg.start]


def make_slg(rules: Sequence[Sequence[Atom]], start: int) -> Slg:
    """Validate a dense rule table and attach expansion-length/height caches."""
    frozen = tuple(tuple(r) for r in rules)
    bare = Slg(frozen, start)
    validate_slg(bare)
    order = _topological_order(frozen)
    exp_lens = [0] * len(frozen)
    heights = [0] * len(frozen)
    for x in order:
        total = 0
        best = 0
        for a in frozen[x]:
            if isinstance(a, Nt):
                total += exp_lens[a.id]
                best = max(best, heights[a.id])
            else:
                total += 1
        exp_lens[x] = total
        heights[x] = 1 + best
    return Slg(frozen, start, tuple(exp_lens), tuple(heights))


def slg_from_rule_list(
    pairs: Iterable[tuple[int, Sequence[Atom]]], start: int
) -> Slg:
    """Build from (nonterminal, rhs) pairs; ids must cover 0..L-1 exactly."""
    table: dict[int, tuple[Atom, ...]] = {}
    for x, rhs in pairs:
        if x in table:
            raise ValueError(f"multiply defined nonterminal {x}")
        table[x] = tuple(rhs)
    missing = [x for x in range(len(table)) if x not in table]
    if missing:
        raise ValueError(f"missing rule for nonterminal {missing[0]}")
    return make_slg([table[x] for x in range(len(table))], start)


def expand(slg: Slg, nonterminal: int) -> list[int]:
    """The string of terminals derived from the given nonterminal."""
    if not 0 <= nonterminal < len(slg.rules):
        raise ValueError(f"no rule for nonterminal {nonterminal}")
    out: list[int] = []
    stack: list[Atom] = [Nt(nonterminal)]
    while stack:
        a = stack.pop()
        if isinstance(a, Nt):
            stack.extend(reversed(slg.rules[a.id]))
        else:
            out.append(a)
    return out


# ---------------------------------------------------------------------------
# Sparse RMQ (leftmost argmin over (b..e])


@dataclass(frozen=True)
class SparseRmq:
    """Doubling table for leftmost range-argmin over a fixed integer array."""

    values: tuple[int, ...]
    table: tuple[tuple[tuple[int, int], ...], ...]


def sparse_rmq_build(array: Sequence[int]) -> SparseRmq:
    values = tuple(array)
    m = len(values)
    row = tuple((values[t], t + 1) for t in range(m))
    table = [row]
    span = 1
    while 2 * span <= m:
        prev = table[-1]
        row = tuple(min(prev[t], prev[t + span]) for t in range(m - 2 * span + 1))
        table.append(row)
        span *= 2
    return SparseRmq(values, tuple(table))


def sparse_rmq(rmq: SparseRmq, b: int, e: int) -> int:
    """Smallest position of the minimum over positions (b..e], 1-based."""
    m = len(rmq.values)
    if not 0 <= b < e <= m:
        raise ValueError(f"empty or invalid range ({b}..{e}] over {m} values")
    k = (e - b).bit_length() - 1
    left = rmq.table[k][b]
    right = rmq.table[k][e - (1 << k)]
    return min(left, right)[1]


# ---------------------------------------------------------------------------
# Rule statistics


@dataclass(frozen=True)
class RuleStats:
    """Per-rule prefix/suffix/child statistics of an SLG's expansions.

    For a rule x with right-hand side e_1..e_L, position delta indexes the
    1-based arrays (index 0 is a placeholder):

    * plen/psum[delta], delta in [1..L+1]: length and sum of the expansion
      of e_1..e_{delta-1};
    * pmin/ppos[delta]: minimum and leftmost argmin of the partial sums
      inside that prefix region (None marks the empty region at delta = 1);
    * slen/ssum/smin/spos[delta], delta in [1..L]: the same for the suffix
      region e_{delta+1}..e_L (None sentinel at delta = L);
    * mmin/mpos[delta], delta in [1..L]: minimum partial sum and leftmost
      argmin of the prefix of the full expansion ending inside e_delta,
      with a sparse RMQ over mmin per rule;
    * pred[x]: a small-set predecessor over the boundary keys plen[1..L+1].

    exp_len/exp_sum/nt_min/nt_pos aggregate each nonterminal's full
    expansion: length, sum, minimum partial sum, leftmost argmin.
    """

    slg: Slg
    exp_len: tuple[int, ...]
    exp_sum: tuple[int, ...]
    nt_min: tuple[int, ...]
    nt_pos: tuple[int, ...]
    plen: tuple[tuple[int | None, ...], ...]
    psum: tuple[tuple[int | None, ...], ...]
    pmin: tuple[tuple[int | None, ...], ...]
    ppos: tuple[tuple[int | None, ...], ...]
    slen: tuple[tuple[int | None, ...], ...]
    ssum: tuple[tuple[int | None, ...], ...]
    smin: tuple[tuple[int | None, ...], ...]
    spos: tuple[tuple[int | None, ...], ...]
    mmin: tuple[tuple[int | None, ...], ...]
    mpos: tuple[tuple[int | None, ...], ...]
    rmq: tuple[SparseRmq, ...]
    pred: tuple[SmallSet, ...]


def build_rule_stats(slg: Slg) -> RuleStats:
    """Compute all per-rule statistics, children before parents.

    Every rule must have a nonempty right-hand side (so every expansion is
    nonempty and the boundary keys are strictly increasing).
    """
    rules = slg.rules
    L_total = len(rules)
    order = _topological_order(rules)
    exp_len = [0] * L_total
    exp_sum = [0] * L_total
    nt_min = [0] * L_total
    nt_pos = [0] * L_total
    plen_all: list[tuple] = [()] * L_total
    psum_all: list[tuple] = [()] * L_total
    pmin_all: list[tuple] = [()] * L_total
    ppos_all: list[tuple] = [()] * L_total
    slen_all: list[tuple] = [()] * L_total
    ssum_all: list[tuple] = [()] * L_total
    smin_all: list[tuple] = [()] * L_total
    spos_all: list[tuple] = [()] * L_total
    mmin_all: list[tuple] = [()] * L_total
    mpos_all: list[tuple] = [()] * L_total
    rmq_all: list[SparseRmq] = [None] * L_total  # type: ignore[list-item]
    pred_all: list[SmallSet] = [None] * L_total  # type: ignore[list-item]

    def item(a: Atom) -> tuple[int, int, int, int]:
        # (length, sum, min partial sum, leftmost argmin) of the atom's expansion
        if isinstance(a, Nt):
            return exp_len[a.id], exp_sum[a.id], nt_min[a.id], nt_pos[a.id]
        return 1, a, a, 1

    for x in order:
        rhs = rules[x]
        L = len(rhs)
        if L == 0:
            raise ValueError(f"nonterminal {x} has an empty right-hand side")
        plen: list = [None, 0]
        psum: list = [None, 0]
        pmin: list = [None, None]
        ppos: list = [None, None]
        mmin: list = [None]
        mpos: list = [None]
        for d in range(1, L + 1):
            ln, sm, mn, pos = item(rhs[d - 1])
            cand_v = psum[d] + mn
            cand_p = plen[d] + pos
            mmin.append(cand_v)
            mpos.append(cand_p)
            if pmin[d] is None or cand_v < pmin[d]:
                pmin.append(cand_v)
                ppos.append(cand_p)
            else:
                pmin.append(pmin[d])
                ppos.append(ppos[d])
            plen.append(plen[d] + ln)
            psum.append(psum[d] + sm)
        slen: list = [None] * (L + 1)
        ssum: list = [None] * (L + 1)
        smin: list = [None] * (L + 1)
        spos: list = [None] * (L + 1)
        slen[L], ssum[L] = 0, 0
        for d in range(L - 1, 0, -1):
            ln1, sm1, mn1, pos1 = item(rhs[d])  # item e_{d+1}
            slen[d] = ln1 + slen[d + 1]
            ssum[d] = sm1 + ssum[d + 1]
            alt = None if smin[d + 1] is None else sm1 + smin[d + 1]
            if alt is None or mn1 <= alt:
                smin[d] = mn1
                spos[d] = pos1
            else:
                smin[d] = alt
                spos[d] = ln1 + spos[d + 1]
        exp_len[x] = plen[L + 1]
        exp_sum[x] = psum[L + 1]
        nt_min[x] = pmin[L + 1]
        nt_pos[x] = ppos[L + 1]
        plen_all[x] = tuple(plen)
        psum_all[x] = tuple(psum)
        pmin_all[x] = tuple(pmin)
        ppos_all[x] = tuple(ppos)
        slen_all[x] = tuple(slen)
        ssum_all[x] = tuple(ssum)
        smin_all[x] = tuple(smin)
        spos_all[x] = tuple(spos)
        mmin_all[x] = tuple(mmin)
        mpos_all[x] = tuple(mpos)
        rmq_all[x] = sparse_rmq_build(mmin[1:])
        pred_all[x] = smallset_build(plen[1:])

    return RuleStats(
        slg=slg,
        exp_len=tuple(exp_len),
        exp_sum=tuple(exp_sum),
        nt_min=tuple(nt_min),
        nt_pos=tuple(nt_pos),
        plen=tuple(plen_all),
        psum=tuple(psum_all),
        pmin=tuple(pmin_all),
        ppos=tuple(ppos_all),
        slen=tuple(slen_all),
        ssum=tuple(ssum_all),
        smin=tuple(smin_all),
        spos=tuple(spos_all),
        mmin=tuple(mmin_all),
        mpos=tuple(mpos_all),
        rmq=tuple(rmq_all),
        pred=tuple(pred_all),
    )


# ---------------------------------------------------------------------------
# Statistics queries


def prefix_stats_query(stats: RuleStats, x: int, p: int) -> tuple[int, int, int]:
    """(sum, min, argmin) of the partial sums of exp(x)[1..p].

    With B = exp(x): returns (B[1]+...+B[p], min over t <= p of
    B[1]+...+B[t], smallest minimizing t).  One rule descent per level,
    each localizing p with a single predecessor query.
    """
    if not 1 <= p <= stats.exp_len[x]:
        raise ValueError(f"prefix length {p} outside [1..{stats.exp_len[x]}]")
    rules = stats.slg.rules
    acc_sum = 0  # sum of the full regions above the current level
    acc_len = 0  # their total length
    best_v: int | None = None
    best_pos = 0
    cur, p_cur = x, p
    while True:
        d = smallset_pred(stats.pred[cur], p_cur)
        pm = stats.pmin[cur][d]
        if pm is not None:
            v = acc_sum + pm
            if best_v is None or v < best_v:
                best_v = v
                best_pos = acc_len + stats.ppos[cur][d]
        acc_sum += stats.psum[cur][d]
        a = rules[cur][d - 1]
        if not isinstance(a, Nt):
            leaf = a
            break
        acc_len += stats.plen[cur][d]
        p_cur -= stats.plen[cur][d]
        cur = a.id
    total = acc_sum + leaf
    if best_v is None or total < best_v:
        return total, total, p
    return total, best_v, best_pos


def suffix_stats_query(stats: RuleStats, x: int, p: int) -> tuple[int, int, int]:
    """(sum, min, argmin) of the partial sums of the last p symbols of exp(x).

    With C = exp(x)[m-p+1..m]: returns (C[1]+...+C[p], min over t of
    C[1]+...+C[t], smallest minimizing t).  The first element of C always
    wins ties, since every other candidate region lies strictly to its
    right.
    """
    if not 1 <= p <= stats.exp_len[x]:
        raise ValueError(f"suffix length {p} outside [1..{stats.exp_len[x]}]")
    rules = stats.slg.rules
    path: list[tuple[int, int]] = []
    cur, p_cur = x, stats.exp_len[x] - p + 1
    while True:
        d = smallset_pred(stats.pred[cur], p_cur)
        path.append((cur, d))
        a = rules[cur][d - 1]
        if not isinstance(a, Nt):
            leaf = a
            break
        p_cur -= stats.plen[cur][d]
        cur = a.id
    # Walk the suffix regions left to right (deepest level first); track the
    # best minimum relative to the leading leaf element.
    tail_sum = 0
    tail_len = 0
    best_rel: int | None = None
    best_pos = 0
    for cur_i, d in reversed(path):
        sm = stats.smin[cur_i][d]
        if sm is not None:
            v = tail_sum + sm
            if best_rel is None or v < best_rel:
                best_rel = v
                best_pos = 1 + tail_len + stats.spos[cur_i][d]
        tail_sum += stats.ssum[cur_i][d]
        tail_len += stats.slen[cur_i][d]
    total = leaf + tail_sum
    if best_rel is None or best_rel >= 0:
        return total, leaf, 1
    return total, leaf + best_rel, best_pos


def interval_argmin_prefix_sum(stats: RuleStats, b: int, e: int) -> int:
    """Smallest i in (b..e] minimizing A[1]+...+A[i], A = start's expansion.

    Descends to the deepest rule whose single child still contains the
    interval, splits the interval there into a suffix of the left child,
    full middle children, and a prefix of the right child, and combines the
    three candidates left to right with strict-inequality updates.
    """
    start = stats.slg.start
    n = stats.exp_len[start]
    if not 0 <= b < e <= n:
        raise ValueError(f"empty or invalid range ({b}..{e}] over {n} positions")
    rules = stats.slg.rules
    x, b1, e1 = start, b, e
    while True:
        i = smallset_pred(stats.pred[x], b1)
        j = smallset_pred(stats.pred[x], e1 + 1)
        if i != j:
            break
        # The whole interval lies inside child i, which must expand to more
        # than one symbol and hence is a nonterminal.
        b1 -= stats.plen[x][i]
        e1 -= stats.plen[x][i]
        x = rules[x][i - 1].id
    plen_x = stats.plen[x]
    psum_x = stats.psum[x]
    p_left = plen_x[i + 1] - b1 if i >= 1 else 0
    p_mid = plen_x[j] - plen_x[i + 1]
    p_right = e1 - plen_x[j]
    best_v: int | None = None
    best_pos = 0
    acc_sum = 0
    acc_len = 0
    if p_left > 0:
        a = rules[x][i - 1]
        if isinstance(a, Nt):
            s_l, v_l, pos_l = suffix_stats_query(stats, a.id, p_left)
        else:
            s_l, v_l, pos_l = a, a, 1
        best_v, best_pos = v_l, pos_l
        acc_sum, acc_len = s_l, p_left
    if p_mid > 0:
        t = sparse_rmq(stats.rmq[x], i, j - 1)
        v_m = stats.mmin[x][t] - psum_x[i + 1]
        pos_m = stats.mpos[x][t] - plen_x[i + 1]
        if best_v is None or acc_sum + v_m < best_v:
            best_v = acc_sum + v_m
            best_pos = acc_len + pos_m
        acc_sum += psum_x[j] - psum_x[i + 1]
        acc_len += p_mid
    if p_right > 0:
        a = rules[x][j - 1]
        if isinstance(a, Nt):
            _, v_r, pos_r = prefix_stats_query(stats, a.id, p_right)
        else:
            v_r, pos_r = a, 1
        if best_v is None or acc_sum + v_r < best_v:
            best_v = acc_sum + v_r
            best_pos = acc_len + pos_r
    return b + best_pos


# ---------------------------------------------------------------------------
# Differential LCP grammar


@dataclass(frozen=True)
class DiffLcpArray:
    """A[1] = LCP[1] and A[i] = LCP[i] - LCP[i-1]; prefix sums give LCP back."""

    values: tuple[int, ...]

    def prefix_sums(self) -> list[int]:
        out = []
        total = 0
        for v in self.values:
            total += v
            out.append(total)
        return out


def diff_lcp_from_bundle(bundle) -> DiffLcpArray:
    lcp = bundle.lcp
    values = [lcp[1]]
    for i in range(2, bundle.n + 1):
        values.append(lcp[i] - lcp[i - 1])
    return DiffLcpArray(tuple(values))


def _pairing_slp(values: Sequence[int]) -> tuple[list[tuple[Atom, ...]], int]:
    """Round-based pairing: each round replaces adjacent pairs by memoized
    nonterminals, carrying an odd element; height is logarithmic."""
    rules: list[tuple[Atom, ...]] = []
    memo: dict[tuple[Atom, Atom], int] = {}
    seq: list[Atom] = list(values)
    if len(seq) == 1:
        rules.append((seq[0],))
        return rules, 0
    while len(seq) > 1:
        nxt: list[Atom] = []
        for t in range(0, len(seq) - 1, 2):
            pair = (seq[t], seq[t + 1])
            if pair not in memo:
                memo[pair] = len(rules)
                rules.append(pair)
            nxt.append(Nt(memo[pair]))
        if len(seq) % 2:
            nxt.append(seq[-1])
        seq = nxt
    root = seq[0]
    assert isinstance(root, Nt)
    return rules, root.id


def _depth_cut(rules: Sequence[tuple[Atom, ...]], rhs: tuple[Atom, ...], depth: int) -> tuple[Atom, ...]:
    """The parse-tree cut at the given depth below a right-hand side."""
    if depth == 0:
        return rhs
    out: list[Atom] = []
    for a in rhs:
        if isinstance(a, Nt):
            out.extend(_depth_cut(rules, rules[a.id], depth - 1))
        else:
            out.append(a)
    return tuple(out)


def widen_slg(slg: Slg, k: int) -> Slg:
    """Replace every rule by its depth-k parse-tree cut and prune.

    Right-hand sides grow by at most 2^k symbols each while the height
    drops to about height/k; the expansion is unchanged.
    """
    if k < 1:
        raise ValueError("widening depth must be at least 1")
    cut = [_depth_cut(slg.rules, rhs, k) for rhs in slg.rules]
    reachable = set()
    queue = [slg.start]
    while queue:
        x = queue.pop()
        if x in reachable:
            continue
        reachable.add(x)
        for a in cut[x]:
            if isinstance(a, Nt):
                queue.append(a.id)
    keep = sorted(reachable)
    remap = {old: new for new, old in enumerate(keep)}
    rules = [
        tuple(Nt(remap[a.id]) if isinstance(a, Nt) else a for a in cut[old])
        for old in keep
    ]
    return make_slg(rules, remap[slg.start])


def _widening_depth(n: int, epsilon: float) -> int:
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie strictly between 0 and 1")
    if n < 4:
        return 1
    return max(1, ceil(epsilon * log2(log2(n))))


def build_diff_lcp_slg(text: Text, epsilon: float = 0.5) -> tuple[Slg, RuleStats]:
    """Grammar (with statistics) expanding to the text's differential LCP array.

    The pairing construction is widened by k = ceil(epsilon * log2 log2 n)
    levels, so every right-hand side has at most l = 2*2^k symbols.  The
    expansion is verified against the array on every build.
    """
    if text.n == 0:
        raise ValueError("cannot build a grammar for an empty text")
    bundle = build_bundle(text)
    diff = diff_lcp_from_bundle(bundle)
    k = _widening_depth(text.n, epsilon)
    raw_rules, raw_start = _pairing_slp(diff.values)
    slp = make_slg(raw_rules, raw_start)
    _, slp_height = validate_slg(slp)
    widened = widen_slg(slp, k)
    _, height = validate_slg(widened)
    assert height <= -(-slp_height // k) + 1
    ell = 2 * (1 << k)
    assert all(len(r) <= ell for r in widened.rules)
    assert expand(widened, widened.start) == list(diff.values)
    assert diff.prefix_sums() == list(bundle.lcp[1:])
    return widened, build_rule_stats(widened)


@dataclass(frozen=True)
class LcpRmqIndex:
    """Grammar-backed LCP RMQ / LCE structure for one text.

    Holds the widened grammar and its statistics, the text's ISA for LCE
    queries, and build metadata (widening depth k, rhs bound ell, grammar
    size/height before and after widening) for reporting.
    """

    text: Text
    slg: Slg
    stats: RuleStats
    isa: tuple[int, ...]
    n: int
    k_widen: int
    ell: int
    slp_size: int
    slp_height: int
    size: int
    height: int


def build_lcp_rmq_index(text: Text, epsilon: float = 0.5) -> LcpRmqIndex:
    if text.n == 0:
        raise ValueError("cannot index an empty text")
    bundle = build_bundle(text)
    diff = diff_lcp_from_bundle(bundle)
    k = _widening_depth(text.n, epsilon)
    raw_rules, raw_start = _pairing_slp(diff.values)
    slp = make_slg(raw_rules, raw_start)
    slp_size, slp_height = validate_slg(slp)
    widened = widen_slg(slp, k)
    size, height = validate_slg(widened)
    assert height <= -(-slp_height // k) + 1
    ell = 2 * (1 << k)
    assert all(len(r) <= ell for r in widened.rules)
    stats = build_rule_stats(widened)
    assert stats.exp_len[widened.start] == text.n
    return LcpRmqIndex(
        text=text,
        slg=widened,
        stats=stats,
        isa=bundle.isa,
        n=text.n,
        k_widen=k,
        ell=ell,
        slp_size=slp_size,
        slp_height=slp_height,
        size=size,
        height=height,
    )


def lcp_rmq(index: LcpRmqIndex, b: int, e: int) -> int:
    """Smallest position of the minimum of LCP over (b..e].

    LCP[i] is the prefix sum A[1]+...+A[i] of the differential array, so
    the interval argmin over prefix sums is the LCP argmin.
    """
    return interval_argmin_prefix_sum(index.stats, b, e)


def lce_query(index: LcpRmqIndex, i: int, j: int) -> int:
    """Length of the longest common prefix of the suffixes at i and j."""
    n = index.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"positions ({i}, {j}) outside [1..{n}]")
    if i == j:
        return n - i + 1
    p, q = index.isa[i], index.isa[j]
    if p > q:
        p, q = q, p
    pos = interval_argmin_prefix_sum(index.stats, p, q)
    total, _, _ = prefix_stats_query(index.stats, index.slg.start, pos)
    return total
