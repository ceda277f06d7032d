"""Inverse-LF queries from run-boundary samples plus predecessor search.

The index stores one entry per run of the BWT of the terminated text: the
LF-images of the run heads form a set J of positions, ILF is arithmetic
(+1 per step) between consecutive elements of J, so a query is one strict
predecessor search over J, a one-step successor adjustment, and O(1)
arithmetic.  Space is therefore proportional to the BWT run count r rather
than the text length.

Three layers make the index work for arbitrary texts:

* effective-alphabet remap — symbols are replaced by their ranks, which
  preserves the suffix order and hence every array involved;
* termination — a unique smallest symbol 0 is appended after shifting all
  symbols up by one, which appends at most 3 BWT runs;
* unwrapping — inverse-LF answers for the terminated text are mapped back
  to the original text, with the lexicographically last suffix handled by
  the defining wrap-around i_last -> i_first.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .predecessor import StaticKeySet, YFastTrie, pred, yfast_build, yfast_pred
from .text_core import Text, suffix_array_prefix_doubling

__all__ = [
    "IlfIndex",
    "TerminatedText",
    "append_terminator",
    "build_ilf_index",
    "ilf_query",
]

# Shifting must keep symbols within the 32-bit width the format promises.
_SYMBOL_WIDTH_LIMIT = 2**31 - 1


@dataclass(frozen=True)
class TerminatedText:
    """A text plus its copy shifted up by one with a fresh 0 terminator.

    i_first and i_last are ISA[1] and ISA[n] of the *original* text: the
    suffix-order positions of the full text and of its last symbol.
    """

    original: Text
    shifted: Text
    i_first: int
    i_last: int


def _terminated_core(text: Text):
    """One suffix sort of the terminated text, plus everything read off it.

    Returns (shifted symbols, sa1, isa1, bwt1, lf1, i_first, i_last,
    r_original, r_shifted); the arrays are 1-based with a placeholder at 0.
    """
    n = text.n
    if n == 0:
        raise ValueError("cannot terminate an empty text")
    if text.sigma >= _SYMBOL_WIDTH_LIMIT:
        raise ValueError(
            f"alphabet size {text.sigma} leaves no room to shift within the symbol width"
        )
    shifted = [c + 1 for c in text.symbols]
    shifted.append(0)
    n1 = n + 1
    sa0 = suffix_array_prefix_doubling(shifted)
    sa1 = [0] + [p + 1 for p in sa0]
    assert sa1[1] == n1  # the terminator suffix sorts first
    isa1 = [0] * (n1 + 1)
    for i in range(1, n1 + 1):
        isa1[sa1[i]] = i
    bwt1 = [0] * (n1 + 1)
    lf1 = [0] * (n1 + 1)
    for i in range(1, n1 + 1):
        j = sa1[i]
        if j > 1:
            bwt1[i] = shifted[j - 2]
            lf1[i] = isa1[j - 1]
        else:
            bwt1[i] = shifted[n1 - 1]
            lf1[i] = isa1[n1]
    r_shifted = 1 + sum(1 for i in range(2, n1 + 1) if bwt1[i] != bwt1[i - 1])
    # BWT runs of the original text, read off the tail of the same sort:
    # dropping the terminator suffix leaves the original suffix order.
    orig = text.symbols
    prev = None
    r_original = 0
    for i in range(2, n1 + 1):
        j = sa1[i]
        c = orig[j - 2] if j > 1 else orig[n - 1]
        if c != prev:
            r_original += 1
            prev = c
    assert r_shifted <= r_original + 3
    i_first = isa1[1] - 1
    i_last = isa1[n] - 1
    return shifted, sa1, isa1, bwt1, lf1, i_first, i_last, r_original, r_shifted


def append_terminator(text: Text) -> TerminatedText:
    """Shift the alphabet up by one and append a unique smallest 0.

    The terminator suffix sorts first and leaves the relative order of all
    other suffixes unchanged, so the shifted text's suffix array is [n+1]
    followed by the original one.  Appending costs at most 3 extra BWT runs,
    which is asserted on every call.
    """
    shifted, _, _, _, _, i_first, i_last, _, _ = _terminated_core(text)
    return TerminatedText(
        original=text,
        shifted=Text.from_symbols(shifted, text.sigma + 1),
        i_first=i_first,
        i_last=i_last,
    )


@dataclass
class IlfIndex:
    """Run-boundary samples answering inverse-LF queries on the original text.

    boundary_keys holds J = {LF[i] : i a BWT run head of the terminated
    text}; ilf_at_boundary[k] is ILF at boundary_keys[k].  pred_keys is the
    binary-search flavor of the predecessor structure and trie the y-fast
    flavor; queries use the trie unless it was built disabled.  pred_queries
    counts predecessor searches, one per non-wrap query.
    """

    n: int
    i_first: int
    i_last: int
    boundary_keys: tuple[int, ...]
    ilf_at_boundary: tuple[int, ...]
    pred_keys: StaticKeySet
    trie: YFastTrie | None
    r_original: int
    r_shifted: int
    pred_queries: int = field(default=0, compare=False)

    @property
    def boundary_count(self) -> int:
        return len(self.boundary_keys)


def build_ilf_index(text: Text, use_yfast: bool = True) -> IlfIndex:
    """Build the O(r)-entry inverse-LF index for an arbitrary-alphabet text.

    Symbols are first remapped to their ranks (an order-preserving step that
    leaves every suffix-order array unchanged), the remapped text is
    terminated, and one boundary entry is stored per BWT run of the result.
    use_yfast selects the default y-fast predecessor flavor; the fallback
    answers predecessor queries by binary search over the same keys.
    """
    if text.n == 0:
        raise ValueError("cannot index an empty text")
    ranks = {c: t for t, c in enumerate(sorted(set(text.symbols)))}
    remapped = Text.from_symbols([ranks[c] for c in text.symbols], len(ranks))
    (_, _, _, bwt1, lf1, i_first, i_last, r_original, r_shifted) = _terminated_core(
        remapped
    )
    n1 = remapped.n + 1
    heads = [1] + [i for i in range(2, n1 + 1) if bwt1[i] != bwt1[i - 1]]
    pairs = sorted((lf1[i], i) for i in heads)
    boundary_keys = tuple(p for p, _ in pairs)
    ilf_at_boundary = tuple(i for _, i in pairs)
    assert len(boundary_keys) == r_shifted
    assert boundary_keys[0] == 1
    return IlfIndex(
        n=text.n,
        i_first=i_first,
        i_last=i_last,
        boundary_keys=boundary_keys,
        ilf_at_boundary=ilf_at_boundary,
        pred_keys=StaticKeySet.build(boundary_keys, u=n1),
        trie=yfast_build(boundary_keys, u=n1) if use_yfast else None,
        r_original=r_original,
        r_shifted=r_shifted,
    )


def ilf_query(index: IlfIndex, i: int) -> int:
    """Inverse LF at suffix-order position i of the original text.

    The lexicographically last suffix wraps to the first by definition;
    every other position is answered inside the terminated text, where the
    answer sits (j - p_k) steps after the nearest boundary p_k <= j, and is
    shifted back down by one.
    """
    if not 1 <= i <= index.n:
        raise IndexError(f"position {i} outside [1..{index.n}]")
    if i == index.i_last:
        return index.i_first
    j = i + 1
    index.pred_queries += 1
    if index.trie is not None:
        k = yfast_pred(index.trie, j)
    else:
        k = pred(index.pred_keys, j)
    # Strict predecessor, then a one-step successor equality adjustment so
    # that boundary positions use their own stored entry.
    if k < len(index.boundary_keys) and index.boundary_keys[k] == j:
        k += 1
    p_k = index.boundary_keys[k - 1]
    return index.ilf_at_boundary[k - 1] + (j - p_k) - 1
