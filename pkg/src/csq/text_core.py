"""Suffix-array machinery: the classic query arrays of a text, pattern ranges,
and a naive longest-common-extension scan.

Conventions used throughout the package:

* a text of length n is the 1-indexed sequence T[1..n] of integer symbols;
* every public array is 1-indexed and stored with an unused placeholder at
  index 0, so that ``arr[i]`` reads exactly like the textbook definition.

The bundle collects nine arrays:

    SA       suffix array: SA[i] = start of the i-th suffix in sorted order
    ISA      inverse permutation of SA
    LCP      LCP[1] = 0; LCP[i] = LCE of the suffixes ranked i and i-1
    PLCP     LCP in text order: PLCP[SA[i]] = LCP[i]
    BWT      BWT[i] = T[SA[i]-1], wrapping to T[n] when SA[i] = 1
    LF       LF[i] = ISA[SA[i]-1], wrapping to ISA[n] when SA[i] = 1
    ILF      inverse permutation of LF
    PHI      PHI[SA[i]] = SA[i-1]; PHI[SA[1]] = SA[n]
    INV_PHI  inverse permutation of PHI
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Union


@dataclass(frozen=True)
class Text:
    """An immutable integer string; ``symbols[0]`` holds T[1]."""

    symbols: tuple[int, ...]
    sigma: int

    @staticmethod
    def from_symbols(symbols: Sequence[int], sigma: int | None = None) -> "Text":
        syms = tuple(int(s) for s in symbols)
        if syms and min(syms) < 0:
            raise ValueError("symbols must be non-negative integers")
        if sigma is None:
            sigma = max(syms) + 1 if syms else 1
        if sigma < 1:
            raise ValueError("sigma must be at least 1")
        if syms and max(syms) >= sigma:
            raise ValueError(f"symbol {max(syms)} out of range for sigma={sigma}")
        return Text(syms, sigma)

    @staticmethod
    def from_ascii(s: str) -> "Text":
        """Map each character to its code point (alphabet fixed at 256)."""
        codes = [ord(c) for c in s]
        if codes and max(codes) > 255:
            raise ValueError("from_ascii accepts 8-bit characters only")
        return Text(tuple(codes), 256)

    @property
    def n(self) -> int:
        return len(self.symbols)

    def at(self, j: int) -> int:
        """T[j], 1-based."""
        if not 1 <= j <= len(self.symbols):
            raise IndexError(f"position {j} out of [1..{len(self.symbols)}]")
        return self.symbols[j - 1]

    def slice(self, i: int, j: int) -> tuple[int, ...]:
        """T[i..j] inclusive, 1-based; empty when j < i."""
        return self.symbols[max(i, 1) - 1 : j]

    def reverse(self) -> "Text":
        return Text(tuple(reversed(self.symbols)), self.sigma)

    def to_ascii(self) -> str:
        return "".join(chr(s) for s in self.symbols)


PatternLike = Union["Text", str, Sequence[int]]


def _coerce_pattern(pattern: PatternLike) -> tuple[int, ...]:
    if isinstance(pattern, Text):
        return pattern.symbols
    if isinstance(pattern, str):
        return tuple(ord(c) for c in pattern)
    return tuple(int(s) for s in pattern)


def suffix_array_prefix_doubling(symbols: Sequence[int]) -> list[int]:
    """0-based suffix array by prefix doubling.

    Each round sorts by a pair of ranks packed into one integer, so the whole
    computation is O(n log^2 n) with list.sort doing the heavy lifting.
    """
    n = len(symbols)
    if n == 0:
        return []
    get_sym = symbols.__getitem__
    sa = sorted(range(n), key=get_sym)
    rank = [0] * n
    r = 0
    for t in range(1, n):
        if symbols[sa[t]] != symbols[sa[t - 1]]:
            r += 1
        rank[sa[t]] = r
    k = 1
    base = n + 1
    while r + 1 < n:
        key = [a * base + b + 1 for a, b in zip(rank, rank[k:])]
        key.extend(a * base for a in rank[n - k :])
        sa.sort(key=key.__getitem__)
        rank[sa[0]] = r = 0
        for t in range(1, n):
            if key[sa[t]] != key[sa[t - 1]]:
                r += 1
            rank[sa[t]] = r
        k <<= 1
    return sa


def suffix_array_naive(symbols: Sequence[int]) -> list[int]:
    """0-based suffix array by direct suffix comparison.

    Quadratic-memory oracle kept as an independent cross-check for the
    prefix-doubling sorter; intended for small inputs only.
    """
    syms = tuple(symbols)
    return sorted(range(len(syms)), key=lambda i: syms[i:])


def _lcp_kasai(symbols: Sequence[int], sa0: list[int], isa0: list[int]) -> list[int]:
    # 0-based: lcp0[r] = LCE(sa0[r], sa0[r-1]) for r >= 1, lcp0[0] = 0.
    n = len(symbols)
    lcp0 = [0] * n
    h = 0
    for j in range(n):
        r = isa0[j]
        if r > 0:
            j2 = sa0[r - 1]
            while j + h < n and j2 + h < n and symbols[j + h] == symbols[j2 + h]:
                h += 1
            lcp0[r] = h
            if h:
                h -= 1
        else:
            h = 0
    return lcp0


@dataclass(frozen=True)
class SuffixArrayBundle:
    """The nine arrays of a text, each 1-indexed with a placeholder at 0."""

    text: Text
    sa: tuple[int, ...]
    isa: tuple[int, ...]
    lcp: tuple[int, ...]
    plcp: tuple[int, ...]
    bwt: tuple[int, ...]
    lf: tuple[int, ...]
    ilf: tuple[int, ...]
    phi: tuple[int, ...]
    inv_phi: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.text.n


def build_bundle(
    text: Text,
    sorter: Callable[[Sequence[int]], list[int]] = suffix_array_prefix_doubling,
) -> SuffixArrayBundle:
    """Compute all nine arrays of ``text``.

    ``sorter`` may be swapped for :func:`suffix_array_naive` to cross-check
    the default prefix-doubling sort.
    """
    n = text.n
    if n == 0:
        raise ValueError("cannot build a suffix-array bundle for an empty text")
    syms = text.symbols
    sa0 = sorter(syms)
    isa0 = [0] * n
    for r, j in enumerate(sa0):
        isa0[j] = r
    lcp0 = _lcp_kasai(syms, sa0, isa0)

    sa = [0] * (n + 1)
    isa = [0] * (n + 1)
    lcp = [0] * (n + 1)
    for r in range(n):
        sa[r + 1] = sa0[r] + 1
        lcp[r + 1] = lcp0[r]
    for j in range(n):
        isa[j + 1] = isa0[j] + 1

    plcp = [0] * (n + 1)
    for r in range(1, n + 1):
        plcp[sa[r]] = lcp[r]

    bwt = [0] * (n + 1)
    lf = [0] * (n + 1)
    isa_last = isa[n]
    for r in range(1, n + 1):
        j = sa[r]
        if j > 1:
            bwt[r] = syms[j - 2]
            lf[r] = isa[j - 1]
        else:
            bwt[r] = syms[n - 1]
            lf[r] = isa_last

    ilf = [0] * (n + 1)
    for r in range(1, n + 1):
        ilf[lf[r]] = r

    phi = [0] * (n + 1)
    phi[sa[1]] = sa[n]
    for r in range(2, n + 1):
        phi[sa[r]] = sa[r - 1]
    inv_phi = [0] * (n + 1)
    for j in range(1, n + 1):
        inv_phi[phi[j]] = j

    return SuffixArrayBundle(
        text=text,
        sa=tuple(sa),
        isa=tuple(isa),
        lcp=tuple(lcp),
        plcp=tuple(plcp),
        bwt=tuple(bwt),
        lf=tuple(lf),
        ilf=tuple(ilf),
        phi=tuple(phi),
        inv_phi=tuple(inv_phi),
    )


@dataclass(frozen=True)
class PatternRange:
    """Half-open rank interval (range_beg..range_end] of suffixes that start
    with the pattern."""

    range_beg: int
    range_end: int

    @property
    def occ_count(self) -> int:
        return self.range_end - self.range_beg

    @property
    def is_empty(self) -> bool:
        return self.range_end == self.range_beg


def _cmp_suffix_pattern(syms: tuple[int, ...], p0: int, pat: tuple[int, ...]) -> int:
    """-1 if the suffix at 0-based p0 sorts before the pattern, 0 if the
    pattern is its prefix, +1 if it sorts after."""
    n = len(syms)
    for off, pc in enumerate(pat):
        q = p0 + off
        if q >= n:
            return -1  # suffix is a proper prefix of the pattern
        sc = syms[q]
        if sc != pc:
            return -1 if sc < pc else 1
    return 0


def pattern_range(text: Text, sa: Sequence[int], pattern: PatternLike) -> PatternRange:
    """Rank interval of ``pattern`` by binary search over the suffix array.

    ``sa`` is the 1-indexed array from :func:`build_bundle`.  The empty
    pattern yields (0, n).
    """
    pat = _coerce_pattern(pattern)
    syms = text.symbols
    n = text.n
    lo, hi = 1, n + 1
    while lo < hi:  # first rank whose suffix is >= pattern (prefix counts)
        mid = (lo + hi) // 2
        if _cmp_suffix_pattern(syms, sa[mid] - 1, pat) < 0:
            lo = mid + 1
        else:
            hi = mid
    beg = lo - 1
    hi = n + 1
    while lo < hi:  # first rank whose suffix is strictly > pattern
        mid = (lo + hi) // 2
        if _cmp_suffix_pattern(syms, sa[mid] - 1, pat) <= 0:
            lo = mid + 1
        else:
            hi = mid
    return PatternRange(beg, lo - 1)


def occurrences(text: Text, sa: Sequence[int], pattern: PatternLike) -> list[int]:
    """Sorted starting positions of ``pattern`` in ``text``."""
    rng = pattern_range(text, sa, pattern)
    return sorted(sa[r] for r in range(rng.range_beg + 1, rng.range_end + 1))


def lce_naive(text: Text, i: int, j: int) -> int:
    """Length of the longest common prefix of suffixes T[i..n] and T[j..n],
    by direct symbol comparison."""
    syms = text.symbols
    n = len(syms)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"positions ({i}, {j}) out of [1..{n}]")
    a, b = i - 1, j - 1
    ell = 0
    while a + ell < n and b + ell < n and syms[a + ell] == syms[b + ell]:
        ell += 1
    return ell
