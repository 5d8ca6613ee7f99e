"""LCS/SCS lengths and enumeration of all shortest common supersequences
(and all longest common subsequences) of two words.

The enumerations are exact and deduplicated.  An optional diagonal band
accelerates the DP when the caller knows how far the two words can drift
apart (for channel traces: the total number of indels), and a candidate cap
guards against the exponential worst case; hitting the cap sets a truncation
flag instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word

DEFAULT_CAP = 10 ** 6


@dataclass(frozen=True)
class ScsResult:
    """Extremal common-sequence enumeration result.

    candidates is a sorted tuple of distinct words, each of length `length`;
    truncated is set when more candidates existed than the cap allowed.
    """

    length: int
    candidates: tuple
    truncated: bool


def lcs_length(y1: Word, y2: Word) -> int:
    """Length of the longest common subsequence (row DP, O(min) memory)."""
    if len(y1) < len(y2):
        y1, y2 = y2, y1
    n = len(y2)
    if n == 0:
        return 0
    row = [0] * (n + 1)
    for a in y1:
        prev_diag = 0
        for j in range(1, n + 1):
            tmp = row[j]
            if a == y2[j - 1]:
                row[j] = prev_diag + 1
            elif row[j - 1] > row[j]:
                row[j] = row[j - 1]
            prev_diag = tmp
    return row[n]


def scs_length(y1: Word, y2: Word) -> int:
    """Length of the shortest common supersequence."""
    return len(y1) + len(y2) - lcs_length(y1, y2)


class _SuffixLcs:
    """Banded table of suffix LCS lengths L(i, j) = LCS(y1[i:], y2[j:]).

    The band keeps cells with j - i <= up and i - j <= down; a plain int
    band means up = down = band and None means no restriction.  Rows are
    plain lists offset by the band's left edge; cells outside the band read
    as a large negative so they never look optimal.  The in-band values are
    exact whenever no optimal alignment can drift past the band (for two
    deletion traces of a length-n word: up = n - |y1|, down = n - |y2|).
    """

    __slots__ = ("y1", "y2", "m1", "m2", "rows", "los", "neg")

    def __init__(self, y1: Word, y2: Word, band):
        m1, m2 = len(y1), len(y2)
        if band is None:
            up = down = m1 + m2
        elif isinstance(band, tuple):
            up, down = band
        else:
            up = down = band
        self.y1, self.y2, self.m1, self.m2 = y1, y2, m1, m2
        neg = -(m1 + m2 + 1)
        self.neg = neg
        rows: list = [None] * (m1 + 1)
        los = [0] * (m1 + 1)
        nxt_row: list = []
        nxt_lo = 0
        for i in range(m1, -1, -1):
            lo = i - down
            if lo < 0:
                lo = 0
            hi = i + up
            if hi > m2:
                hi = m2
            row = [0] * (hi - lo + 1)
            if i < m1 and lo <= hi:
                yi = y1[i]
                y2l = self.y2
                nlen = len(nxt_row)
                right = neg  # L(i, j+1), out of band beyond hi
                for j in range(hi, lo - 1, -1):
                    if j == m2:
                        right = 0
                        continue  # L(i, m2) = 0, already in row
                    k = j - nxt_lo
                    if yi == y2l[j]:
                        kk = k + 1
                        diag = nxt_row[kk] if 0 <= kk < nlen else neg
                        v = diag + 1
                    else:
                        v = nxt_row[k] if 0 <= k < nlen else neg
                        if right > v:
                            v = right
                    row[j - lo] = v
                    right = v
            rows[i] = row
            los[i] = lo
            nxt_row, nxt_lo = row, lo
        self.rows = rows
        self.los = los

    def get(self, i: int, j: int) -> int:
        if i > self.m1 or j > self.m2:
            return self.neg
        k = j - self.los[i]
        row = self.rows[i]
        return row[k] if 0 <= k < len(row) else self.neg


class _CapTracker:
    __slots__ = ("cap", "hit")

    def __init__(self, cap: int):
        if cap < 1:
            raise ValueError("cap must be >= 1")
        self.cap = cap
        self.hit = False

    def clamp(self, words) -> tuple:
        out = tuple(sorted(words))
        if len(out) > self.cap:
            self.hit = True
            out = out[: self.cap]
        return out


def enumerate_scs(y1: Word, y2: Word, band: int | None = None,
                  cap: int = DEFAULT_CAP) -> ScsResult:
    """All distinct shortest common supersequences of y1 and y2.

    When the symbols at a DP cell agree, every shortest supersequence starts
    with that symbol (exchange argument), so only the diagonal move is
    expanded there; otherwise a symbol may be consumed from either word
    whenever doing so preserves the suffix LCS.  `band` restricts the DP to
    |i - j| <= band, exact whenever the caller knows the optimal alignment
    cannot drift further (for two traces of a length-n word: d1 + d2).
    """
    y1, y2 = tuple(y1), tuple(y2)
    L = _SuffixLcs(y1, y2, band)
    m1, m2 = len(y1), len(y2)
    tracker = _CapTracker(cap)
    memo: dict = {}

    def rec(i: int, j: int) -> tuple:
        got = memo.get((i, j))
        if got is not None:
            return got
        if i == m1:
            res = (y2[j:],)
        elif j == m2:
            res = (y1[i:],)
        elif y1[i] == y2[j]:
            sym = y1[i]
            res = tracker.clamp([(sym,) + s for s in rec(i + 1, j + 1)])
        else:
            here = L.get(i, j)
            words = set()
            if L.get(i + 1, j) == here:
                sym = y1[i]
                words.update((sym,) + s for s in rec(i + 1, j))
            if L.get(i, j + 1) == here:
                sym = y2[j]
                words.update((sym,) + s for s in rec(i, j + 1))
            res = tracker.clamp(words)
        memo[i, j] = res
        return res

    candidates = rec(0, 0)
    length = m1 + m2 - L.get(0, 0)
    return ScsResult(length, candidates, tracker.hit)


def enumerate_lcs(y1: Word, y2: Word, band: int | None = None,
                  cap: int = DEFAULT_CAP) -> ScsResult:
    """All distinct longest common subsequences of y1 and y2.

    Mirror image of enumerate_scs: at equal symbols every LCS starts with
    the matched symbol; otherwise the skip moves preserving the suffix LCS
    are expanded.
    """
    y1, y2 = tuple(y1), tuple(y2)
    L = _SuffixLcs(y1, y2, band)
    m1, m2 = len(y1), len(y2)
    tracker = _CapTracker(cap)
    memo: dict = {}

    def rec(i: int, j: int) -> tuple:
        got = memo.get((i, j))
        if got is not None:
            return got
        if i == m1 or j == m2:
            res = ((),)
        elif y1[i] == y2[j]:
            sym = y1[i]
            res = tracker.clamp([(sym,) + s for s in rec(i + 1, j + 1)])
        else:
            here = L.get(i, j)
            words = set()
            if L.get(i + 1, j) == here:
                words.update(rec(i + 1, j))
            if L.get(i, j + 1) == here:
                words.update(rec(i, j + 1))
            res = tracker.clamp(words)
        memo[i, j] = res
        return res

    candidates = rec(0, 0)
    return ScsResult(int(L.get(0, 0)), candidates, tracker.hit)
