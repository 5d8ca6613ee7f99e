"""q-ary words, run decompositions, and the indel (Levenshtein) distance.

Words are plain tuples of small non-negative ints.  The alphabet size q is
passed explicitly to the operations whose meaning depends on it; nothing is
stored on the word itself.  All functions here are pure.
"""

from __future__ import annotations

from dataclasses import dataclass

Word = tuple  # tuple of ints in [0, q)


def parse_word(s: str) -> Word:
    """Parse an ASCII digit string like "01001" into a word."""
    return tuple(int(ch) for ch in s)


def format_word(w: Word) -> str:
    """Render a word as an ASCII digit string."""
    return "".join(str(s) for s in w)


def check_word(w: Word, q: int) -> None:
    """Raise ValueError unless every symbol is in [0, q)."""
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    for s in w:
        if not 0 <= s < q:
            raise ValueError(f"symbol {s} out of range for alphabet size {q}")


@dataclass(frozen=True)
class RunProfile:
    """Decomposition of a word into maximal runs of equal symbols.

    longest_idx is the index of the first run of maximal length (-1 for the
    empty word, whose r_max is 0).
    """

    run_symbols: tuple
    run_lengths: tuple
    longest_idx: int
    r_max: int

    @property
    def r(self) -> int:
        return len(self.run_lengths)


def runs(w: Word) -> RunProfile:
    """Split w into maximal runs. The empty word has zero runs."""
    if not w:
        return RunProfile((), (), -1, 0)
    symbols = []
    lengths = []
    cur = w[0]
    count = 1
    for s in w[1:]:
        if s == cur:
            count += 1
        else:
            symbols.append(cur)
            lengths.append(count)
            cur = s
            count = 1
    symbols.append(cur)
    lengths.append(count)
    r_max = max(lengths)
    return RunProfile(tuple(symbols), tuple(lengths), lengths.index(r_max), r_max)


def reconstruct(profile: RunProfile) -> Word:
    """Inverse of runs()."""
    out = []
    for sym, length in zip(profile.run_symbols, profile.run_lengths):
        out.extend([sym] * length)
    return tuple(out)


def is_subsequence(y: Word, x: Word) -> bool:
    """True iff y can be obtained from x by deleting symbols (greedy scan)."""
    if len(y) > len(x):
        return False
    it = iter(x)
    return all(s in it for s in y)


def is_alternating(w: Word, q: int) -> bool:
    """True iff w reads off consecutive symbols of some cyclic order on all q symbols.

    Equivalent for q = 2 to "all runs have length 1".  Adjacent pairs of w
    define a partial successor map; w is alternating iff that map is
    functional, fixed-point free, and extendable to a single q-cycle, which
    for a partial injection means its edges form disjoint paths or one cycle
    through all q symbols.
    """
    check_word(w, q)
    succ: dict = {}
    pred: dict = {}
    for a, b in zip(w, w[1:]):
        if a == b:
            return False
        if succ.get(a, b) != b or pred.get(b, a) != a:
            return False
        succ[a] = b
        pred[b] = a
    # Reject any cycle shorter than q; a q-cycle is fine.
    seen = set()
    for start in succ:
        if start in seen:
            continue
        length = 1
        node = start
        seen.add(node)
        while node in succ:
            node = succ[node]
            if node == start:
                if length != q:
                    return False
                break
            if node in seen:
                break
            seen.add(node)
            length += 1
    return True


def is_two_symbol_alternating(w: Word) -> bool:
    """True iff w alternates between exactly two fixed symbols (ABAB...).

    This is the pattern behind the alternating-ambiguity error events of the
    two-trace decoders; for q = 2 it coincides with is_alternating.
    """
    if len(w) < 2:
        return len(w) == 1
    a, b = w[0], w[1]
    if a == b:
        return False
    expected = (a, b)
    return all(s == expected[i % 2] for i, s in enumerate(w))


def _lcs_banded(x: Word, y: Word, band: int) -> int:
    """LCS length restricted to |i - j| <= band; a lower bound in general,
    exact whenever the true indel distance is <= band."""
    m, n = len(x), len(y)
    NEG = -(m + n + 1)
    prev = [0] * (n + 1)  # row i = 0
    for j in range(band + 1, n + 1):
        prev[j] = NEG
    for i in range(1, m + 1):
        lo = max(0, i - band)
        hi = min(n, i + band)
        cur = [NEG] * (n + 1)
        if lo == 0:
            cur[0] = 0
        xi = x[i - 1]
        for j in range(max(1, lo), hi + 1):
            best = prev[j - 1] + 1 if xi == y[j - 1] else NEG
            if prev[j] > best:
                best = prev[j]
            if cur[j - 1] > best:
                best = cur[j - 1]
            cur[j] = best
        prev = cur
    return prev[n]


def indel_distance(x: Word, y: Word) -> int:
    """Minimum number of insertions plus deletions transforming x into y.

    Substitutions are not allowed moves, so this equals
    |x| + |y| - 2*LCS(x, y).  Computed with a banded LCS whose band doubles
    until the result is certified exact, which keeps the common case (nearly
    equal words) linear-time.
    """
    if x == y:
        return 0
    m, n = len(x), len(y)
    if m == 0 or n == 0:
        return m + n
    band = abs(m - n) + 2
    while True:
        d = m + n - 2 * _lcs_banded(x, y, band)
        # Any path of cost d stays within |i-j| <= d, so d <= band is exact.
        if d <= band or band >= m + n:
            return d
        band = min(2 * band, m + n)
