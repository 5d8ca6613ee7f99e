"""Decoders for the deletion/insertion channels.

Includes the trivial lazy decoder, the run-prolonging embedding-number
decoder of a target length, maximum-likelihood decoding over an explicit
code, the degraded two-trace decoder (argmax of the embedding-number product
over all shortest common supersequences, resp. longest common subsequences),
the exact optimal decoders for the 1- and 2-deletion channels, and a
brute-force optimal-decoder oracle that minimizes the exact expected-distance
objective over a window of output lengths.

All optimality comparisons are exact integer comparisons; ties are broken by
minimal length first, then lexicographically smallest word.
"""

from __future__ import annotations

import warnings
from itertools import product
from math import comb

from .combinatorics import embedding_number, embedding_number_banded, insertion_ball
from .supersequences import DEFAULT_CAP, ScsResult, enumerate_lcs, enumerate_scs
from .words import Word, indel_distance, is_subsequence, runs


def decode_lazy(y: Word) -> Word:
    """Return the channel output unchanged."""
    return tuple(y)


def _prolong(y: Word, profile, amounts: dict) -> Word:
    """Rebuild y with run i lengthened by amounts[i] extra symbols."""
    out = []
    for i, (sym, length) in enumerate(zip(profile.run_symbols, profile.run_lengths)):
        out.extend([sym] * (length + amounts.get(i, 0)))
    return tuple(out)


def decode_en(y: Word, m: int) -> Word:
    """Run-prolonging embedding-number decoder: a length-m word with a
    large embedding number of y, built by growing maximal runs.

      m = |y|     -> y itself (the unique maximizer among equal-length words);
      m = |y| + 1 -> the first longest run grows by one (always the true
                     argmax of Emb(. ; y) over length-m words);
      m = |y| + 2 -> with first-longest length a and second-longest length b,
                     grow the first longest by two if a >= 2b, else grow the
                     first longest and the first second-longest by one each.

    For m = |y| + 2 this is the decoder the 2-deletion optimality results
    are stated for, but it is NOT always the global embedding argmax: on
    words containing a two-symbol alternating substring of length >= 4,
    extending the alternation embeds strictly more often (see the module
    tests for the exact exception sets).  Only target lengths up to
    |y| + 2 are supported; for the empty word the all-zeros word is
    returned (all candidates tie).
    """
    y = tuple(y)
    delta = m - len(y)
    if delta < 0:
        raise ValueError(f"target length {m} shorter than the input ({len(y)})")
    if delta > 2:
        raise ValueError("only target lengths up to len(y) + 2 are supported")
    if delta == 0:
        return y
    if not y:
        return (0,) * m
    prof = runs(y)
    i = prof.longest_idx
    if delta == 1:
        return _prolong(y, prof, {i: 1})
    if prof.r == 1:
        return _prolong(y, prof, {i: 2})
    a = prof.r_max
    b = -1
    j = -1
    for idx, length in enumerate(prof.run_lengths):
        if idx != i and length > b:
            b, j = length, idx
    if a >= 2 * b:
        return _prolong(y, prof, {i: 2})
    return _prolong(y, prof, {i: 1, j: 1})


def decode_ml_code(y: Word, code) -> Word:
    """Codeword maximizing Emb(c; y); ties go to the lexicographically
    smallest codeword.  Warns when every codeword has zero likelihood."""
    best = None
    best_emb = -1
    for c in sorted(code):
        e = embedding_number(c, y)
        if e > best_emb:
            best, best_emb = c, e
    if best is None:
        raise ValueError("code must be non-empty")
    if best_emb == 0:
        warnings.warn("all codewords have zero likelihood for this output",
                      stacklevel=2)
    return best


def _ext_row_del(prev, plo, i, sym, y, d, m):
    """Next banded row of Emb(x[:i]; y[:j]) after emitting x_i = sym.

    Window j in [max(0, i-d), min(i, m)]; the only cell without a previous
    value above it is j = i, and j = 0 has no diagonal term.
    """
    lo = i - d
    if lo < 0:
        lo = 0
    hi = i if i < m else m
    row = []
    ap = row.append
    j = lo
    if j == 0:
        ap(prev[0])
        j = 1
    pl = len(prev)
    while j <= hi:
        pj = j - plo
        v = prev[pj] if pj < pl else 0
        if sym == y[j - 1]:
            v += prev[pj - 1]
        ap(v)
        j += 1
    return row, lo


def _mld_scores(candidates, traces, deletion: bool) -> list:
    """Embedding-number products for every candidate, in order.

    deletion=True scores Emb(x; y1) * Emb(x; y2) (candidates are common
    supersequences); deletion=False scores Emb(y1; x) * Emb(y2; x)
    (candidates are common subsequences).  Consecutive sorted candidates
    share DP rows up to their common prefix, so the total work is the sum
    of distinct-suffix lengths, not candidates x length.
    """
    if not candidates:
        return []
    s = len(candidates[0])
    per_trace = []
    for y in traces:
        m = len(y)
        if deletion:
            stack = [([1], 0)]  # Emb rows over y-prefix, window [0, 0]
            per_trace.append((y, m, s - m, stack))
        else:
            stack = [([1] * (m - s + 1), 0)]  # F_0[i] = 1 over i in [0, dy]
            per_trace.append((y, m, m - s, stack))
    scores = []
    prev_x = None
    for x in candidates:
        k = 0
        if prev_x is not None:
            while k < s and x[k] == prev_x[k]:
                k += 1
            for _, _, _, stack in per_trace:
                del stack[k + 1:]
        for depth in range(k, s):
            sym = x[depth]
            i = depth + 1
            for y, m, d, stack in per_trace:
                prev, plo = stack[-1]
                if deletion:
                    stack.append(_ext_row_del(prev, plo, i, sym, y, d, m))
                else:
                    # row i of F[i'] = Emb(y[:i']; x[:i]) over i' in [i, i+d]
                    run = 0
                    row = []
                    ap = row.append
                    base = i - 1 - plo  # prev index of i' - 1 at i' = i
                    for off in range(d + 1):
                        if y[i + off - 1] == sym:
                            run += prev[base + off]
                        ap(run)
                    stack.append((row, i))
        prev_x = x
        prod = 1
        for y, m, d, stack in per_trace:
            row, lo = stack[-1]
            prod *= row[m - lo]
        scores.append(prod)
    return scores


def _argmax_scored(candidates, scores) -> Word:
    best_i = 0
    best = scores[0]
    for i in range(1, len(scores)):
        if scores[i] > best:
            best, best_i = scores[i], i
    return candidates[best_i]


def mld_two_del_detailed(y1: Word, y2: Word, band: int | None = None,
                         cap: int = DEFAULT_CAP) -> tuple:
    """Degraded two-trace decoder for deletions; returns (word, truncated).

    argmax of Emb(x; y1) * Emb(x; y2) over all shortest common
    supersequences of the traces (exact integer products, ties to the
    lexicographically smallest word).
    """
    y1, y2 = tuple(y1), tuple(y2)
    # If one trace contains the other, the unique SCS is the longer trace.
    if is_subsequence(y2, y1):
        return y1, False
    if is_subsequence(y1, y2):
        return y2, False
    res = enumerate_scs(y1, y2, band=band, cap=cap)
    scores = _mld_scores(res.candidates, (y1, y2), deletion=True)
    return _argmax_scored(res.candidates, scores), res.truncated


def decode_mld_two_del(y1: Word, y2: Word, band: int | None = None,
                       cap: int = DEFAULT_CAP) -> Word:
    return mld_two_del_detailed(y1, y2, band=band, cap=cap)[0]


def mld_two_ins_detailed(y1: Word, y2: Word, band: int | None = None,
                         cap: int = DEFAULT_CAP) -> tuple:
    """Two-trace decoder for insertions; returns (word, truncated).

    argmax of Emb(y1; x) * Emb(y2; x) over all longest common subsequences
    (likelihood maximization, symmetric to the deletion case).
    """
    y1, y2 = tuple(y1), tuple(y2)
    if is_subsequence(y1, y2):
        return y1, False
    if is_subsequence(y2, y1):
        return y2, False
    res = enumerate_lcs(y1, y2, band=band, cap=cap)
    scores = _mld_scores(res.candidates, (y1, y2), deletion=False)
    return _argmax_scored(res.candidates, scores), res.truncated


def decode_mld_two_ins(y1: Word, y2: Word, band: int | None = None,
                       cap: int = DEFAULT_CAP) -> Word:
    return mld_two_ins_detailed(y1, y2, band=band, cap=cap)[0]


def mld_two_del_coded_detailed(y1: Word, y2: Word, code, band: int | None = None,
                               cap: int = DEFAULT_CAP) -> tuple:
    """Code-aware two-trace deletion decoder; returns (word, truncated).

    The shortest-common-supersequence candidates are intersected with the
    code first; if no candidate is a codeword and the candidates are one
    symbol short of the code length, a code that corrects one deletion at an
    unknown position (VT) decodes the best unrestricted candidate.  Anything
    else falls back to the unrestricted output, which cannot be the
    transmitted codeword and is counted as a failure by the harness.
    """
    y1, y2 = tuple(y1), tuple(y2)
    if is_subsequence(y2, y1):
        res = ScsResult(len(y1), (y1,), False)
    elif is_subsequence(y1, y2):
        res = ScsResult(len(y2), (y2,), False)
    else:
        res = enumerate_scs(y1, y2, band=band, cap=cap)
    scores = _mld_scores(res.candidates, (y1, y2), deletion=True)
    if res.length == code.n:
        pairs = [(x, s) for x, s in zip(res.candidates, scores)
                 if code.is_member(x)]
        if pairs:
            best_x, best_s = pairs[0]
            for x, s in pairs[1:]:
                if s > best_s:
                    best_x, best_s = x, s
            return best_x, res.truncated
    best = _argmax_scored(res.candidates, scores)
    if (res.length == code.n - 1
            and getattr(code, "corrects_single_deletion", False)):
        return code.decode_1del(best), res.truncated
    return best, res.truncated


def decode_mld_two_del_coded(y1: Word, y2: Word, code, band: int | None = None,
                             cap: int = DEFAULT_CAP) -> Word:
    return mld_two_del_coded_detailed(y1, y2, code, band=band, cap=cap)[0]


def objective_f(y: Word, x: Word, k: int, code=None, q: int = 2) -> int:
    """Exact integer expected-distance objective for the k-deletion channel.

    Returns sum over c in I_k(y) (intersected with `code` if given) of
    d_L(x, c) * Emb(c; y); this is the true objective scaled by the constant
    n * C(n, k), so argmin comparisons are unchanged and exact.
    """
    y, x = tuple(y), tuple(x)
    total = 0
    for c in insertion_ball(y, k, q):
        if code is not None and not _member(code, c):
            continue
        total += indel_distance(x, c) * embedding_number(c, y)
    return total


def _member(code, w: Word) -> bool:
    if hasattr(code, "is_member"):
        return code.is_member(w)
    return w in code


def brute_force_ml_star(y: Word, k: int, lengths=None, q: int = 2,
                        code=None, max_candidates: int = 2 ** 21) -> Word:
    """Global argmin of the exact objective over every word in a length
    window (default [|y|, |y|+k+1]); ties minimal length then lexicographic.

    This is the enumeration oracle for the optimal decoder; it refuses
    windows with more than max_candidates words.
    """
    y = tuple(y)
    if lengths is None:
        lengths = range(len(y), len(y) + k + 2)
    lengths = sorted(set(lengths))
    if lengths and (lengths[0] < len(y) or lengths[-1] > len(y) + k + 1):
        raise ValueError("lengths must lie within [|y|, |y|+k+1]")
    total = sum(q ** L for L in lengths)
    if total > max_candidates:
        raise ValueError(f"window holds {total} candidates; refusing above "
                         f"{max_candidates}")
    ball = []
    for c in insertion_ball(y, k, q):
        if code is not None and not _member(code, c):
            continue
        ball.append((c, embedding_number(c, y)))
    best = None
    best_score = None
    for L in lengths:
        for x in product(range(q), repeat=L):
            s = 0
            for c, w in ball:
                s += indel_distance(x, c) * w
            if best_score is None or s < best_score:
                best, best_score = x, s
    return best


def ml_star_1del(y: Word) -> Word:
    """Optimal decoder for the 1-deletion channel over the whole binary
    space: return the output unchanged (optimality proven for n >= 17)."""
    n = len(y) + 1
    if n < 17:
        warnings.warn(f"lazy decoding is only proven optimal for n >= 17 "
                      f"(got n = {n})", stacklevel=2)
    return tuple(y)


def two_del_condition_poly(n: int, r_longest: int, run_count: int) -> int:
    """Sign condition deciding the optimal 2-deletion decoder branch:
    >= 0 means returning the output unchanged is optimal (or tied)."""
    return (2 * n * n - 4 * n * r_longest - 6 * n
            + r_longest * r_longest + 3 * r_longest + run_count + 1)


def ml_star_2del(y: Word) -> Word:
    """Closed-form decoder for the 2-deletion channel over the whole binary
    space: keep the output unchanged unless the sign condition says the
    longest run is long enough that prolonging it by one symbol pays.

    The sign condition is exact on the bulk of outputs but provably
    misjudges some near-alternating ones, where the exact objective can
    even prefer a full-length alternating extension; two_del_lazy_en_gap
    and brute_force_ml_star are the exact references (see the acceptance
    tests for the violation sets)."""
    y = tuple(y)
    n = len(y) + 2
    prof = runs(y)
    if two_del_condition_poly(n, prof.r_max, prof.r) >= 0:
        return y
    return decode_en(y, n - 1)


def two_del_lazy_en_gap(y: Word) -> int:
    """Exact integer gap sum_{c in I_2(y)} Emb(c; y) * (d_L(EN(y), c) - 2).

    Nonnegative iff keeping the output unchanged beats (or ties) prolonging
    the first longest run, since the unchanged output sits at distance
    exactly 2 from every candidate c.  Literal enumeration; the oracle
    against which the closed-form sign condition is checked.
    """
    y = tuple(y)
    n = len(y) + 2
    xh = decode_en(y, n - 1)
    total = 0
    for c in insertion_ball(y, 2, 2):
        total += embedding_number(c, y) * (indel_distance(xh, c) - 2)
    return total


def two_del_lazy_en_gap_fast(y: Word) -> int:
    """Same integer as two_del_lazy_en_gap via an exact identity.

    Every c in I_2(y) is at distance 1 or 3 from the prolonged word x
    (both contain y; lengths differ by 1), distance 1 exactly on I_1(x),
    and sum of Emb(c; y) over I_2(y) is C(n, 2) * 4.  Hence the gap equals
    4*C(n, 2) - 2 * sum_{c in I_1(x)} Emb(c; y).
    """
    y = tuple(y)
    n = len(y) + 2
    xh = decode_en(y, n - 1)
    s1 = 0
    for c in insertion_ball(xh, 1, 2):
        s1 += embedding_number_banded(c, y)
    return 4 * comb(n, 2) - 2 * s1
