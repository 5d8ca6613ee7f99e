"""Seeded Monte Carlo experiment runner and exact-enumeration verification
sweeps.

Reproducibility contract: every trial draws from generators seeded by
SeedSequence((master_seed, point_index, trial_index, stream)), stream 0 for
the codeword draw and 1..t for the channels, so results are bit-identical
for any worker count or chunking.  Aggregation sums exact integers
(distances, failures, attribution units) and divides once at the end.
"""

from __future__ import annotations

import csv
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, asdict
from fractions import Fraction
from math import ceil, comb, sqrt

import numpy as np

from .channels import ChannelSpec, transmit_del, transmit_ins, transmit_kdel
from .codes import make_code
from .combinatorics import embedding_number_banded, insertion_ball
from .decoders import (decode_en, decode_lazy, ml_star_1del, ml_star_2del,
                       mld_two_del_coded_detailed, mld_two_del_detailed,
                       mld_two_ins_detailed, two_del_condition_poly,
                       two_del_lazy_en_gap_fast)
from .words import Word, indel_distance, runs

DEFAULT_TRIAL_CAP = 50_000  # SCS/LCS candidate cap per trial
CSV_FIELDS = ["metric", "q", "n", "p", "t", "code", "decoder", "value",
              "stderr", "trials", "seed"]
FIGURE_CSV_FIELDS = ["metric", "q", "n", "p", "code", "measured_rate",
                     "stderr", "formula_rate", "trials", "seed"]


def worker_count(explicit: int | None = None) -> int:
    """Workers from the INDELKIT_WORKERS env var, an explicit argument, or
    the CPU count capped at 8."""
    if explicit is not None:
        return max(1, explicit)
    env = os.environ.get("INDELKIT_WORKERS")
    if env:
        return max(1, int(env))
    return max(1, min(8, os.cpu_count() or 1))


# ---------------------------------------------------------------------------
# experiment configuration and results


@dataclass(frozen=True)
class ExperimentConfig:
    channel: ChannelSpec
    t: int
    n: int
    q: int
    code: dict = field(default_factory=lambda: {"code": "all"})
    decoder: str = "mld2del"
    p_grid: tuple = (0.01, 0.02, 0.03, 0.05)
    trials_per_point: int = 20_000
    master_seed: int = 2024
    metrics: tuple = ("levenshtein_rate", "failure_rate", "run_component",
                      "alt_component")
    scs_cap: int = DEFAULT_TRIAL_CAP

    def __post_init__(self):
        if self.t not in (1, 2):
            raise ValueError("t must be 1 or 2")
        if self.trials_per_point < 1:
            raise ValueError("trials_per_point must be >= 1")
        for p in self.p_grid:
            if not 0.0 <= p < 1.0:
                raise ValueError("grid probabilities must be in [0, 1)")

    def to_json(self) -> str:
        d = asdict(self)
        d["channel"] = self.channel.to_dict()
        d["p_grid"] = list(self.p_grid)
        d["metrics"] = list(self.metrics)
        return json.dumps(d, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "ExperimentConfig":
        d = json.loads(text)
        d["channel"] = ChannelSpec.from_dict(d["channel"])
        d["p_grid"] = tuple(d["p_grid"])
        if "metrics" in d:
            d["metrics"] = tuple(d["metrics"])
        return cls(**d)


@dataclass(frozen=True)
class PointResult:
    p: float
    trials: int
    levenshtein_rate: float
    failure_rate: float
    run_component: float
    alt_component: float
    stderr_ler: float
    stderr_fail: float
    truncated_trials: int
    wall_time: float


@dataclass(frozen=True)
class AggregateResult:
    config: ExperimentConfig
    points: tuple

    def rows(self) -> list:
        """Flatten to the fixed CSV schema, one row per metric per point."""
        out = []
        cfg = self.config
        code = cfg.code.get("code", "all")
        for pt in self.points:
            for metric in cfg.metrics:
                value = getattr(pt, metric)
                stderr = (pt.stderr_ler if metric == "levenshtein_rate"
                          else pt.stderr_fail if metric == "failure_rate"
                          else "")
                out.append({"metric": metric, "q": cfg.q, "n": cfg.n,
                            "p": pt.p, "t": cfg.t, "code": code,
                            "decoder": cfg.decoder, "value": value,
                            "stderr": stderr, "trials": pt.trials,
                            "seed": cfg.master_seed})
        return out


# ---------------------------------------------------------------------------
# per-trial machinery


def _stream_rng(master_seed: int, point: int, trial: int, stream: int):
    return np.random.default_rng(
        np.random.SeedSequence((master_seed, point, trial, stream)))


def attribute_error(c: Word, y1: Word, y2: Word, output: Word) -> str | None:
    """Classify a two-trace deletion trial: None when correct, "run" when
    the output only lost symbols (same-run double deletions), "alternating"
    when the output has the right length but swapped segments, "other" when
    both effects mix."""
    if output == tuple(c):
        return None
    n = len(c)
    d = indel_distance(output, c)
    lost = n - len(output)
    if lost > 0 and d == lost:
        return "run"
    if lost == 0:
        return "alternating"
    return "other"


def _trial_components(c: Word, output: Word, t: int, kind: str) -> tuple:
    """(distance, run_units, alt_units) for one trial; exact ints.

    Deletions surviving both traces shorten the output (one distance unit
    each); insertions surviving both lengthen it.  The remaining, even part
    of the distance comes from alternating-segment swaps.
    """
    d = indel_distance(output, c)
    if t == 2:
        if kind == "del":
            run_units = max(0, len(c) - len(output))
        elif kind == "ins":
            run_units = max(0, len(output) - len(c))
        else:
            run_units = 0
        alt_units = d - run_units
    else:
        run_units = alt_units = 0
    return d, run_units, alt_units


def _run_chunk(config_json: str, point: int, p: float, lo: int, hi: int) -> tuple:
    """Run trials [lo, hi) of one grid point; returns exact integer sums
    (sum_d, sum_d2, failures, run_units, alt_units, truncated)."""
    cfg = ExperimentConfig.from_json(config_json)
    code = make_code(cfg.code, cfg.n, cfg.q)
    coded = cfg.code.get("code", "all") != "all"
    kind = cfg.channel.kind
    n, q, t, seed, cap = cfg.n, cfg.q, cfg.t, cfg.master_seed, cfg.scs_cap
    sum_d = sum_d2 = fails = run_units = alt_units = truncated = 0
    for trial in range(lo, hi):
        c = code.sample(_stream_rng(seed, point, trial, 0))
        if t == 2:
            if kind == "del":
                y1 = transmit_del(c, p, _stream_rng(seed, point, trial, 1))
                y2 = transmit_del(c, p, _stream_rng(seed, point, trial, 2))
                band = (n - len(y1), n - len(y2))
                if coded:
                    out, trunc = mld_two_del_coded_detailed(
                        y1, y2, code, band=band, cap=cap)
                else:
                    out, trunc = mld_two_del_detailed(y1, y2, band=band, cap=cap)
            elif kind == "ins":
                y1 = transmit_ins(c, p, q, _stream_rng(seed, point, trial, 1))
                y2 = transmit_ins(c, p, q, _stream_rng(seed, point, trial, 2))
                band = (len(y2) - n, len(y1) - n)
                out, trunc = mld_two_ins_detailed(y1, y2, band=band, cap=cap)
            else:
                raise ValueError("two-trace experiments use del or ins channels")
        else:
            if kind == "kdel":
                y = transmit_kdel(c, cfg.channel.k, _stream_rng(seed, point, trial, 1))
            elif kind == "del":
                y = transmit_del(c, p, _stream_rng(seed, point, trial, 1))
            else:
                y = transmit_ins(c, p, q, _stream_rng(seed, point, trial, 1))
            out, trunc = _decode_single(cfg.decoder, y), False
        d, ru, au = _trial_components(c, out, t, kind)
        sum_d += d
        sum_d2 += d * d
        fails += out != tuple(c)
        run_units += ru
        alt_units += au
        truncated += trunc
    return sum_d, sum_d2, fails, run_units, alt_units, truncated


def _decode_single(decoder: str, y: Word) -> Word:
    if decoder == "lazy":
        return decode_lazy(y)
    if decoder == "mlstar1":
        return ml_star_1del(y)
    if decoder == "mlstar2":
        return ml_star_2del(y)
    if decoder.startswith("en:"):
        return decode_en(y, len(y) + int(decoder.split(":", 1)[1]))
    raise ValueError(f"unknown single-trace decoder {decoder!r}")


def run_experiment(config: ExperimentConfig, workers: int | None = None) -> AggregateResult:
    """Monte Carlo sweep over the probability grid; deterministic for a
    given master seed regardless of the worker count."""
    workers = worker_count(workers)
    cfg_json = config.to_json()
    points = []
    for point, p in enumerate(config.p_grid):
        start = time.perf_counter()
        trials = config.trials_per_point
        if workers == 1:
            sums = _run_chunk(cfg_json, point, p, 0, trials)
        else:
            chunk = max(1, ceil(trials / (workers * 4)))
            bounds = [(lo, min(lo + chunk, trials))
                      for lo in range(0, trials, chunk)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(
                    _run_chunk,
                    *zip(*[(cfg_json, point, p, lo, hi) for lo, hi in bounds])))
            sums = tuple(sum(col) for col in zip(*parts))
        sum_d, sum_d2, fails, run_u, alt_u, trunc = sums
        n, T = config.n, trials
        mean_d = sum_d / T
        var_d = max(0.0, sum_d2 / T - mean_d * mean_d)
        fail_rate = fails / T
        points.append(PointResult(
            p=p, trials=T,
            levenshtein_rate=mean_d / n,
            failure_rate=fail_rate,
            run_component=run_u / (n * T),
            alt_component=alt_u / (n * T),
            stderr_ler=sqrt(var_d / T) / n,
            stderr_fail=sqrt(fail_rate * (1 - fail_rate) / T),
            truncated_trials=trunc,
            wall_time=time.perf_counter() - start))
    return AggregateResult(config=config, points=tuple(points))


def write_rows_csv(rows: list, path: str, fields: list) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        for row in rows:
            writer.writerow(row)


# ---------------------------------------------------------------------------
# exact enumeration evaluators (1-Del and 2-Del channels, binary)


def _all_words_run_stats(m: int) -> tuple:
    """(run_count, max_run) int64 arrays over all 2^m binary words of
    length m, via vectorized bit tricks."""
    if m < 1:
        raise ValueError("m must be >= 1")
    x = np.arange(1 << m, dtype=np.uint64)
    if m == 1:
        return np.ones(2, dtype=np.int64), np.ones(2, dtype=np.int64)
    mask = np.uint64((1 << (m - 1)) - 1)
    diff = (x ^ (x >> np.uint64(1))) & mask       # adjacent symbols differ
    r = 1 + np.bitwise_count(diff).astype(np.int64)
    same = (~diff) & mask                         # adjacent symbols equal
    r_max = np.ones(1 << m, dtype=np.int64)
    t = same.copy()
    length = 0
    while t.any():
        length += 1
        np.maximum(r_max, length + 1, out=r_max, where=t != 0)
        t &= t >> np.uint64(1)
    return r, r_max


def exact_expected_distance(decoder: str, n: int, k: int = 1,
                            method: str = "auto") -> Fraction:
    """Exact expected normalized indel distance of a decoder over the
    k-deletion channel with the whole binary space as the code.

    Averages d_L(decoder(y), c) / n over all codewords c and channel
    outputs y, weighted by Emb(c; y) / C(n, k).  For k = 1 with the lazy or
    run-prolonging decoder a run-structure fast path covers the criterion
    sizes (n <= 20); `method="enumerate"` forces the literal double loop
    used to validate it.
    """
    if k == 1 and method != "enumerate" and decoder in ("lazy", "mlstar1", "en"):
        return _exact_1del_fast(decoder, n)
    return _exact_enumerate(decoder, n, k)


def _exact_1del_fast(decoder: str, n: int) -> Fraction:
    """k = 1 evaluator over y in Sigma_2^(n-1) using run structure.

    For each y, the distinct supersequences in I_1(y) are: one per run
    (grow it; Emb = run length + 1) and one per new-run slot (Emb = 1),
    n + 1 words in total with Emb summing to 2n.  The lazy output is at
    distance 1 from every c in I_1(y); a length-n output that contains y is
    at distance 2 from every c except itself.
    """
    if n < 2 or n > 26:
        raise ValueError("fast path supports 2 <= n <= 26")
    m = n - 1
    r, r_max = _all_words_run_stats(m)
    if decoder in ("lazy", "mlstar1"):
        # sum over c of d * Emb = 1 * (sum Emb) = (m + r) + (n + 1 - r)
        total = int(((m + r) + (n + 1 - r)).sum())
    elif decoder == "en":
        # EN^n(y) grows the first longest run: distance 0 to itself
        # (Emb = r_max + 1), distance 2 to the other n words of I_1(y).
        total = int((2 * ((m + r) + (n + 1 - r) - (r_max + 1))).sum())
    else:
        raise ValueError(f"no fast path for decoder {decoder!r}")
    return Fraction(total, (2 ** n) * n * comb(n, 1))


def _exact_enumerate(decoder: str, n: int, k: int) -> Fraction:
    """Literal evaluator: enumerate every channel output and every
    candidate codeword in its insertion ball."""
    from itertools import product as iproduct

    if n - k < 0:
        raise ValueError("k cannot exceed n")
    if 2 ** (n - k) * 2 ** k * n > 2 ** 26:
        raise ValueError(f"enumeration infeasible for n = {n}, k = {k}")
    dec = _decode_single_factory(decoder, n, k)
    total = 0
    for y in iproduct((0, 1), repeat=n - k):
        out = dec(y)
        for c in insertion_ball(y, k, 2):
            e = embedding_number_banded(c, y)
            total += indel_distance(out, c) * e
    return Fraction(total, (2 ** n) * n * comb(n, k))


def _decode_single_factory(decoder: str, n: int, k: int):
    if decoder in ("lazy", "mlstar1"):
        return decode_lazy if decoder == "lazy" else ml_star_1del
    if decoder == "mlstar2":
        return ml_star_2del
    if decoder == "en":
        return lambda y: decode_en(y, n)
    if decoder == "en_minus1":
        return lambda y: decode_en(y, n - 1)
    raise ValueError(f"unknown decoder {decoder!r}")


# ---------------------------------------------------------------------------
# exhaustive 2-deletion verification sweeps


def sweep_two_del_condition(n: int, literal: bool = False) -> dict:
    """Compare, for every y in Sigma_2^(n-2), the sign of the exact
    lazy-versus-prolong gap against the closed-form condition polynomial.

    Returns counts and the violating words.  `literal=True` evaluates the
    gap by full insertion-ball enumeration instead of the algebraic
    shortcut (slower; used to validate the shortcut).
    """
    from itertools import product as iproduct
    from .decoders import two_del_lazy_en_gap

    gap_fn = two_del_lazy_en_gap if literal else two_del_lazy_en_gap_fast
    violations = []
    for y in iproduct((0, 1), repeat=n - 2):
        prof = runs(y)
        poly = two_del_condition_poly(n, prof.r_max, prof.r)
        gap = gap_fn(y)
        if (gap >= 0) != (poly >= 0):
            violations.append({"y": y, "gap": gap, "poly": poly})
    return {"n": n, "words": 2 ** (n - 2), "violations": violations}


def _lcs_rows_vs_word(X: np.ndarray, c: tuple) -> np.ndarray:
    """LCS lengths of every row of X (N x L uint8) against word c."""
    N, L = X.shape
    M = len(c)
    prev = np.zeros((N, M + 1), dtype=np.int16)
    cur = np.zeros((N, M + 1), dtype=np.int16)
    for i in range(L):
        xi = X[:, i]
        cur[:, 0] = 0
        for j in range(1, M + 1):
            np.maximum(prev[:, j], cur[:, j - 1], out=cur[:, j])
            hit = prev[:, j - 1] + (xi == c[j - 1])
            np.maximum(cur[:, j], hit, out=cur[:, j])
        prev, cur = cur, prev
    return prev[:, M]


def sweep_brute_force_window(n: int) -> dict:
    """For every y in Sigma_2^(n-2): brute-force the optimal-decoder
    objective over all binary words of length n-2 .. n+1 and record
    (a) winners outside lengths {n-2, n-1} and (b) outputs of the
    closed-form 2-deletion decoder that differ from a unique brute winner.

    Vectorized over candidates: distances to every c in Sigma_2^n are
    precomputed per candidate length class, then each y scores candidates
    with its insertion-ball embedding weights.
    """
    if not 3 <= n <= 13:
        raise ValueError("sweep supports 3 <= n <= 13")
    lengths = list(range(n - 2, n + 2))
    classes = []
    for L in lengths:
        vals = np.arange(1 << L, dtype=np.uint32)
        shifts = np.arange(L - 1, -1, -1, dtype=np.uint32)
        classes.append(((vals[:, None] >> shifts[None, :]) & 1).astype(np.uint8))
    shifts_n = np.arange(n - 1, -1, -1, dtype=np.uint32)
    c_words = [tuple(int(b) for b in ((v >> shifts_n) & 1))
               for v in np.arange(1 << n, dtype=np.uint32)]
    # dist[class][cand, c_index]
    dist = [np.empty((1 << L, 1 << n), dtype=np.int16) for L in lengths]
    for ci, c in enumerate(c_words):
        for k, L in enumerate(lengths):
            lcs = _lcs_rows_vs_word(classes[k], c)
            dist[k][:, ci] = (L + n) - 2 * lcs
    offsets = np.cumsum([0] + [1 << L for L in lengths])
    len_of = np.concatenate([np.full(1 << L, L, dtype=np.int16) for L in lengths])

    from itertools import product as iproduct
    length_violations = []
    mismatches = []
    for y in iproduct((0, 1), repeat=n - 2):
        ball = insertion_ball(y, 2, 2)
        idx = np.array([int("".join(map(str, c)), 2) for c in ball], dtype=np.int64)
        w = np.array([embedding_number_banded(c, y) for c in ball], dtype=np.int64)
        scores = np.concatenate(
            [dist[k][:, idx].astype(np.int64) @ w for k in range(len(lengths))])
        best_idx = int(np.argmin(scores))  # first minimum: shortest, then lex
        best_len = int(len_of[best_idx])
        unique = int((scores == scores[best_idx]).sum()) == 1
        if best_len not in (n - 2, n - 1):
            length_violations.append({"y": y, "winner_len": best_len})
        if unique:
            k = int(np.searchsorted(offsets, best_idx, side="right")) - 1
            row = classes[k][best_idx - offsets[k]]
            winner = tuple(int(b) for b in row)
            if winner != ml_star_2del(y):
                mismatches.append({"y": y, "winner": winner,
                                   "closed_form": ml_star_2del(y)})
    return {"n": n, "words": 2 ** (n - 2),
            "length_violations": length_violations,
            "mismatches": mismatches}


# ---------------------------------------------------------------------------
# figure reproduction


def _desk_grid() -> tuple:
    return (0.01, 0.02, 0.03, 0.05)


def _paper_grid() -> tuple:
    return tuple(round(0.005 * i, 3) for i in range(1, 11))


def figure_config(fig: str, scale: str = "desk", master_seed: int = 2024,
                  code: dict | None = None, q: int = 2) -> ExperimentConfig:
    """Experiment configuration backing each reproduced figure."""
    if scale not in ("desk", "paper"):
        raise ValueError("scale must be 'desk' or 'paper'")
    desk = scale == "desk"
    trials = 20_000 if desk else 200_000
    grid = _desk_grid() if desk else _paper_grid()
    if fig in ("fig1", "fig2"):
        n = 150 if desk else 450
        return ExperimentConfig(channel=ChannelSpec("del"), t=2, n=n, q=q,
                                decoder="mld2del", p_grid=grid,
                                trials_per_point=trials, master_seed=master_seed)
    if fig == "fig3":
        n = 150 if desk else 450
        return ExperimentConfig(channel=ChannelSpec("del"), t=2, n=n, q=2,
                                code=code or {"code": "all"}, decoder="mld2del",
                                p_grid=grid, trials_per_point=trials,
                                master_seed=master_seed)
    if fig == "fig5":
        n = 150 if desk else 500
        return ExperimentConfig(channel=ChannelSpec("ins", q=2), t=2, n=n, q=2,
                                decoder="mld2ins", p_grid=grid,
                                trials_per_point=trials, master_seed=master_seed)
    raise ValueError(f"unknown figure {fig!r} (expected fig1, fig2, fig3, fig5)")


def reproduce_figure(fig: str, scale: str = "desk", workers: int | None = None,
                     master_seed: int = 2024) -> list:
    """Run the experiments behind one figure; returns figure CSV rows with
    measured and closed-form columns."""
    from .analysis import coded_success_bounds, two_del_formulas, two_ins_formulas

    rows = []

    def add(metric, cfg, pt, measured, stderr, formula, code="all"):
        rows.append({"metric": metric, "q": cfg.q, "n": cfg.n, "p": pt.p,
                     "code": code, "measured_rate": measured,
                     "stderr": stderr, "formula_rate": formula,
                     "trials": pt.trials, "seed": cfg.master_seed})

    if fig in ("fig1", "fig2"):
        for q in (2, 4):
            cfg = figure_config(fig, scale, master_seed, q=q)
            res = run_experiment(cfg, workers)
            for pt in res.points:
                f = two_del_formulas(q, pt.p, cfg.n)
                if fig == "fig1":
                    add("levenshtein_rate", cfg, pt, pt.levenshtein_rate,
                        pt.stderr_ler, f.p_err_approx)
                else:
                    add("run_component", cfg, pt, pt.run_component, "", f.p_run)
                    add("alt_component", cfg, pt, pt.alt_component, "", f.p_alt)
    elif fig == "fig3":
        for code in ({"code": "all"}, {"code": "vt", "a": 0},
                     {"code": "svt", "a": 0}):
            cfg = figure_config(fig, scale, master_seed, code=code)
            res = run_experiment(cfg, workers)
            for pt in res.points:
                bounds = coded_success_bounds(2, pt.p, cfg.n)
                name = code["code"]
                key = {"all": "uncoded", "vt": "vt", "svt": "svt"}[name]
                add("success_rate", cfg, pt, 1.0 - pt.failure_rate,
                    pt.stderr_fail, bounds[key], code=name)
    elif fig == "fig5":
        cfg = figure_config(fig, scale, master_seed)
        res = run_experiment(cfg, workers)
        for pt in res.points:
            f = two_ins_formulas(2, pt.p, cfg.n)
            add("levenshtein_rate", cfg, pt, pt.levenshtein_rate,
                pt.stderr_ler, f.p_err_approx)
            add("run_component", cfg, pt, pt.run_component, "", f.p_run)
            add("alt_component", cfg, pt, pt.alt_component, "", f.p_alt)
    else:
        raise ValueError(f"unknown figure {fig!r}")
    return rows


def write_figure_csv(rows: list, path: str) -> None:
    write_rows_csv(rows, path, FIGURE_CSV_FIELDS)


def write_figure_svg(rows: list, path: str, title: str = "") -> None:
    """Minimal dependency-free SVG: one polyline per (metric, q, code)
    series for measured values, dashed for the closed form."""
    series: dict = {}
    for r in rows:
        key = (r["metric"], r["q"], r["code"])
        series.setdefault(key, []).append(
            (float(r["p"]), float(r["measured_rate"]),
             float(r["formula_rate"])))
    width, height, margin = 640, 420, 60
    xs = [p for pts in series.values() for (p, _, _) in pts]
    ys = [v for pts in series.values() for (_, m, f) in pts for v in (m, f)]
    if not xs:
        raise ValueError("no rows to plot")
    x0, x1 = min(xs), max(xs)
    y0, y1 = 0.0, max(ys) * 1.05 or 1.0

    def sx(x):
        return margin + (x - x0) / (x1 - x0 or 1) * (width - 2 * margin)

    def sy(y):
        return height - margin - (y - y0) / (y1 - y0 or 1) * (height - 2 * margin)

    palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
             f'height="{height}">',
             f'<text x="{width/2}" y="20" text-anchor="middle">{title}</text>',
             f'<line x1="{margin}" y1="{height-margin}" x2="{width-margin}" '
             f'y2="{height-margin}" stroke="black"/>',
             f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
             f'y2="{height-margin}" stroke="black"/>']
    for idx, (key, pts) in enumerate(sorted(series.items(), key=str)):
        color = palette[idx % len(palette)]
        pts = sorted(pts)
        meas = " ".join(f"{sx(p):.1f},{sy(m):.1f}" for p, m, _ in pts)
        form = " ".join(f"{sx(p):.1f},{sy(f):.1f}" for p, _, f in pts)
        label = "/".join(str(k) for k in key)
        parts.append(f'<polyline points="{meas}" fill="none" stroke="{color}" '
                     f'stroke-width="1.5"/>')
        parts.append(f'<polyline points="{form}" fill="none" stroke="{color}" '
                     f'stroke-width="1" stroke-dasharray="4 3"/>')
        parts.append(f'<text x="{width-margin+4}" y="{margin+14*idx}" '
                     f'fill="{color}" font-size="11">{label}</text>')
    parts.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(parts))
