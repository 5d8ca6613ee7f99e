"""Command-line interface.

Subcommands: simulate (run an experiment config), reproduce-figure,
oracle-check (exhaustive exact verifications), analyze (closed-form grid),
decode (run one decoder on explicit traces).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .analysis import coded_success_bounds, two_del_formulas, two_ins_formulas
from .decoders import (brute_force_ml_star, decode_en, decode_lazy,
                       decode_mld_two_del, decode_mld_two_ins, ml_star_1del,
                       ml_star_2del)
from .harness import (CSV_FIELDS, ExperimentConfig, exact_expected_distance,
                      reproduce_figure, run_experiment, sweep_brute_force_window,
                      sweep_two_del_condition, worker_count, write_figure_csv,
                      write_figure_svg, write_rows_csv)
from .words import format_word, parse_word


def _cmd_simulate(args) -> int:
    with open(args.config) as fh:
        cfg = ExperimentConfig.from_json(fh.read())
    if args.seed is not None:
        cfg = ExperimentConfig.from_json(
            json.dumps({**json.loads(cfg.to_json()), "master_seed": args.seed}))
    result = run_experiment(cfg, workers=args.workers)
    write_rows_csv(result.rows(), args.out, CSV_FIELDS)
    for pt in result.points:
        print(f"p={pt.p:<7g} ler={pt.levenshtein_rate:.6g} "
              f"fail={pt.failure_rate:.6g} trials={pt.trials} "
              f"({pt.wall_time:.1f}s)")
    print(f"wrote {args.out}")
    return 0


def _cmd_reproduce(args) -> int:
    rows = reproduce_figure(args.figure, scale=args.scale,
                            workers=args.workers, master_seed=args.seed)
    out = args.out or f"{args.figure}_{args.scale}.csv"
    write_figure_csv(rows, out)
    print(f"wrote {out} ({len(rows)} rows)")
    if args.plot:
        svg = out.rsplit(".", 1)[0] + ".svg"
        write_figure_svg(rows, svg, title=args.figure)
        print(f"wrote {svg}")
    return 0


def _cmd_oracle_check(args) -> int:
    n = args.n
    ok = True
    if args.which == "1del":
        from fractions import Fraction
        lazy = exact_expected_distance("lazy", n, 1)
        print(f"lazy expected normalized distance at n={n}: {lazy} "
              f"(1/n = {Fraction(1, n)})")
        ok &= lazy == Fraction(1, n)
        en = exact_expected_distance("en", n, 1)
        print(f"run-prolonging decoder at n={n}: {en} "
              f"({'>' if en > lazy else '<='} lazy)")
    elif args.which == "2del":
        res = sweep_two_del_condition(n)
        print(f"n={n}: {len(res['violations'])} closed-form sign violations "
              f"over {res['words']} outputs")
        for v in res["violations"][:12]:
            print(f"  y={format_word(v['y'])} exact_gap={v['gap']} "
                  f"poly={v['poly']}")
        ok &= not res["violations"]
        win = sweep_brute_force_window(n)
        print(f"n={n}: {len(win['length_violations'])} window-length "
              f"violations, {len(win['mismatches'])} unique-minimizer "
              f"mismatches")
        ok &= not win["length_violations"] and not win["mismatches"]
    elif args.which == "emb":
        from itertools import product
        from .combinatorics import embedding_number, embedding_number_bruteforce
        bad = 0
        for m in range(0, n + 1):
            for x in product((0, 1), repeat=m):
                for k in range(0, m + 1):
                    for y in product((0, 1), repeat=k):
                        if embedding_number(x, y) != embedding_number_bruteforce(x, y):
                            bad += 1
        print(f"embedding-number DP vs subset enumeration, |x| <= {n}: "
              f"{bad} mismatches")
        ok &= bad == 0
    elif args.which == "scs":
        from itertools import product
        from .combinatorics import embedding_number
        from .supersequences import enumerate_scs, scs_length
        from .words import is_subsequence
        bad = 0
        for m1 in range(0, n + 1):
            for y1 in product((0, 1), repeat=m1):
                for y2 in product((0, 1), repeat=min(n, m1 + 2)):
                    res = enumerate_scs(y1, y2)
                    s = scs_length(y1, y2)
                    brute = {x for x in product((0, 1), repeat=s)
                             if is_subsequence(y1, x) and is_subsequence(y2, x)}
                    if set(res.candidates) != brute:
                        bad += 1
        print(f"SCS enumeration vs brute filter, |y1| <= {n}: {bad} mismatches")
        ok &= bad == 0
    print("OK" if ok else "VIOLATIONS FOUND")
    return 0 if ok else 1


def _cmd_analyze(args) -> int:
    rows = []
    for q in args.q:
        for n in args.n:
            for p in args.p:
                d = two_del_formulas(q, p, n)
                i = two_ins_formulas(q, p, n)
                row = {"q": q, "n": n, "p": p,
                       "del_p_run": d.p_run, "del_p_alt": d.p_alt,
                       "del_p_err": d.p_err_approx,
                       "del_success_bound": d.p_fail_bound,
                       "ins_p_run": i.p_run, "ins_p_alt": i.p_alt,
                       "ins_p_err": i.p_err_approx}
                if q == 2:
                    bounds = coded_success_bounds(q, p, n)
                    row.update(vt_success_bound=bounds["vt"],
                               svt_success_bound=bounds["svt"])
                rows.append(row)
    fields = list(rows[0].keys())
    if args.out:
        with open(args.out, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=fields)
            w.writeheader()
            w.writerows(rows)
        print(f"wrote {args.out}")
    else:
        w = csv.DictWriter(sys.stdout, fieldnames=fields)
        w.writeheader()
        w.writerows(rows)
    return 0


def _cmd_decode(args) -> int:
    traces = [parse_word(t) for t in args.traces]
    name = args.decoder
    if name == "lazy":
        out = decode_lazy(traces[0])
    elif name.startswith("en:"):
        out = decode_en(traces[0], int(name.split(":", 1)[1]))
    elif name == "mld2del":
        out = decode_mld_two_del(traces[0], traces[1])
    elif name == "mld2ins":
        out = decode_mld_two_ins(traces[0], traces[1])
    elif name == "mlstar1":
        out = ml_star_1del(traces[0])
    elif name == "mlstar2":
        out = ml_star_2del(traces[0])
    elif name == "brute":
        out = brute_force_ml_star(traces[0], args.k)
    else:
        raise SystemExit(f"unknown decoder {name!r}")
    print(format_word(out))
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="indelkit",
        description="deletion/insertion channel decoders and experiments")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("simulate", help="run an experiment config JSON")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(fn=_cmd_simulate)

    p = sub.add_parser("reproduce-figure", help="rebuild one figure's data")
    p.add_argument("figure", choices=["fig1", "fig2", "fig3", "fig5"])
    p.add_argument("--scale", choices=["desk", "paper"], default="desk")
    p.add_argument("--out", default=None)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--plot", action="store_true", help="also emit an SVG")
    p.set_defaults(fn=_cmd_reproduce)

    p = sub.add_parser("oracle-check", help="exhaustive exact verification")
    p.add_argument("which", choices=["1del", "2del", "scs", "emb"])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_oracle_check)

    p = sub.add_parser("analyze", help="closed-form formula grid to CSV")
    p.add_argument("--q", type=int, nargs="+", default=[2, 4])
    p.add_argument("--n", type=int, nargs="+", default=[150, 450])
    p.add_argument("--p", type=float, nargs="+",
                   default=[0.005, 0.01, 0.02, 0.03, 0.05])
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("decode", help="decode explicit traces")
    p.add_argument("--decoder", required=True,
                   help="lazy | en:M | mld2del | mld2ins | mlstar1 | mlstar2 | brute")
    p.add_argument("--k", type=int, default=2, help="deletions for brute")
    p.add_argument("traces", nargs="+")
    p.set_defaults(fn=_cmd_decode)

    args = parser.parse_args(argv)
    if getattr(args, "workers", None) is None and hasattr(args, "workers"):
        args.workers = worker_count()
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
