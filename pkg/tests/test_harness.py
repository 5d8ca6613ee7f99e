import csv
import os
from fractions import Fraction
from itertools import product

import pytest

from indelkit.channels import ChannelSpec
from indelkit.decoders import ml_star_2del
from indelkit.harness import (CSV_FIELDS, AggregateResult, ExperimentConfig,
                              attribute_error, exact_expected_distance,
                              figure_config, reproduce_figure, run_experiment,
                              sweep_brute_force_window, sweep_two_del_condition,
                              worker_count, write_figure_csv, write_rows_csv)
from indelkit.words import parse_word


def pw(s):
    return parse_word(s)


def small_cfg(**kw):
    base = dict(channel=ChannelSpec("del"), t=2, n=40, q=2,
                decoder="mld2del", p_grid=(0.03,), trials_per_point=300,
                master_seed=5)
    base.update(kw)
    return ExperimentConfig(**base)


class TestConfig:
    def test_json_roundtrip(self):
        cfg = small_cfg(code={"code": "vt", "a": 0})
        assert ExperimentConfig.from_json(cfg.to_json()) == cfg

    def test_validation(self):
        with pytest.raises(ValueError):
            small_cfg(t=3)
        with pytest.raises(ValueError):
            small_cfg(trials_per_point=0)


class TestRunExperiment:
    def test_p_zero_is_perfect(self):
        res = run_experiment(small_cfg(p_grid=(0.0,), trials_per_point=50),
                             workers=1)
        pt = res.points[0]
        assert pt.levenshtein_rate == 0.0
        assert pt.failure_rate == 0.0

    def test_deterministic_across_workers(self):
        cfg = small_cfg()
        r1 = run_experiment(cfg, workers=1)
        r2 = run_experiment(cfg, workers=2)
        for a, b in zip(r1.points, r2.points):
            assert (a.levenshtein_rate, a.failure_rate, a.run_component,
                    a.alt_component) == (b.levenshtein_rate, b.failure_rate,
                                         b.run_component, b.alt_component)

    def test_deterministic_across_runs(self):
        cfg = small_cfg(trials_per_point=150)
        r1 = run_experiment(cfg, workers=1)
        r2 = run_experiment(cfg, workers=1)
        assert r1.points[0].levenshtein_rate == r2.points[0].levenshtein_rate

    def test_seed_changes_results(self):
        r1 = run_experiment(small_cfg(master_seed=1), workers=1)
        r2 = run_experiment(small_cfg(master_seed=2), workers=1)
        assert r1.points[0].levenshtein_rate != r2.points[0].levenshtein_rate

    def test_components_sum_to_ler(self):
        res = run_experiment(small_cfg(trials_per_point=400), workers=1)
        pt = res.points[0]
        assert pt.run_component + pt.alt_component == pytest.approx(
            pt.levenshtein_rate)

    def test_kdel_lazy_rate(self):
        # one-deletion channel with the unchanged-output decoder: the
        # distance is exactly 1 every trial, so the rate is exactly 1/n
        cfg = ExperimentConfig(channel=ChannelSpec("kdel", k=1), t=1, n=100,
                               q=2, decoder="lazy", p_grid=(0.0,),
                               trials_per_point=200, master_seed=3)
        res = run_experiment(cfg, workers=1)
        assert res.points[0].levenshtein_rate == pytest.approx(1 / 100)
        assert res.points[0].failure_rate == 1.0

    def test_insertion_experiment_runs(self):
        cfg = ExperimentConfig(channel=ChannelSpec("ins", q=2), t=2, n=40,
                               q=2, decoder="mld2ins", p_grid=(0.03,),
                               trials_per_point=200, master_seed=4)
        res = run_experiment(cfg, workers=1)
        assert 0 <= res.points[0].levenshtein_rate < 0.1

    def test_csv_rows_schema(self, tmp_path):
        res = run_experiment(small_cfg(trials_per_point=50), workers=1)
        rows = res.rows()
        assert {r["metric"] for r in rows} == set(small_cfg().metrics)
        path = tmp_path / "out.csv"
        write_rows_csv(rows, str(path), CSV_FIELDS)
        with open(path) as fh:
            got = list(csv.DictReader(fh))
        assert list(got[0].keys()) == CSV_FIELDS
        assert len(got) == len(rows)


class TestAttribution:
    def test_correct_is_none(self):
        c = pw("0110")
        assert attribute_error(c, c, c, c) is None

    def test_run_error(self):
        c = pw("00110")
        out = pw("0110")  # lost one symbol of the 00 run
        assert attribute_error(c, pw("0110"), pw("0110"), out) == "run"

    def test_alternating_error(self):
        c = pw("0011001")   # swap to 0010101? keep length, wrong word
        out = pw("0011010")
        assert attribute_error(c, pw("001100"), pw("001101"), out) == "alternating"

    def test_other(self):
        c = pw("001100")
        out = pw("01010")  # shorter and swapped
        assert attribute_error(c, None, None, out) == "other"


class TestExactExpectedDistance:
    def test_lazy_law(self):
        for n in range(5, 13):
            assert exact_expected_distance("lazy", n, 1) == Fraction(1, n)

    def test_fast_equals_enumeration(self):
        for n in (6, 9, 12):
            for dec in ("lazy", "en"):
                assert (exact_expected_distance(dec, n, 1)
                        == exact_expected_distance(dec, n, 1, method="enumerate"))

    def test_en_vs_analysis_bound(self):
        from indelkit.analysis import lazy_and_en_1del_analysis
        for n in (6, 10, 14):
            _, bound = lazy_and_en_1del_analysis(n)
            assert exact_expected_distance("en", n, 1) >= bound

    def test_two_del_decoder_ordering(self):
        # closed-form optimal decoder never loses to lazy or the prolonging
        # decoder in exact expected distance (aggregate, k = 2)
        n = 10
        star = exact_expected_distance("mlstar2", n, 2)
        lazy = exact_expected_distance("lazy", n, 2)
        en1 = exact_expected_distance("en_minus1", n, 2)
        assert star <= lazy
        assert star <= en1

    def test_infeasible_guard(self):
        with pytest.raises(ValueError):
            exact_expected_distance("lazy", 25, 1, method="enumerate")


class TestSweeps:
    def test_condition_sweep_clean_at_small_n(self):
        assert sweep_two_del_condition(5)["violations"] == []
        assert sweep_two_del_condition(7)["violations"] == []

    def test_condition_sweep_literal_matches_fast(self):
        for n in (5, 6, 8):
            lit = sweep_two_del_condition(n, literal=True)
            fast = sweep_two_del_condition(n)
            assert lit["violations"] == fast["violations"]

    def test_window_sweep_agrees_with_library_bruteforce(self):
        from indelkit.decoders import brute_force_ml_star
        res = sweep_brute_force_window(6)
        bad = {tuple(v["y"]) for v in res["length_violations"]}
        for y in product((0, 1), repeat=4):
            out = brute_force_ml_star(y, 2)
            assert (len(out) not in (4, 5)) == (y in bad)


class TestFigures:
    def test_figure_config_scales(self):
        cfg = figure_config("fig1", "desk")
        assert cfg.n == 150 and cfg.trials_per_point == 20_000
        cfg = figure_config("fig1", "paper")
        assert cfg.n == 450 and cfg.trials_per_point == 200_000
        cfg = figure_config("fig5", "paper")
        assert cfg.n == 500
        with pytest.raises(ValueError):
            figure_config("fig4")

    def test_figure_csv_schema(self, tmp_path):
        # tiny stand-in config so the test stays fast: schema only
        rows = [{"metric": "levenshtein_rate", "q": 2, "n": 10, "p": 0.01,
                 "code": "all", "measured_rate": 0.0, "stderr": 0.0,
                 "formula_rate": 5e-4, "trials": 10, "seed": 1}]
        path = tmp_path / "fig.csv"
        write_figure_csv(rows, str(path))
        with open(path) as fh:
            got = list(csv.DictReader(fh))
        for col in ("p", "measured_rate", "stderr", "formula_rate"):
            assert col in got[0]

    def test_svg_writer(self, tmp_path):
        from indelkit.harness import write_figure_svg
        rows = [{"metric": "levenshtein_rate", "q": 2, "n": 10, "p": p,
                 "code": "all", "measured_rate": p * p, "stderr": 0.0,
                 "formula_rate": 1.2 * p * p, "trials": 10, "seed": 1}
                for p in (0.01, 0.02, 0.05)]
        path = tmp_path / "fig.svg"
        write_figure_svg(rows, str(path), title="demo")
        text = path.read_text()
        assert text.startswith("<svg") and "polyline" in text


class TestWorkerCount:
    def test_env_override(self):
        old = os.environ.get("INDELKIT_WORKERS")
        os.environ["INDELKIT_WORKERS"] = "3"
        try:
            assert worker_count() == 3
        finally:
            if old is None:
                del os.environ["INDELKIT_WORKERS"]
            else:
                os.environ["INDELKIT_WORKERS"] = old

    def test_explicit_wins(self):
        assert worker_count(2) == 2
