import numpy as np
import pytest

from touchline.attributes import ALL_ATTRIBUTES, AttributeId, MatchState, ParamSet, make_vector
from touchline.errors import MissingOpponentError, NegativeSigmaError
from touchline.evaluation import (
    NoiseSpec,
    ScenarioSpec,
    ablation,
    export_figure_data,
    load_default_scenarios,
    pilot_replication,
    pilot_team_vector,
    robustness,
    run_full_evaluation,
    run_scenarios,
    sensitivity_sweep,
    template_stability,
)
from touchline.library import builtin_canonical, load_default_library
from touchline.recommend import rank_strategies


@pytest.fixture(scope="module")
def fixtures():
    return load_default_scenarios()


@pytest.fixture(scope="module")
def library():
    return load_default_library()


class TestScenarios:
    def test_four_fixtures_ship(self, fixtures):
        assert [s.name for s in fixtures] == [
            "Energetic and Balanced",
            "Fatigued and Inferior",
            "High Temporal Pressure",
            "Technical and Physical Superiority",
        ]

    def test_all_expected_tops_hold(self, fixtures, library):
        results = run_scenarios(fixtures, library)
        assert all(r.passed for r in results)

    def test_scenario_expectations_in_detail(self, fixtures, library):
        results = {r.spec.name: r.recommendation.chosen.name for r in run_scenarios(fixtures, library)}
        assert results["Energetic and Balanced"] in {"High Pressing", "Gegenpressing"}
        assert results["Fatigued and Inferior"] == "Positional Defense"
        assert results["High Temporal Pressure"] == "Fast Counterattack"
        assert results["Technical and Physical Superiority"] == "Build-up Play"

    def test_empty_expected_top_rejected(self, fixtures):
        with pytest.raises(ValueError):
            ScenarioSpec(
                name="bad",
                team=fixtures[0].team,
                opponent=None,
                state=MatchState(),
                expected_top=(),
            )


class TestRobustness:
    def test_zero_noise_gives_perfect_consistency(self, fixtures, library):
        report = robustness(fixtures[0], NoiseSpec(sigma=0.0, k=10), library)
        assert report.r == 1.0
        assert set(report.per_run) == {report.baseline}

    def test_single_run_is_an_indicator(self, fixtures, library):
        report = robustness(fixtures[0], NoiseSpec(sigma=0.3, k=1), library)
        assert report.r in (0.0, 1.0)

    def test_r_times_k_is_the_match_count(self, fixtures, library):
        noise = NoiseSpec(sigma=0.08, k=25)
        report = robustness(fixtures[1], noise, library)
        matches = sum(name == report.baseline for name in report.per_run)
        assert report.r * noise.k == pytest.approx(matches, abs=1e-12)
        assert float(round(report.r * noise.k)) == report.r * noise.k

    def test_deterministic_given_seed(self, fixtures, library):
        noise = NoiseSpec(sigma=0.05, k=20, seed=41)
        a = robustness(fixtures[0], noise, library)
        b = robustness(fixtures[0], noise, library)
        assert a == b

    def test_noise_never_leaves_unit_interval(self, fixtures):
        from touchline.evaluation import _perturb_team

        rng = np.random.default_rng(7)
        for _ in range(50):
            noisy = _perturb_team(fixtures[0].team, NoiseSpec(sigma=0.5, k=1), rng)
            arr = noisy.as_array()
            assert arr.min() >= 0.0 and arr.max() <= 1.0

    def test_additive_mode_differs_from_multiplicative(self, fixtures):
        from touchline.evaluation import _perturb_team

        mult = _perturb_team(fixtures[0].team, NoiseSpec(sigma=0.05, k=1), np.random.default_rng(3))
        add = _perturb_team(
            fixtures[0].team, NoiseSpec(sigma=0.05, k=1, additive=True), np.random.default_rng(3)
        )
        assert mult != add

    def test_invalid_specs_rejected(self):
        with pytest.raises(NegativeSigmaError):
            NoiseSpec(sigma=-0.1)
        with pytest.raises(ValueError):
            NoiseSpec(k=0)


class TestTemplateStability:
    def test_zero_sigma_is_perfectly_stable(self, fixtures, library):
        assert template_stability(fixtures[0], 0.0, 10, library=library) == 1.0

    def test_reported_without_threshold_at_large_sigma(self, fixtures, library):
        # heavy noise is allowed to destabilize; the call must still succeed
        value = template_stability(fixtures[0], 0.25, 30, library=library)
        assert 0.0 <= value <= 1.0

    def test_negative_sigma_rejected(self, fixtures):
        with pytest.raises(NegativeSigmaError):
            template_stability(fixtures[0], -0.05, 10)


class TestSensitivity:
    def test_alpha_zero_equals_plain_adapted_ranking(self, fixtures, library):
        spec = fixtures[0]
        report = sensitivity_sweep(spec, [0.0], library)
        plain = rank_strategies(
            spec.team, spec.opponent, library, spec.state, ParamSet(alpha=0.0)
        )
        assert report.rows[0].chosen == plain.chosen.name
        for entry in plain.entries:
            assert report.rows[0].d_comb[entry.name] == pytest.approx(entry.d_adapt, abs=1e-15)

    def test_chosen_stable_across_default_grid(self, fixtures, library):
        for spec in fixtures:
            report = sensitivity_sweep(spec, library=library)
            assert report.stable, f"{spec.name} flipped within the alpha grid"

    def test_scores_strictly_decrease_in_alpha_when_opponent_distance_positive(
        self, fixtures, library
    ):
        spec = fixtures[3]
        report = sensitivity_sweep(spec, [0.1, 0.3, 0.5], library)
        for name in library.names():
            scores = [row.d_comb[name] for row in report.rows]
            assert scores[0] > scores[1] > scores[2]

    def test_missing_opponent(self, fixtures):
        spec = ScenarioSpec(
            name="solo",
            team=fixtures[0].team,
            opponent=None,
            state=MatchState(),
            expected_top=("High Pressing",),
        )
        with pytest.raises(MissingOpponentError):
            sensitivity_sweep(spec)


class TestAblation:
    def test_covers_every_attribute_exactly_once(self, fixtures, library):
        report = ablation(fixtures[0], library)
        assert tuple(e.attribute for e in report.entries) == ALL_ATTRIBUTES

    def test_suppressing_a_zero_attribute_is_a_noop(self, library):
        team_values = [0.5] * 14
        team_values[AttributeId.A6 - 1] = 0.0
        spec = ScenarioSpec(
            name="zeroed",
            team=make_vector(team_values),
            opponent=None,
            state=MatchState(),
            expected_top=("Build-up Play",),
        )
        report = ablation(spec, library)
        entry = next(e for e in report.entries if e.attribute is AttributeId.A6)
        assert entry.top_shift == 0.0
        assert entry.rank_changes == 0
        assert entry.chosen == report.baseline

    def test_energy_suppression_hurts_energy_hungry_profiles_most(self, fixtures, library):
        # deleting the energy reading moves the team away from Gegenpressing
        # (demands 0.70) faster than from Positional Defense (demands 0.60)
        spec = fixtures[0]
        base = rank_strategies(spec.team, spec.opponent, library, spec.state, ParamSet())
        suppressed = spec.team.with_value(AttributeId.A8, 0.0)
        after = rank_strategies(suppressed, spec.opponent, library, spec.state, ParamSet())

        def shift(name):
            sid = library.by_name(name).id
            return after.entry_for(sid).d_comb - base.entry_for(sid).d_comb

        assert shift("Gegenpressing") > shift("Positional Defense")

    def test_ablation_changes_only_the_targeted_squared_term(self, fixtures, library):
        # with uniform weights, d^2 difference equals the change in the j-th term
        spec = fixtures[3]
        base = rank_strategies(spec.team, None, library, spec.state, ParamSet())
        j = AttributeId.A1
        suppressed = spec.team.with_value(j, 0.0)
        after = rank_strategies(suppressed, None, library, spec.state, ParamSet())
        w = base.weights[j]
        for t in library:
            d0 = base.entry_for(t.id).d_adapt
            d1 = after.entry_for(t.id).d_adapt
            expected = w * ((0.0 - t.profile[j]) ** 2 - (spec.team[j] - t.profile[j]) ** 2)
            assert d1 ** 2 - d0 ** 2 == pytest.approx(expected, abs=1e-10)


class TestPilotReplication:
    def test_projected_team_vector(self):
        team = pilot_team_vector()
        assert team.active == (
            AttributeId.A1,
            AttributeId.A2,
            AttributeId.A4,
            AttributeId.A5,
            AttributeId.A8,
        )
        assert team.components == (0.85, 0.50, 0.85, 0.50, 0.35)

    def test_published_distance_table(self):
        report = pilot_replication()
        table = dict(report.distances)
        assert table["Build-up Play"] == pytest.approx(0.4444, abs=1e-4)
        assert table["Fast Counterattack"] == pytest.approx(0.4664, abs=1e-4)
        assert table["High Pressing"] == pytest.approx(0.6305, abs=1e-4)
        assert table["Gegenpressing"] == pytest.approx(0.6305, abs=1e-4)
        assert table["Positional Defense"] == pytest.approx(0.9042, abs=1e-4)

    def test_recommends_build_up_play(self):
        assert pilot_replication().chosen == "Build-up Play"

    def test_distances_in_library_order(self):
        report = pilot_replication()
        assert [name for name, _ in report.distances] == list(builtin_canonical().names())


class TestExports:
    def test_figure_exports_shapes_and_determinism(self, tmp_path, fixtures, library):
        results = run_full_evaluation(
            fixtures=fixtures,
            library=library,
            noise=NoiseSpec(sigma=0.05, k=10),
            alphas=(0.1, 0.3),
        )
        first = export_figure_data(results, tmp_path / "a")
        second = export_figure_data(results, tmp_path / "b")
        assert [p.name for p in first] == [
            "radar_pilot.csv",
            "sensitivity.csv",
            "robustness.csv",
            "ablation.csv",
        ]
        for a, b in zip(first, second):
            assert a.read_bytes() == b.read_bytes()

        radar_lines = (tmp_path / "a" / "radar_pilot.csv").read_text().strip().splitlines()
        assert radar_lines[0] == "attribute,team,strategy"
        assert len(radar_lines) == 1 + 5  # header + pilot mask

        sens_lines = (tmp_path / "a" / "sensitivity.csv").read_text().strip().splitlines()
        # one row per (scenario with opponent, alpha, strategy)
        assert len(sens_lines) == 1 + len(fixtures) * 2 * len(library)

        abl_lines = (tmp_path / "a" / "ablation.csv").read_text().strip().splitlines()
        assert len(abl_lines) == 1 + len(fixtures) * 14
