"""Command-line interface for batch recommendations and evaluation runs.

Exit codes: 0 success, 1 failed expected-top checks, 2 parse or validation
errors (the message names the offending field or path). All evaluation
output is deterministic for a fixed seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .attributes import MatchState, ParamSet, load_vector
from .distance import CombineMode, load_params
from .errors import TouchlineError
from .evaluation import (
    DEFAULT_ALPHA_GRID,
    DEFAULT_SEED,
    EvaluationResults,
    NoiseSpec,
    ablation,
    export_figure_data,
    load_default_scenarios,
    load_scenarios,
    pilot_replication,
    robustness,
    run_scenarios,
    sensitivity_sweep,
    template_stability,
)
from .library import StrategyLibrary, load_default_library, load_library
from .recommend import Recommendation, rank_strategies

PORT_ENV_VAR = "TOUCHLINE_PORT"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="touchline",
        description="Rank tactical strategies against a team's current state.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rec = sub.add_parser("recommend", help="rank strategies for one match state")
    rec.add_argument("--team", required=True, help="JSON file with the team vector")
    rec.add_argument("--opp", help="JSON file with the opponent vector")
    rec.add_argument("--library", help="strategy library JSON (default: shipped 20 templates)")
    rec.add_argument("--params", help="parameter config JSON")
    rec.add_argument("--time-remaining", type=float, default=1.0)
    rec.add_argument("--score-state", type=int, choices=(-1, 0, 1), default=0)
    rec.add_argument("--energy", type=float, default=None)
    rec.add_argument("--alpha", type=float, default=None)
    rec.add_argument("--combine-mode", choices=[m.value for m in CombineMode], default=None)
    rec.add_argument("--seed", type=int, default=DEFAULT_SEED)
    rec.add_argument("--json", dest="json_out", help="also write the recommendation JSON here")

    ev = sub.add_parser("evaluate", help="run the evaluation harness")
    ev_sub = ev.add_subparsers(dest="kind", required=True)
    for kind in ("scenarios", "robustness", "sensitivity", "ablation", "pilot"):
        p = ev_sub.add_parser(kind)
        p.add_argument("--fixtures", help="scenario fixtures JSON (default: shipped four)")
        p.add_argument("--library", help="strategy library JSON")
        p.add_argument("--params", help="parameter config JSON")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--json", dest="json_out", help="write the report JSON here")
        p.add_argument("--out-dir", help="export figure CSVs into this directory")
        if kind in ("robustness", "sensitivity"):
            p.add_argument("--sigma", type=float, default=0.05)
            p.add_argument("--k", type=int, default=100)
        if kind == "sensitivity":
            p.add_argument(
                "--alphas",
                type=float,
                nargs="+",
                default=list(DEFAULT_ALPHA_GRID),
            )
        if kind == "robustness":
            p.add_argument("--additive", action="store_true", help="absolute instead of relative noise")
        if kind == "ablation":
            pass

    # template-perturbation stability lives under robustness as a flag twin;
    # expose it as its own verb for symmetry with the harness API
    st = ev_sub.add_parser("stability")
    st.add_argument("--fixtures", help="scenario fixtures JSON (default: shipped four)")
    st.add_argument("--library", help="strategy library JSON")
    st.add_argument("--params", help="parameter config JSON")
    st.add_argument("--sigma", type=float, default=0.05)
    st.add_argument("--k", type=int, default=100)
    st.add_argument("--seed", type=int, default=DEFAULT_SEED)
    st.add_argument("--json", dest="json_out")
    st.add_argument("--out-dir")

    srv = sub.add_parser("serve", help="start the HTTP service")
    srv.add_argument("--host", default="127.0.0.1")
    srv.add_argument("--port", type=int, default=None, help=f"default: ${PORT_ENV_VAR} or 8000")
    srv.add_argument("--library", help="strategy library JSON")
    srv.add_argument("--fixtures", help="scenario fixtures JSON")
    srv.add_argument("--sessions-dir", default="sessions")
    return parser


def _load_library_arg(path: Optional[str]) -> StrategyLibrary:
    return load_library(path) if path else load_default_library()


def _load_fixtures_arg(path: Optional[str]):
    return load_scenarios(path) if path else load_default_scenarios()


def _load_params_arg(args) -> tuple[ParamSet, CombineMode]:
    params, mode = ParamSet(), CombineMode.SUBTRACTIVE
    if getattr(args, "params", None):
        params, mode = load_params(args.params)
    if getattr(args, "alpha", None) is not None:
        params = params.replace(alpha=args.alpha)
    if getattr(args, "combine_mode", None):
        mode = CombineMode(args.combine_mode)
    return params, mode


def _print_recommendation(rec: Recommendation) -> None:
    print(f"Recommended strategy: {rec.chosen.name}")
    print()
    print(f"{'rank':>4}  {'strategy':<32}{'d_eucl':>8}{'d_adapt':>9}{'d_comb':>9}{'mu':>6}")
    for e in rec.entries:
        print(
            f"{e.rank:>4}  {e.name:<32}{e.d_eucl:>8.4f}{e.d_adapt:>9.4f}{e.d_comb:>9.4f}{e.mu:>6.2f}"
        )
    print()
    print("Diagnostics for the chosen strategy (strategy minus team):")
    for entry in rec.diagnostics:
        label = f"[{entry.label}]"
        print(
            f"  {entry.attribute.name:<4} {entry.attribute.display_name:<26}"
            f"{entry.delta:>+7.2f}  {label}"
        )


def _cmd_recommend(args) -> int:
    team = load_vector(args.team)
    opponent = load_vector(args.opp) if args.opp else None
    library = _load_library_arg(args.library)
    params, mode = _load_params_arg(args)
    state = MatchState(
        time_remaining=args.time_remaining,
        score_state=args.score_state,
        energy=args.energy,
    )
    rec = rank_strategies(team, opponent, library, state, params, mode)
    _print_recommendation(rec)
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            json.dump(rec.to_mapping(), fh, indent=2)
            fh.write("\n")
    return 0


def _dump_json(args, payload) -> None:
    if getattr(args, "json_out", None):
        with open(args.json_out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")


def _maybe_export(args, results: EvaluationResults) -> None:
    if getattr(args, "out_dir", None):
        for path in export_figure_data(results, args.out_dir):
            print(f"wrote {path}")


def _cmd_evaluate(args) -> int:
    fixtures = _load_fixtures_arg(args.fixtures)
    library = _load_library_arg(args.library)
    params, mode = _load_params_arg(args)

    if args.kind == "scenarios":
        results = run_scenarios(fixtures, library, params, mode)
        print(f"{'scenario':<40}{'chosen':<28}{'result':<6}")
        for r in results:
            flag = "PASS" if r.passed else "FAIL"
            print(f"{r.spec.name:<40}{r.recommendation.chosen.name:<28}{flag:<6}")
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} scenarios passed")
        _dump_json(
            args,
            [
                {
                    "scenario": r.spec.name,
                    "chosen": r.recommendation.chosen.name,
                    "expected_top": list(r.spec.expected_top),
                    "passed": r.passed,
                }
                for r in results
            ],
        )
        _maybe_export(args, EvaluationResults(scenarios=tuple(results)))
        return 0 if passed == len(results) else 1

    if args.kind == "robustness":
        noise = NoiseSpec(sigma=args.sigma, k=args.k, seed=args.seed, additive=args.additive)
        reports = [robustness(s, noise, library, params, mode) for s in fixtures]
        print(f"{'scenario':<40}{'baseline':<28}{'R':>7}")
        for r in reports:
            print(f"{r.scenario:<40}{r.baseline:<28}{r.r:>7.3f}")
        mean_r = sum(r.r for r in reports) / len(reports)
        print(f"mean R = {mean_r:.3f}")
        _dump_json(
            args,
            [{"scenario": r.scenario, "baseline": r.baseline, "r": r.r} for r in reports],
        )
        _maybe_export(args, EvaluationResults(robustness=tuple(reports)))
        return 0

    if args.kind == "stability":
        print(f"{'scenario':<40}{'stability':>9}")
        rows = []
        for s in fixtures:
            value = template_stability(s, args.sigma, args.k, args.seed, library, params, mode)
            rows.append({"scenario": s.name, "stability": value})
            print(f"{s.name:<40}{value:>9.3f}")
        _dump_json(args, rows)
        return 0

    if args.kind == "sensitivity":
        reports = [
            sensitivity_sweep(s, args.alphas, library, params)
            for s in fixtures
            if s.opponent is not None
        ]
        print(f"{'scenario':<40}{'stable':<8}chosen per alpha")
        for r in reports:
            chosen = ", ".join(f"{row.alpha:.1f}:{row.chosen}" for row in r.rows)
            print(f"{r.scenario:<40}{str(r.stable):<8}{chosen}")
        _dump_json(
            args,
            [
                {
                    "scenario": r.scenario,
                    "stable": r.stable,
                    "rows": [
                        {"alpha": row.alpha, "chosen": row.chosen, "d_comb": row.d_comb}
                        for row in r.rows
                    ],
                }
                for r in reports
            ],
        )
        _maybe_export(args, EvaluationResults(sensitivity=tuple(reports)))
        return 0

    if args.kind == "ablation":
        reports = [ablation(s, library, params, mode) for s in fixtures]
        for r in reports:
            print(f"scenario: {r.scenario} (baseline {r.baseline})")
            print(f"  {'attribute':<6}{'chosen':<28}{'top_shift':>10}{'rank_changes':>13}")
            for e in r.entries:
                print(
                    f"  {e.attribute.name:<6}{e.chosen:<28}{e.top_shift:>10.4f}{e.rank_changes:>13}"
                )
        _dump_json(
            args,
            [
                {
                    "scenario": r.scenario,
                    "baseline": r.baseline,
                    "entries": [
                        {
                            "attribute": e.attribute.name,
                            "chosen": e.chosen,
                            "top_shift": e.top_shift,
                            "rank_changes": e.rank_changes,
                        }
                        for e in r.entries
                    ],
                }
                for r in reports
            ],
        )
        _maybe_export(args, EvaluationResults(ablation=tuple(reports)))
        return 0

    if args.kind == "pilot":
        report = pilot_replication()
        print("Halftime distances on the observable subspace:")
        print(f"{'strategy':<28}{'d_eucl':>8}")
        for name, d in report.distances:
            print(f"{name:<28}{d:>8.4f}")
        print(f"recommended: {report.chosen}")
        _dump_json(
            args,
            {
                "distances": {name: d for name, d in report.distances},
                "chosen": report.chosen,
                "team": report.team.to_mapping(),
            },
        )
        _maybe_export(args, EvaluationResults(pilot=report))
        return 0

    raise ValueError(f"unknown evaluate kind {args.kind!r}")


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    port = args.port
    if port is None:
        port = int(os.environ.get(PORT_ENV_VAR, "8000"))
    app = create_app(
        library_path=args.library,
        fixtures_path=args.fixtures,
        sessions_dir=args.sessions_dir,
    )
    uvicorn.run(app, host=args.host, port=port)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "recommend":
            return _cmd_recommend(args)
        if args.command == "evaluate":
            return _cmd_evaluate(args)
        if args.command == "serve":
            return _cmd_serve(args)
    except TouchlineError as exc:
        field = getattr(exc, "field", None)
        print(f"error: {exc}" + (f" (field: {field})" if field else ""), file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: cannot read {exc.filename}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON input: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
