"""Command-line interface: job orchestration and report emission.

Commands: smb, newton, psi, conductor, szpiro, verify.  One job per config
file; passing a directory as --config runs every .ini file inside it and
writes one output per job, named by the hash of its config.  Reports are
deterministic: canonical JSON (sorted keys) or a Markdown rendering.

Exit codes: 0 success, 2 validation error, 3 hypothesis failure,
4 verification mismatch, 5 budget exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction

from . import poly as P
from .config import BUDGET_ENV_VAR, JobConfig, load_config
from .conductor import conductor_local, global_conductor, j_height, szpiro_report
from .engine import (
    analyze,
    oracle_division_multiset,
    predict_division_multiset,
    smb_recursion,
    verify_multiset,
)
from .errors import BudgetError, HypothesisError, VerificationError
from .newton import lower_hull
from .plf import PiecewiseLinear, filtration_from_psi, psi_finite_bad, psi_infinite_wild
from .ratfunc import INF, Place, place_valuation
from .skew import j_invariant, phi_of

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_HYPOTHESIS = 3
EXIT_VERIFICATION = 4
EXIT_BUDGET = 5

COMMANDS = ("smb", "newton", "psi", "conductor", "szpiro", "verify")


def _frac(x) -> str:
    if x == INF:
        return "inf"
    return str(Fraction(x))


def _place_str(cfg: JobConfig, w: Place) -> str:
    if w.kind == "infinite":
        return "infinite"
    return P.format_poly(cfg.field, w.uniformizer)


def _profile_entries(profile):
    return [[_frac(v), m] for v, m in profile.entries]


def _require(cfg: JobConfig, command: str, *names):
    for name in names:
        if getattr(cfg, name) is None:
            raise ValueError(f"command {command!r} requires job.{name}")


def _psi_report(psi: PiecewiseLinear) -> dict:
    pieces = []
    for y0, y1, slope, intercept in psi.pieces():
        pieces.append(
            {
                "from": _frac(y0),
                "to": "inf" if y1 is None else _frac(y1),
                "slope": _frac(slope),
                "intercept": _frac(intercept),
            }
        )
    filt = filtration_from_psi(psi)
    return {
        "pieces": pieces,
        "filtration": {
            "g0_order": filt.g0_order,
            "breaks": [
                {"upper": _frac(y), "lower": _frac(v), "order": o}
                for y, v, o in filt.breaks
            ],
        },
    }


def build_report(cfg: JobConfig, command: str) -> dict:
    module = cfg.module
    q = cfg.field.q
    out: dict = {"command": command, "q": q, "rank": module.rank}
    if command == "smb":
        _require(cfg, command, "place", "u")
        an = analyze(module, cfg.place, cfg.u, cfg.n)
        rec = smb_recursion(module, cfg.u, cfg.n, cfg.place)
        rec_vals = rec.levels[-1].valuations
        out.update(
            {
                "place": _place_str(cfg, cfg.place),
                "u": P.format_poly(cfg.field, cfg.u),
                "n": cfg.n,
                "case": an.case,
                "w_j": _frac(an.w_j),
                "m": an.m,
                "twist": _frac(an.twist),
                "closed": [_frac(v) for v in an.closed.valuations],
                "recursion": [_frac(v) for v in rec_vals],
                "dictionary": [_frac(v) for v in an.dictionary.valuations],
                "agree": an.closed.valuations == rec_vals == an.dictionary.valuations,
            }
        )
        if an.lattice is not None:
            out["lattice"] = {
                "place_kind": an.lattice.place_kind,
                "reduced_rank": an.lattice.reduced_rank,
                "generators": [_frac(v) for v in an.lattice.generator_valuations],
            }
        return out
    if command == "newton":
        _require(cfg, command, "place", "u")
        d = len(cfg.u) - 1
        size = q ** (module.rank * cfg.n * d)
        if size > cfg.budget:
            raise BudgetError(
                f"enumeration size q^(r n d) = {size} exceeds budget {cfg.budget}"
            )
        un = P.pow_(cfg.field, cfg.u, cfg.n)
        tp = phi_of(module, un)
        points = [
            (q**i - 1, place_valuation(c, cfg.place))
            for i, c in enumerate(tp.coeffs)
        ]
        hull = lower_hull(points)
        profile = oracle_division_multiset(
            module, cfg.u, cfg.n, cfg.place, cfg.budget
        )
        out.update(
            {
                "place": _place_str(cfg, cfg.place),
                "u": P.format_poly(cfg.field, cfg.u),
                "n": cfg.n,
                "vertices": [[x, _frac(y)] for x, y in hull.vertices],
                "slopes": [[_frac(s), span] for s, span in hull.slopes()],
                "profile": _profile_entries(profile),
            }
        )
        return out
    if command == "psi":
        _require(cfg, command, "place")
        w = cfg.place
        w_j = place_valuation(j_invariant(module), w)
        out["place"] = _place_str(cfg, w)
        out["w_j"] = _frac(w_j)
        out["E"] = cfg.E
        if w.kind == "infinite":
            if w_j != INF and w_j < -q:
                psi = psi_infinite_wild(w_j, Fraction(-1), cfg.E, q)
                out["case"] = "C1_wild"
            else:
                psi = PiecewiseLinear.make([(0, 0)], cfg.E)
                out["case"] = "C2_tame"
        else:
            if w_j != INF and w_j < 0:
                _require(cfg, command, "u")
                d = len(cfg.u) - 1
                psi = psi_finite_bad(
                    q, d, cfg.n, cfg.E, Fraction(-w_j, q - 1)
                )
                out["case"] = "C1_wild"
                out["u"] = P.format_poly(cfg.field, cfg.u)
                out["n"] = cfg.n
            else:
                psi = PiecewiseLinear.make([(0, 0)], cfg.E)
                out["case"] = "C2_tame"
        out["psi"] = _psi_report(psi)
        return out
    if command == "conductor":
        if cfg.place is not None:
            rep = conductor_local(module, cfg.place)
            out["local"] = {
                "place": _place_str(cfg, rep.place),
                "degree": rep.degree,
                "case": rep.case,
                "w_j": _frac(rep.w_j),
                "conductor": None
                if rep.local_conductor is None
                else _frac(rep.local_conductor),
            }
            return out
        total, reports = global_conductor(module)
        out["global_conductor"] = _frac(total)
        out["per_place"] = [
            {
                "place": _place_str(cfg, r.place),
                "degree": r.degree,
                "case": r.case,
                "w_j": _frac(r.w_j),
                "conductor": _frac(r.local_conductor),
            }
            for r in reports
        ]
        return out
    if command == "szpiro":
        rep = szpiro_report(module)
        out.update(
            {
                "h_J": _frac(rep.h_J),
                "global_conductor": _frac(rep.global_conductor),
                "bound": _frac(rep.bound),
                "holds": rep.holds,
                "per_place": [
                    {
                        "place": _place_str(cfg, r.place),
                        "degree": r.degree,
                        "case": r.case,
                        "w_j": _frac(r.w_j),
                        "conductor": _frac(r.local_conductor),
                    }
                    for r in rep.per_place
                ],
            }
        )
        return out
    if command == "verify":
        _require(cfg, command, "place", "u")
        rep = verify_multiset(module, cfg.place, cfg.u, cfg.n, cfg.budget)
        out.update(
            {
                "place": _place_str(cfg, cfg.place),
                "u": P.format_poly(cfg.field, cfg.u),
                "n": cfg.n,
                "predicted": _profile_entries(rep.predicted),
                "oracle": _profile_entries(rep.oracle),
                "equal": rep.equal,
            }
        )
        return out
    raise ValueError(f"unknown command {command!r}")


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _md_table(rows, headers) -> list[str]:
    out = ["| " + " | ".join(headers) + " |"]
    out.append("|" + "|".join(" --- " for _ in headers) + "|")
    for row in rows:
        out.append("| " + " | ".join(str(c) for c in row) + " |")
    return out


def render_markdown(report: dict) -> str:
    lines = [f"# {report['command']} report", ""]
    per_place = report.get("per_place")
    simple = {
        k: v
        for k, v in report.items()
        if k not in ("per_place", "psi", "command")
        and not isinstance(v, (list, dict))
    }
    for k in sorted(simple):
        lines.append(f"- {k}: {simple[k]}")
    for key in ("closed", "recursion", "dictionary", "vertices", "slopes",
                "profile", "predicted", "oracle"):
        if key in report:
            lines.append(f"- {key}: {report[key]}")
    if "lattice" in report:
        lines.append(f"- lattice: {report['lattice']}")
    if "local" in report:
        r = report["local"]
        lines.append("")
        lines.extend(
            _md_table(
                [[r["place"], r["w_j"], r["case"], r["conductor"],
                  "-" if r["conductor"] is None
                  else str(Fraction(r["conductor"]) * r["degree"])]],
                ["place", "w(j)", "case", "f_w", "deg*f_w"],
            )
        )
    if per_place is not None:
        lines.append("")
        lines.extend(
            _md_table(
                [
                    [r["place"], r["w_j"], r["case"], r["conductor"],
                     str(Fraction(r["conductor"]) * r["degree"])]
                    for r in per_place
                ],
                ["place", "w(j)", "case", "f_w", "deg*f_w"],
            )
        )
    if "psi" in report:
        lines.append("")
        lines.extend(
            _md_table(
                [
                    [p["from"], p["to"], p["slope"], p["intercept"]]
                    for p in report["psi"]["pieces"]
                ],
                ["from", "to", "slope", "intercept"],
            )
        )
        filt = report["psi"]["filtration"]
        lines.append("")
        lines.append(f"- g0_order: {filt['g0_order']}")
        for b in filt["breaks"]:
            lines.append(
                f"- break: upper {b['upper']}, lower {b['lower']}, "
                f"order {b['order']}"
            )
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return render_json(report)
    if fmt == "md":
        return render_markdown(report)
    raise ValueError(f"unknown format {fmt!r}")


def _run_one(path: str, command: str, fmt: str, budget, out_path) -> int:
    """Run a single job file; returns the exit code."""
    try:
        cfg = load_config(path)
        if budget is not None:
            cfg = JobConfig(
                cfg.field, cfg.module, cfg.place, cfg.u, cfg.n, cfg.E, budget
            )
        report = build_report(cfg, command)
        text = render(report, fmt)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except HypothesisError as exc:
        print(f"hypothesis failure: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except VerificationError as exc:
        print(f"verification mismatch: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    if command == "verify" and not report["equal"]:
        print("verification mismatch: predicted != oracle", file=sys.stderr)
        return EXIT_VERIFICATION
    return EXIT_OK


def _hash_name(path: str, fmt: str) -> str:
    with open(path, "rb") as fh:
        digest = hashlib.sha256(fh.read()).hexdigest()
    return f"{digest[:16]}.{fmt}"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="drinfeld-smb",
        description="SMB valuation profiles, Newton polygons, Herbrand "
        "psi-functions, conductors and Szpiro reports for Drinfeld modules",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--config", required=True,
                        help="job file, or a directory of .ini job files")
        sp.add_argument("--out", default=None,
                        help="output file (directory in batch mode)")
        sp.add_argument("--format", default="json", choices=("json", "md"))
        sp.add_argument("--budget", type=int, default=None,
                        help=f"enumeration budget (default from "
                             f"${BUDGET_ENV_VAR} or 65536)")
    args = parser.parse_args(argv)

    if os.path.isdir(args.config):
        jobs = sorted(
            f for f in os.listdir(args.config) if f.endswith(".ini")
        )
        if not jobs:
            print("error: no .ini files in config directory", file=sys.stderr)
            return EXIT_VALIDATION
        out_dir = args.out or "."
        os.makedirs(out_dir, exist_ok=True)
        worst = EXIT_OK
        for name in jobs:
            path = os.path.join(args.config, name)
            target = os.path.join(out_dir, _hash_name(path, args.format))
            code = _run_one(path, args.command, args.format, args.budget, target)
            worst = max(worst, code)
        return worst
    return _run_one(args.config, args.command, args.format, args.budget, args.out)


if __name__ == "__main__":
    sys.exit(main())
