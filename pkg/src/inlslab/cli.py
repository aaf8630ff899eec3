"""Command-line frontend.

Subcommands: classify, region-map, eigen, minimize, verify, thresholds,
probe. Primary results go to stdout as JSON with 17-significant-digit
floats; profile/report files land under --out. Errors print a single
JSON line on stderr; exit codes: 0 success, 2 validation error, 3 solver
divergence.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from .errors import Diverged, InlsError, SingularHessian
from .functionals import TermSpec, eigen_relation_residual, el_residual, pohozaev_residual
from .grid import load_profile, make_grid, sample_function, save_profile
from .regimes import (
    WeightedPair,
    classify_pair,
    derive_params,
    ell_of,
    gamma_mu_roots,
    ps_threshold,
    region_map,
    region_map_csv,
    tilde_s_root,
    critical_exponent,
)
from .reports import to_json
from .solver import SolveOptions, minimize_coercive, minimize_rayleigh, probe_best_constant


def _add_params(ap: argparse.ArgumentParser) -> None:
    ap.add_argument("--N", type=int, required=True, help="spatial dimension")
    ap.add_argument("--b", type=float, required=True, help="operator weight exponent")
    ap.add_argument("--q", type=float, required=True, help="operator power")
    ap.add_argument("--p", type=float, required=True, help="eigen-term power")


def _add_grid(ap: argparse.ArgumentParser) -> None:
    ap.add_argument("--s-min", type=float, default=1e-4)
    ap.add_argument("--s-max", type=float, default=1e4)
    ap.add_argument("--M", type=int, default=1025, help="node count")


def _add_opts(ap: argparse.ArgumentParser) -> None:
    ap.add_argument("--max-iters", type=int, default=50_000)
    ap.add_argument("--grad-tol", type=float, default=1e-8)
    ap.add_argument("--seed", type=int, default=0)


def _opts(args) -> SolveOptions:
    return SolveOptions(max_iters=args.max_iters, grad_tol=args.grad_tol, seed=args.seed)


def _parse_term(text: str) -> TermSpec:
    try:
        c, eta, r = (float(x) for x in text.split(","))
    except ValueError as exc:
        raise InlsError(f"term must be 'c,eta,r', got {text!r}") from exc
    return TermSpec(c=c, eta=eta, r=r)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="inlslab", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="admissibility and regime of one (eta, r) pair")
    _add_params(c)
    c.add_argument("--eta", type=float, required=True)
    c.add_argument("--r", type=float, required=True)
    c.add_argument("--radial", action="store_true")

    rm = sub.add_parser("region-map", help="CSV atlas of verdicts over an (eta, r) grid")
    _add_params(rm)
    rm.add_argument("--eta-min", type=float, required=True)
    rm.add_argument("--eta-max", type=float, required=True)
    rm.add_argument("--eta-steps", type=int, required=True)
    rm.add_argument("--r-min", type=float, required=True)
    rm.add_argument("--r-max", type=float, required=True)
    rm.add_argument("--r-steps", type=int, required=True)
    rm.add_argument("--radial", action="store_true")
    rm.add_argument("--out", required=True, help="CSV output path")

    e = sub.add_parser("eigen", help="first eigenvalue by Rayleigh minimization")
    _add_params(e)
    _add_grid(e)
    _add_opts(e)
    e.add_argument("--init", choices=["gaussian", "bump"], default="gaussian")
    e.add_argument("--out", help="directory for report.json and profile.csv")

    m = sub.add_parser("minimize", help="negative-level minimizer of the coercive energy")
    _add_params(m)
    _add_grid(m)
    _add_opts(m)
    m.add_argument("--lambda", dest="lam", type=float, default=0.0)
    m.add_argument("--term", action="append", default=[], help="c,eta,r (repeatable)")
    m.add_argument("--out", help="directory for report.json and profile.csv")

    v = sub.add_parser("verify", help="recompute residuals for a stored profile")
    _add_params(v)
    v.add_argument("--profile", required=True, help="profile CSV path")
    v.add_argument("--lambda", dest="lam", type=float, default=0.0)
    v.add_argument("--term", action="append", default=[], help="c,eta,r (repeatable)")

    t = sub.add_parser("thresholds", help="compactness levels c*, S-tilde, truncation radii")
    t.add_argument("--N", type=int, required=True)
    t.add_argument("--eta1", type=float, required=True)
    t.add_argument("--eta2", type=float)
    t.add_argument("--S1", type=float, required=True)
    t.add_argument("--S2", type=float)
    t.add_argument("--mu", type=float, default=0.0)
    t.add_argument("--C", type=float, help="truncation envelope constant for the low term")
    t.add_argument("--C1", type=float, help="truncation envelope constant for the high term")
    t.add_argument("--b", type=float, help="needed with --C/--C1 to derive exponents")
    t.add_argument("--q", type=float)
    t.add_argument("--p", type=float)
    t.add_argument("--eta", type=float, help="subscaled term weight for the truncation window")
    t.add_argument("--r", type=float, help="subscaled term power for the truncation window")

    pr = sub.add_parser("probe", help="upper bound for the embedding constant S_eta")
    pr.add_argument("--N", type=int, required=True)
    pr.add_argument("--eta", type=float, required=True)
    _add_grid(pr)
    _add_opts(pr)

    return ap


def _emit(doc) -> None:
    sys.stdout.write(to_json(doc) + "\n")


def _finish_solve(report) -> int:
    _emit(report.to_dict())
    if not report.converged:
        sys.stderr.write(
            to_json({"error": "DIVERGED", "message": "solver did not reach grad_tol"}) + "\n"
        )
        return 3
    return 0


def _write_outputs(args, params, report):
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        ppath = os.path.join(args.out, "profile.csv")
        save_profile(report.profile, ppath, family="solution",
                     params={"N": params.N, "b": params.b, "q": params.q, "p": params.p})
        report.profile_path = ppath
        rpath = os.path.join(args.out, "report.json")
        with open(rpath, "w") as fh:
            fh.write(to_json(report.to_dict()) + "\n")


def _run(args) -> int:
    if args.command == "classify":
        params = derive_params(args.N, args.b, args.q, args.p)
        verdict = classify_pair(params, WeightedPair(args.eta, args.r), radial=args.radial)
        iv = verdict.interval
        _emit(
            {
                "admissible": verdict.admissible,
                "regime": verdict.regime.value,
                "reason": verdict.reason,
                "interval": None
                if iv is None
                else {
                    "lower": iv.lower,
                    "upper": iv.upper,
                    "lower_included": iv.lower_included,
                    "upper_included": iv.upper_included,
                    "radial": iv.radial,
                    "compact_interior": iv.compact_interior,
                },
            }
        )
        return 0

    if args.command == "region-map":
        params = derive_params(args.N, args.b, args.q, args.p)
        etas = list(np.linspace(args.eta_min, args.eta_max, args.eta_steps))
        rs = list(np.linspace(args.r_min, args.r_max, args.r_steps))
        rows = region_map(params, etas, rs, radial=args.radial)
        with open(args.out, "w") as fh:
            fh.write(region_map_csv(rows))
        _emit({"rows": len(rows), "out": args.out})
        return 0

    if args.command == "eigen":
        params = derive_params(args.N, args.b, args.q, args.p)
        grid = make_grid(args.s_min, args.s_max, args.M, args.N)
        if args.init == "gaussian":
            init = sample_function(grid, "Gaussian", sigma=1.0)
        else:
            init = sample_function(grid, "Bump", lo=1.0, hi=2.0)
        report = minimize_rayleigh(grid, params, init, _opts(args))
        _write_outputs(args, params, report)
        return _finish_solve(report)

    if args.command == "minimize":
        params = derive_params(args.N, args.b, args.q, args.p)
        grid = make_grid(args.s_min, args.s_max, args.M, args.N)
        terms = [_parse_term(t) for t in args.term]
        report = minimize_coercive(grid, params, terms, args.lam, _opts(args))
        _write_outputs(args, params, report)
        return _finish_solve(report)

    if args.command == "verify":
        params = derive_params(args.N, args.b, args.q, args.p)
        u = load_profile(args.profile)
        terms = [_parse_term(t) for t in args.term]
        poh_terms = list(terms)
        if args.lam != 0.0:
            poh_terms.append(TermSpec(args.lam, params.a, params.p))
        _emit(
            {
                "el_res": el_residual(u, params, args.lam, terms),
                "pohozaev_res": pohozaev_residual(u, params, poh_terms),
                "eigen_rel_res": eigen_relation_residual(u, params, args.lam),
            }
        )
        return 0

    if args.command == "thresholds":
        doc = {"cstar": ps_threshold(args.N, args.eta1, args.S1)}
        if args.eta2 is not None and args.S2 is not None:
            doc["tilde_s"] = tilde_s_root(args.mu, args.S1, args.S2, args.N, args.eta1, args.eta2)
        if args.C is not None and args.C1 is not None:
            for name in ("b", "q", "p", "eta", "r"):
                if getattr(args, name) is None:
                    raise InlsError(f"--{name} is required for truncation radii")
            params = derive_params(args.N, args.b, args.q, args.p)
            e_low = ell_of(params, args.eta, args.r) / params.ell
            e_high = ell_of(params, args.eta1, critical_exponent(args.N, args.eta1)) / params.ell
            r1, r2 = gamma_mu_roots(args.mu, args.C, args.C1, e_low, e_high)
            doc["truncation_R1"] = r1
            doc["truncation_R2"] = r2
        _emit(doc)
        return 0

    if args.command == "probe":
        grid = make_grid(args.s_min, args.s_max, args.M, args.N)
        value = probe_best_constant(grid, args.N, args.eta, _opts(args))
        _emit({"S": value})
        return 0

    raise InlsError(f"unknown command {args.command!r}")  # pragma: no cover


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except (Diverged, SingularHessian) as exc:
        sys.stderr.write(to_json({"error": exc.code, "message": exc.message}) + "\n")
        return 3
    except InlsError as exc:
        sys.stderr.write(to_json({"error": exc.code, "message": exc.message}) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
