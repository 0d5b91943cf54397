"""Command-line interface.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
With ``--json PATH`` (``-`` for stdout) every command writes one JSON
document ``{"command", "status", "code", "result"}``.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from dataclasses import dataclass

from . import __version__
from .bounds import HypothesisError, check_theorem, growth_profile
from .catalog import CATALOG, catalog_get, describe
from .design import EPS_INT, RULES, Design, design_strength
from .export import write_dot, write_json
from .graph import Graph, GraphError, from_graph6, from_lcf, parse_lcf, read_edge_list
from .reproduce import format_table, reproduce
from .search import (BudgetExceeded, brute_force, heat_local_search, heuristic_distance_search,
                     multi_seed)
from .spectral import EPS_DEG, EPS_EIG, SpectrumError, invariant_report, spectrum
from .weighted import SingularMinorError, find_minor_design, solve_weights

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    def __init__(self, message: str, code: str = "usage_error"):
        super().__init__(message)
        self.code = code


@dataclass
class Outcome:
    result: dict
    text: str
    ok: bool = True
    code: str = "ok"


# ---------------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------------

def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _positive(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerances must be positive")
    return v


def load_graph(args) -> Graph:
    sources = [x for x in ("graph", "lcf", "edgelist", "graph6") if getattr(args, x, None)]
    if len(sources) != 1:
        raise UsageError("give exactly one graph source: --graph, --lcf, --edgelist or --graph6")
    try:
        if args.graph:
            return catalog_get(args.graph)
        if args.lcf:
            code, repeats = parse_lcf(args.lcf)
            return from_lcf(code, repeats, name=args.lcf)
        if args.edgelist:
            return read_edge_list(args.edgelist, name=args.edgelist)
        with open(args.graph6, encoding="ascii") as fh:
            first = next((ln.strip() for ln in fh if ln.strip()), "")
        return from_graph6(first, name=args.graph6)
    except KeyError as exc:
        raise UsageError(str(exc.args[0]), "unknown_graph") from None
    except OSError as exc:
        raise UsageError(f"cannot read graph file: {exc}", "io_error") from None
    except GraphError as exc:
        raise UsageError(str(exc), "invalid_graph") from None


def _spectrum(g: Graph, args):
    return spectrum(g, allow_irregular=getattr(args, "allow_irregular", False),
                    eps_eig=args.eps_eig, eps_deg=args.eps_deg)


def _design(g: Graph, args) -> Design:
    if not args.subset:
        raise UsageError("--subset is required")
    if args.weights is not None and args.equal_weights:
        raise UsageError("use either --equal-weights or --weights, not both")
    try:
        if args.weights is None:
            return Design.equal(g, args.subset)
        return Design.weighted(g, args.subset, args.weights)
    except ValueError as exc:
        raise UsageError(str(exc), "invalid_design") from None


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_catalog(args) -> Outcome:
    rows = [describe(name) for name in CATALOG]
    text = "\n".join(f"{r['name']:<24}{r['order']:>4}{r['size']:>6}  deg {r['degree']:<3} girth {r['girth']}"
                     f"  diam {r['diameter']}  ({r['source']})" for r in rows)
    return Outcome({"graphs": rows}, text)


def cmd_spectrum(args) -> Outcome:
    g = load_graph(args)
    s = _spectrum(g, args)
    inv = invariant_report(g, s)
    result = {"graph": g.name, **s.to_dict(include_vectors=args.vectors), "invariants": inv}
    lines = [f"{g.name}: n={g.n}, {len(s.classes)} frequency classes"]
    lines += [f"  {c.frequency:.10f}  dim {c.dim}  spaces {[len(sp) for sp in c.spaces]}"
              + ("  (ambiguous)" if c.ambiguous else "") for c in s.classes]
    lines.append("  max eigen-residual {:.2e}".format(inv["residual"]))
    return Outcome(result, "\n".join(lines))


def _report_lines(g, rep) -> list[str]:
    d = rep.design
    return [f"{g.name}: W = {list(d.subset)}" + ("" if d.equal_weights else f", weights {d.weights.tolist()}"),
            f"  K = {rep.strength} (complete eigenspaces: {rep.complete_strength})",
            f"  lambda* = {rep.lambda_star:.10g}"]


def _certificate(g, s, d, args, lam=None):
    try:
        cert = check_theorem(g, s, d, lam=lam, allow_irregular=args.allow_irregular, eps_int=args.eps_int)
    except HypothesisError as exc:
        return None, str(exc)
    return cert, None


def _cert_lines(cert, why) -> list[str]:
    if cert is None:
        return [f"  growth bound not evaluated: {why}"]
    out = [f"  growth bound (lambda = {cert.lam:.6g}{', vacuous' if cert.vacuous else ''}): "
           f"{'holds' if cert.passed else 'VIOLATED'}"]
    for r in cert.rows:
        eq = f"{r.equal:.4g}" if r.equal is not None else "-"
        out.append(f"    k={r.k}: |ball|={r.observed}  general {r.general:.4g}  equal {eq}  sharp {r.sharp:.4g}")
    return out


def cmd_verify(args) -> Outcome:
    g = load_graph(args)
    s = _spectrum(g, args)
    d = _design(g, args)
    rep = design_strength(s, d, args.eps_int)
    cert, why = _certificate(g, s, d, args)
    result = rep.to_dict(g.name)
    result["certificate"] = cert.to_dict() if cert else None
    result["certificate_skipped"] = why
    ok = cert is None or cert.passed
    code = "ok"
    if args.expect_k is not None:
        result["expected_K"] = args.expect_k
        if rep.strength < args.expect_k:
            ok, code = False, "strength_below_expected"
    if cert is not None and not cert.passed:
        code = "bound_violated"
    lines = _report_lines(g, rep) + _cert_lines(cert, why)
    if args.dot:
        write_dot(g, args.dot, d.subset)
    return Outcome(result, "\n".join(lines), ok, code)


def cmd_search(args) -> Outcome:
    g = load_graph(args)
    s = _spectrum(g, args)
    if not 1 <= args.size <= g.n:
        raise UsageError(f"--size must be between 1 and {g.n}")
    if args.method == "brute":
        try:
            r = brute_force(g, s, args.size, args.eps_int, budget=args.budget, workers=args.workers,
                            rule=args.rule)
        except BudgetExceeded as exc:
            raise UsageError(str(exc), "budget_exceeded") from None
    else:
        fn = heuristic_distance_search if args.method == "distance" else heat_local_search
        kwargs = {"s": s, "eps_int": args.eps_int, "rule": args.rule, "max_iters": args.max_iters}
        if args.method == "heat":
            kwargs["steps"] = args.steps
        seeds = range(args.seed, args.seed + args.seeds)
        r = fn(g, args.size, seed=args.seed, **kwargs) if args.seeds == 1 else \
            multi_seed(fn, g, args.size, seeds, **kwargs)
    result = r.to_dict(g.name)
    lines = [f"{g.name}: {r.method} search, |W| = {args.size}",
             f"  best K = {r.best_K} ({r.witness_count} witnesses, {r.subsets_examined} subsets examined)"]
    lines += [f"  {list(w)}" for w in r.witnesses[:10]]
    if len(r.witnesses) > 10:
        lines.append(f"  ... {len(r.witnesses) - 10} more")
    if args.dot and r.witnesses:
        write_dot(g, args.dot, r.witnesses[0])
    return Outcome(result, "\n".join(lines))


def cmd_bound(args) -> Outcome:
    g = load_graph(args)
    s = _spectrum(g, args)
    d = _design(g, args)
    profile = growth_profile(g, d.subset)
    cert, why = _certificate(g, s, d, args, lam=args.lam)
    if cert is None and args.lam is not None and why and "below the design threshold" in why:
        raise UsageError(why, "invalid_lambda")
    result = {"graph": g.name, "subset": list(d.subset), "profile": list(profile.sizes),
              "certificate": cert.to_dict() if cert else None, "certificate_skipped": why}
    lines = [f"{g.name}: W = {list(d.subset)}, ball sizes {list(profile.sizes)}"] + _cert_lines(cert, why)
    if cert is None:
        return Outcome(result, "\n".join(lines), False, "hypothesis_not_met")
    return Outcome(result, "\n".join(lines), cert.passed, "ok" if cert.passed else "bound_violated")


def cmd_weights(args) -> Outcome:
    g = load_graph(args)
    s = _spectrum(g, args)
    try:
        if args.mode == "solve":
            if not args.subset or not args.targets:
                raise UsageError("weights solve needs --subset and --targets")
            sol = solve_weights(s, args.subset, args.targets)
        else:
            if args.k is None or not 1 <= args.k <= g.n:
                raise UsageError(f"weights minor needs --k between 1 and {g.n}")
            sol = find_minor_design(s, args.k)
    except SingularMinorError as exc:
        return Outcome({"graph": g.name, "error": str(exc)}, f"singular: {exc}", False, "singular_minor")
    except ValueError as exc:
        raise UsageError(str(exc), "invalid_design") from None
    ok = sol.residual <= args.eps_int
    result = {"graph": g.name, **sol.to_dict()}
    text = (f"{g.name}: W = {list(sol.subset)}, eigenfunctions {list(sol.eigen_indices)}\n"
            f"  weights {[round(w, 12) for w in sol.weights.tolist()]}\n"
            f"  residual {sol.residual:.2e}, positive: {sol.positive}")
    return Outcome(result, text, ok, "ok" if ok else "residual_too_large")


def cmd_reproduce(args) -> Outcome:
    rows = reproduce(exhaustive=args.exhaustive, workers=args.workers)
    ok = all(r.passed for r in rows)
    return Outcome({"claims": [r.to_dict() for r in rows], "passed": ok}, format_table(rows), ok,
                   "ok" if ok else "claim_failed")


COMMANDS = {"catalog": cmd_catalog, "spectrum": cmd_spectrum, "verify": cmd_verify,
            "search": cmd_search, "bound": cmd_bound, "weights": cmd_weights,
            "reproduce": cmd_reproduce}


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eps-eig", type=_positive, default=EPS_EIG)
    common.add_argument("--eps-deg", type=_positive, default=EPS_DEG)
    common.add_argument("--eps-int", type=_positive, default=EPS_INT)
    common.add_argument("--json", metavar="PATH", help="write a JSON report ('-' for stdout)")

    source = argparse.ArgumentParser(add_help=False)
    src = source.add_argument_group("graph source (exactly one)")
    src.add_argument("--graph", help="catalog name")
    src.add_argument("--lcf", help="LCF code such as '[5,-9,7,-7,9,-5]^4'")
    src.add_argument("--edgelist", metavar="PATH")
    src.add_argument("--graph6", metavar="PATH", help="file whose first line is a graph6 string")
    src.add_argument("--allow-irregular", action="store_true",
                     help="accept irregular graphs (degree-weighted eigenbasis)")

    design = argparse.ArgumentParser(add_help=False)
    design.add_argument("--subset", type=_int_list, help="0-based vertices, comma separated")
    design.add_argument("--equal-weights", action="store_true", help="weights 1/|W| (the default)")
    design.add_argument("--weights", type=_float_list, help="one weight per subset vertex, summing to 1")
    design.add_argument("--dot", metavar="PATH", help="write a DOT drawing with the design circled")

    p = argparse.ArgumentParser(prog="graphdesigns", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", parents=[common], help="list catalog graphs and their invariants")

    sp = sub.add_parser("spectrum", parents=[common, source], help="spectrum and frequency classes")
    sp.add_argument("--vectors", action="store_true", help="include eigenvectors in JSON output")

    vp = sub.add_parser("verify", parents=[common, source, design], help="strength of a design")
    vp.add_argument("--expect-k", type=int, help="exit 1 if the strength is below this")

    se = sub.add_parser("search", parents=[common, source], help="search for equal-weight designs")
    se.add_argument("method", choices=["brute", "distance", "heat"])
    se.add_argument("--size", type=int, required=True)
    se.add_argument("--seed", type=int, default=0)
    se.add_argument("--seeds", type=int, default=1, help="number of consecutive seeds to run")
    se.add_argument("--steps", type=int, help="diffusion steps (heat; default ceil(diameter/2))")
    se.add_argument("--max-iters", type=int, default=1000)
    se.add_argument("--budget", type=int, default=10**7, help="maximum subsets for brute force")
    se.add_argument("--workers", type=int, default=1)
    se.add_argument("--rule", choices=RULES, default="admissible")
    se.add_argument("--dot", metavar="PATH", help="write a DOT drawing of the first witness")

    bp = sub.add_parser("bound", parents=[common, source, design], help="growth profile and bound certificate")
    bp.add_argument("--lambda", dest="lam", type=float, help="override the verified threshold")

    wp = sub.add_parser("weights", parents=[common, source], help="weighted designs from minors")
    wp.add_argument("mode", choices=["solve", "minor"])
    wp.add_argument("--subset", type=_int_list)
    wp.add_argument("--targets", type=_int_list, help="eigen-indices in frequency order (0 = constant)")
    wp.add_argument("--k", type=int)

    rp = sub.add_parser("reproduce", parents=[common], help="re-check every pinned design claim")
    rp.add_argument("--exhaustive", action="store_true", help="rerun brute force for each claim")
    rp.add_argument("--workers", type=int, default=1)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    json_path = getattr(args, "json", None)
    try:
        out = COMMANDS[args.command](args)
    except (UsageError, SpectrumError) as exc:
        code = exc.code if isinstance(exc, UsageError) else "spectrum_error"
        print(f"graphdesigns {args.command}: error: {exc}", file=sys.stderr)
        if json_path:
            write_json({"command": args.command, "status": "usage_error", "code": code,
                        "result": {"error": str(exc)}}, json_path)
        return EXIT_USAGE
    if json_path != "-":
        print(out.text)
    if json_path:
        write_json({"command": args.command, "status": "ok" if out.ok else "verification_failed",
                    "code": out.code, "result": out.result}, json_path)
    return EXIT_OK if out.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
