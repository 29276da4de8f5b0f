"""Batch command-line interface.

Subcommands cover the package's verification surfaces: density formulas
(xi, xi-blowup, curve), exact simplex maximization (psi-star,
check-prop-opt), tiling solvers (nu, mixed-cover), extremal constructions
(construct, verify-construction, refutation-demo), and the combinatorial
verifications (verify-lemma, verify-embeddings, fixtures).

Conventions:

* rationals are written p/q (decimals are never accepted where exactness
  matters);
* ``--json`` switches stdout to a machine-readable document with a
  schema_version field; otherwise output is a small human table;
* exit codes: 0 pass/success, 1 verification failure or counterexample,
  2 usage error, 3 inconclusive (search budget exhausted);
* long verifications stream progress to stderr and write report files
  atomically.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional

from . import constructions as cons
from . import extendability as ext
from .fixtures import verify_figure_fixtures
from .graphs import SmallGraph, format_edge_list, parse_edge_list
from .patterns import Pattern, custom_pattern, pattern_by_name
from .simplex import SimplexDomainError, psi_star
from .tiling import (
    DEFAULT_NODE_BUDGET,
    hhat_blowup_tiling,
    lift_tiling,
    max_mixed_cover,
    max_tiling,
    tiling_from_images,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


class UsageError(Exception):
    pass


def _rat(text: str) -> Fraction:
    if "." in text:
        raise UsageError(f"write rationals as p/q, not decimals: {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"expected a rational like 3/10, got {text!r}") from exc


def _decimal_str(x: Fraction, sig: int = 12) -> str:
    """Shortest exact decimal when the denominator is 2^a 5^b, else
    ``sig`` significant digits."""
    num, den = x.numerator, x.denominator
    d, e2, e5 = den, 0, 0
    while d % 2 == 0:
        d //= 2
        e2 += 1
    while d % 5 == 0:
        d //= 5
        e5 += 1
    if d != 1:
        return f"{float(x):.{sig}g}"
    k = max(e2, e5)
    if k == 0:
        return str(num)
    scaled = abs(num) * 10**k // den
    s = f"{scaled:0{k + 1}d}"
    out = (s[:-k] + "." + s[-k:]).rstrip("0").rstrip(".")
    return ("-" if num < 0 else "") + out


def _emit(doc: dict, as_json: bool, human: Optional[str] = None) -> None:
    if as_json:
        print(json.dumps(doc, sort_keys=True))
    else:
        print(human if human is not None else json.dumps(doc, indent=2, sort_keys=True))


def _load_graph(path: str) -> SmallGraph:
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    with open(path) as fh:
        return parse_edge_list(fh.read())


def _resolve_pattern(args) -> Pattern:
    if getattr(args, "pattern_file", None):
        with open(args.pattern_file) as fh:
            return custom_pattern(parse_edge_list(fh.read()), name=os.path.basename(args.pattern_file))
    return pattern_by_name(args.pattern)


def _atomic_write(path: str, text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _construction_spec(args) -> cons.ConstructionSpec:
    beta = _rat(args.beta)
    if args.kind == "bipartite-lower":
        return cons.bipartite_lower_spec(args.n, beta)
    sizes = tuple(int(s) for s in args.sizes.split(","))
    if args.i is None:
        raise UsageError("gnib construction requires --i")
    return cons.gnib_spec(args.n, beta, args.i, sizes)


# -- subcommand handlers -------------------------------------------------------


def _cmd_xi(args) -> int:
    beta = _rat(args.beta)
    val = cons.xi(beta)
    _emit(
        {"schema_version": 1, "beta": str(beta), "xi": str(val)},
        args.json,
        f"xi({beta}) = {val} ~ {_decimal_str(val)}",
    )
    return EXIT_PASS


def _cmd_xi_blowup(args) -> int:
    beta = _rat(args.beta)
    val = cons.xi_blowup(args.t, beta)
    _emit(
        {"schema_version": 1, "t": args.t, "beta": str(beta), "xi_blowup": str(val)},
        args.json,
        f"xi_blowup(t={args.t}, {beta}) = {val} ~ {_decimal_str(val)}",
    )
    return EXIT_PASS


def _cmd_psi_star(args) -> int:
    alpha = _rat(args.alpha)
    val, arg = psi_star(alpha)
    doc = {
        "schema_version": 1,
        "alpha": str(alpha),
        "psi_star": str(val),
        "decimal": _decimal_str(val),
        "argmax": [str(v) for v in arg.y],
    }
    _emit(doc, args.json, f"psi*({alpha}) = {val} ~ {_decimal_str(val)} at y = ({', '.join(map(str, arg.y))})")
    return EXIT_PASS


def _cmd_check_prop_opt(args) -> int:
    rows = []
    all_ok = True
    for k in range(args.grid + 1):
        alpha = Fraction(k, 6 * args.grid)
        v, _ = psi_star(alpha)
        x = cons.xi(alpha)
        ok = v == x
        all_ok = all_ok and ok
        rows.append({"alpha": str(alpha), "psi_star": str(v), "xi": str(x), "equal": ok})
    doc = {"schema_version": 1, "grid": args.grid, "rows": rows, "passed": all_ok}
    human = "\n".join(
        f"alpha={r['alpha']:>8}  psi*={r['psi_star']:>10}  xi={r['xi']:>10}  {'ok' if r['equal'] else 'MISMATCH'}"
        for r in rows
    ) + f"\n{'PASS' if all_ok else 'FAIL'}: psi* = xi on all {len(rows)} grid points"
    _emit(doc, args.json, human)
    return EXIT_PASS if all_ok else EXIT_FAIL


def _cmd_nu(args) -> int:
    host = _load_graph(args.graph)
    pattern = _resolve_pattern(args)
    res = max_tiling(pattern, host, budget=args.budget)
    doc = {
        "schema_version": 1,
        "pattern": pattern.name,
        "host_vertices": host.n,
        "nu": res.count,
        "exact": res.exact,
        "nodes": res.nodes,
    }
    _emit(doc, args.json, f"nu({pattern.name}, host) = {res.count} ({'exact' if res.exact else 'lower bound, budget exhausted'})")
    if args.witness:
        _atomic_write(args.witness, res.tiling.to_json() + "\n")
    return EXIT_PASS if res.exact else EXIT_INCONCLUSIVE


def _cmd_mixed_cover(args) -> int:
    host = _load_graph(args.graph)
    families = tuple(pattern_by_name(n) for n in args.families.split(","))
    res = max_mixed_cover(families, host, budget=args.budget, target=args.target)
    doc = {
        "schema_version": 1,
        "families": [p.name for p in families],
        "host_vertices": host.n,
        "coverage": res.coverage,
        "members": len(res.tiling.members),
        "exact": res.exact,
    }
    _emit(doc, args.json, f"coverage {res.coverage}/{host.n} with {len(res.tiling.members)} members ({'exact' if res.exact else 'budget exhausted'})")
    if args.witness:
        _atomic_write(args.witness, res.tiling.to_json() + "\n")
    return EXIT_PASS if res.exact else EXIT_INCONCLUSIVE


def _cmd_construct(args) -> int:
    spec = _construction_spec(args)
    text = format_edge_list(cons.build_construction(spec))
    if args.out:
        _atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS


def _cmd_verify_construction(args) -> int:
    spec = _construction_spec(args)
    verdict = cons.verify_construction_matching(spec, budget=args.budget)
    doc = verdict.to_doc()
    _emit(doc, args.json, f"nu = {verdict.nu}, beta*n = {verdict.beta_n}: bound {'holds' if verdict.holds else 'FAILS' if verdict.holds is False else 'inconclusive'}")
    if verdict.holds is None:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS if verdict.holds else EXIT_FAIL


def _cmd_refutation_demo(args) -> int:
    results = cons.refutation_demo(budget=args.budget)
    doc = {"schema_version": 1, "scenarios": results, "passed": all(r["as_expected"] for r in results)}
    lines = []
    for r in results:
        spec = r["spec"]
        name = spec["kind"] + (f"(i={spec['i']})" if "i" in spec else "")
        lines.append(
            f"{name:<22} n={spec['n']:>3} beta={spec['beta']:>5}: nu={r['nu']} vs beta*n={r['beta_n']}"
            f" -> bound {'holds' if r['holds'] else 'FAILS'} ({'as expected' if r['as_expected'] else 'UNEXPECTED'})"
        )
    lines.append("PASS" if doc["passed"] else "FAIL")
    _emit(doc, args.json, "\n".join(lines))
    if any(r["holds"] is None for r in results):
        return EXIT_INCONCLUSIVE
    return EXIT_PASS if doc["passed"] else EXIT_FAIL


def _cmd_verify_lemma(args) -> int:
    progress = (lambda msg: print(msg, file=sys.stderr, flush=True)) if not args.quiet else None
    rep = ext.verify_lemma(
        args.id,
        mode=args.mode,
        count=args.count,
        seed=args.seed,
        jobs=args.jobs,
        progress=progress,
    )
    doc = rep.to_doc()
    human = (
        f"{rep.lemma} [{rep.mode}]: {rep.checked} configurations checked, "
        f"{len(rep.counterexamples)} counterexamples, {rep.solver_calls} solver calls, "
        f"{rep.elapsed_ms} ms -> {'PASS' if rep.passed else 'FAIL'}"
    )
    _emit(doc, args.json, human)
    if args.out:
        _atomic_write(args.out, rep.to_json() + "\n")
    return EXIT_PASS if rep.passed else EXIT_FAIL


def _cmd_verify_embeddings(args) -> int:
    from .graphs import blowup
    from .patterns import pattern_h, pattern_k2

    checks = []
    ok = True
    for t in range(1, args.t_max + 1):
        tiling = hhat_blowup_tiling(t)
        expected = t // 2 + 4 * (t // 6)
        tiling.validate()
        good = len(tiling.members) == expected
        ok = ok and good
        checks.append({"check": f"hhat-blowup t={t}", "members": len(tiling.members), "expected": expected, "ok": good})
    for t in range(1, 10):
        res = max_tiling(pattern_h(), blowup(pattern_k2().graph, t))
        good = res.exact and res.count == t // 3
        ok = ok and good
        checks.append({"check": f"nu(H, K2-blowup t={t})", "nu": res.count, "expected": t // 3, "ok": good})
    # lift round-trip on a one-member tiling of each family
    k2_host = SmallGraph.from_edges(2, [(0, 1)])
    lift = lift_tiling(tiling_from_images(k2_host, [(pattern_by_name("K2"), (0, 1))]))
    good = lift.coverage == 12
    ok = ok and good
    checks.append({"check": "lift K2 member", "coverage": lift.coverage, "expected": 12, "ok": good})
    doc = {"schema_version": 1, "checks": checks, "passed": ok}
    human = "\n".join(f"{'ok ' if c['ok'] else 'FAIL'} {c['check']}" for c in checks) + ("\nPASS" if ok else "\nFAIL")
    _emit(doc, args.json, human)
    return EXIT_PASS if ok else EXIT_FAIL


def _cmd_fixtures(args) -> int:
    rep = verify_figure_fixtures()
    human = "\n".join(
        f"{'ok ' if f['ok'] else 'FAIL'} cover={f.get('coverage', '-'):>2} {f['key']}" for f in rep["fixtures"]
    ) + ("\nPASS" if rep["passed"] else "\nFAIL")
    _emit(rep, args.json, human)
    return EXIT_PASS if rep["passed"] else EXIT_FAIL


def _cmd_curve(args) -> int:
    lo, hi = _rat(getattr(args, "from")), _rat(args.to)
    if not (Fraction(0) <= lo < hi <= Fraction(1, 6)):
        raise UsageError("curve range must satisfy 0 <= from < to <= 1/6")
    if args.steps < 1:
        raise UsageError("steps must be >= 1")
    lines = ["beta,xi,xi_exact"]
    for k in range(args.steps + 1):
        beta = lo + (hi - lo) * k / args.steps
        val = cons.xi(beta)
        lines.append(f"{str(beta)},{_decimal_str(val)},{str(val)}")
    text = "\n".join(lines) + "\n"
    if args.out:
        _atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="htiling", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("xi", _cmd_xi, help="evaluate the extremal density formula")
    p.add_argument("--beta", required=True)

    p = add("xi-blowup", _cmd_xi_blowup, help="evaluate the blowup density formula")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--beta", required=True)

    p = add("psi-star", _cmd_psi_star, help="exact simplex maximum with maximizer")
    p.add_argument("--alpha", required=True)

    p = add("check-prop-opt", _cmd_check_prop_opt, help="psi* vs xi on a rational grid")
    p.add_argument("--grid", type=int, default=30, help="check alpha = k/(6*grid), k = 0..grid")

    p = add("nu", _cmd_nu, help="exact maximum tiling number")
    p.add_argument("--graph", required=True, help="edge-list file, or - for stdin")
    p.add_argument("--pattern", default="H", help="H, Hhat, or K2")
    p.add_argument("--pattern-file", help="custom pattern as an edge-list file")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--witness", help="write the witness tiling JSON here")

    p = add("mixed-cover", _cmd_mixed_cover, help="maximum mixed-family coverage")
    p.add_argument("--graph", required=True)
    p.add_argument("--families", default="K2,H,Hhat")
    p.add_argument("--target", type=int, default=None, help="stop once this coverage is reached")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--witness")

    for name, fn in (("construct", _cmd_construct), ("verify-construction", _cmd_verify_construction)):
        p = add(name, fn, help=f"{'emit' if name == 'construct' else 'check the tiling bound of'} an extremal construction")
        p.add_argument("--kind", choices=["bipartite-lower", "gnib"], required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--beta", required=True)
        p.add_argument("--i", type=int, default=None, help="planted-set intersection threshold (gnib)")
        p.add_argument("--sizes", default="3,3")
        if name == "construct":
            p.add_argument("--out", help="output file (default stdout)")
        else:
            p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)

    p = add("refutation-demo", _cmd_refutation_demo, help="run the fixed conjecture-refutation scenarios")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)

    p = add("verify-lemma", _cmd_verify_lemma, help="verify a local edge-bound lemma at its boundary")
    p.add_argument("--id", required=True, choices=sorted(ext.LEMMAS))
    p.add_argument("--mode", choices=["exhaustive", "sampled"], default="sampled")
    p.add_argument("--count", type=int, default=100_000, help="samples per designation class")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write the report JSON here")
    p.add_argument("--quiet", action="store_true", help="suppress stderr progress")

    p = add("verify-embeddings", _cmd_verify_embeddings, help="validate blowup embedding schedules and lifts")
    p.add_argument("--t-max", type=int, default=12)

    add("fixtures", _cmd_fixtures, help="validate the curated decomposition fixtures")

    p = add("curve", _cmd_curve, help="emit the density curve as CSV")
    p.add_argument("--from", required=True)
    p.add_argument("--to", required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", help="output file (default stdout)")

    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (UsageError, SimplexDomainError, cons.ConstructionDomainError, ext.ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
