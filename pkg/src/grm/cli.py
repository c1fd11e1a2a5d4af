"""``grm`` command line: params, arrangements, groebner, poly, lemma, verify.

Data goes to stdout (or --out); diagnostics to stderr. Exit codes: 0 ok,
1 a verification check failed, 2 invalid input, 3 budget exceeded,
4 Groebner iteration cap hit.
"""
import argparse
import csv
import io
import json
import sys
import time

from . import arrange, grmcode, lemma, verify
from .errors import (BudgetExceeded, GrmError, IterationCapExceeded, RegimeNotCovered)
from .ffield import make_field
from .groebner import ideal_footprint, rational_points, buchberger, field_equations
from .mpoly import DEFAULT_BUDGET, count_points, parse_poly, reduce_poly

EXIT_FAIL, EXIT_INVALID, EXIT_BUDGET, EXIT_CAP = 1, 2, 3, 4


def int_list(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _global_flags(suppress):
    # subcommands repeat the flags with suppressed defaults so that a value
    # given before the verb is not overwritten
    dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "csv"), default=dflt("json"))
    p.add_argument("--out", metavar="PATH", default=dflt(None))
    p.add_argument("--budget", type=int, default=dflt(DEFAULT_BUDGET))
    p.add_argument("--seed", type=int, default=dflt(verify.DEFAULT_SEED))
    return p


def build_parser():
    g = _global_flags(suppress=True)
    parser = argparse.ArgumentParser(prog="grm", parents=[_global_flags(suppress=False)],
                                     description="Generalized Reed-Muller second-weight toolkit")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("params", parents=[g], help="code parameters and second weight")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)

    p = sub.add_parser("arrangements", parents=[g], help="hyperplane arrangement counts")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--blocks", type=int_list, help="block sizes, e.g. 2,2")
    mode.add_argument("--search", action="store_true", help="best non-maximal type for -d")
    mode.add_argument("--verify", action="store_true", help="formula vs grid for every type")

    p = sub.add_parser("groebner", parents=[g], help="Groebner basis, footprint, point count")
    p.add_argument("input", help="polynomial file, one per line, '#' comments")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--action", choices=("basis", "footprint", "points"), default="footprint")

    p = sub.add_parser("poly", parents=[g], help="zero count and weight of each polynomial")
    p.add_argument("input")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-n", type=int, required=True)

    p = sub.add_parser("lemma", parents=[g], help="brute-force and closed-form minimum for one cell")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)

    p = sub.add_parser("verify", parents=[g], help="run a verification sweep")
    p.add_argument("--suite", choices=(*verify.SUITES, "all"), default="all")
    p.add_argument("-q", "--q", dest="q_set", type=int_list, default=verify.LEMMA_Q)
    p.add_argument("-n", "--n", dest="n_set", type=int_list, default=verify.LEMMA_N)
    p.add_argument("-d", "--d", dest="d_list", type=int_list)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--timing", action="store_true", help="report elapsed time on stderr")
    return parser


# ------------------------------------------------------------------ output

def _flatten(row):
    flat = {}
    for k, v in row.items():
        if isinstance(v, dict):
            for kk, vv in v.items():
                flat[f"{k}_{kk}"] = vv
        elif isinstance(v, (list, tuple)):
            flat[k] = json.dumps(v)
        else:
            flat[k] = v
    return flat


def render(rows, fmt):
    """rows: a dict (single record) or a list of dicts."""
    if fmt == "json":
        return json.dumps(rows, indent=2, sort_keys=False) + "\n"
    rows = [rows] if isinstance(rows, dict) else rows
    flat = [_flatten(r) for r in rows]
    cols = []
    for r in flat:
        cols += [c for c in r if c not in cols]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    w.writerows(flat)
    return buf.getvalue()


def emit(args, rows):
    text = render(rows, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def read_polys(path, q, n):
    F = make_field(q)
    polys = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                polys.append(parse_poly(line, n, F))
    if not polys:
        raise ValueError(f"{path}: no polynomials")
    return polys


# ------------------------------------------------------------------ verbs

def params_record(q, n, d):
    p = grmcode.grm_params(q, n, d)
    try:
        sw = grmcode.second_weight(q, n, d)
        w2, regime = sw.as_dict(), sw.regime
    except RegimeNotCovered:
        w2, regime = None, "not-covered"
    return {"q": q, "n": n, "d": d, "a": p.a, "b": p.b, "m": p.m, "k": p.k,
            "w1": p.w1, "w2": w2, "regime": regime}


def cmd_params(args):
    rec = params_record(args.q, args.n, args.d)
    if args.format == "csv":
        rec["w2"] = {"kind": None, "value": None, "lo": None, "hi": None, **(rec["w2"] or {})}
    emit(args, rec)
    return 0


def cmd_arrangements(args):
    q, n = args.q, args.n
    make_field(q)
    if args.blocks is not None:
        t = arrange.ArrangementType(args.blocks, q, n)
        N = arrange.n_points_type(t)
        rec = {"q": q, "n": n, "blocks": list(t.block_sizes), "N": N, "W": q**n - N}
        if q**n <= args.budget:
            rec["N_grid"] = arrange.n_points_grid(arrange.Arrangement.realize(t), args.budget)
        emit(args, rec)
        return 0
    if args.search:
        if args.d is None:
            raise ValueError("--search needs -d")
        best = arrange.best_nonmaximal_type(q, n, args.d)
        emit(args, {"q": q, "n": n, "d": args.d, "type": list(best.type.block_sizes),
                    "exchange": list(best.kinds), "n2prime": best.n2prime,
                    "w2prime": best.w2prime,
                    "ties": [list(t.block_sizes) for t in best.maximizers]})
        return 0
    checks = verify.suite_arrangements(verify.SweepConfig(budget=args.budget), (q,), (n,))
    emit(args, [c.as_dict() for c in checks])
    return 0 if all(c.passed for c in checks) else EXIT_FAIL


def cmd_groebner(args):
    polys = read_polys(args.input, args.q, args.n)
    rec = {"q": args.q, "n": args.n, "action": args.action}
    if args.action == "points":
        rec["points"] = rational_points(polys, args.budget)
    elif args.action == "basis":
        F = make_field(args.q)
        G = buchberger([*polys, *field_equations(F, args.n)])
        rec["basis"] = [str(g) for g in G]
    else:
        G, rep = ideal_footprint(polys, args.budget)
        pts = rational_points(polys, args.budget)
        rec.update({"basis": [str(g) for g in G], "delta": rep.delta_size,
                    "points": pts, "equal": rep.delta_size == pts})
    emit(args, rec)
    return 0


def cmd_poly(args):
    rows = []
    for f in read_polys(args.input, args.q, args.n):
        c = count_points(f, args.budget)
        r = reduce_poly(f)
        rows.append({"poly": str(f), "reduced": str(r), "degree": r.degree() if r.terms else None,
                     "zeros": c.zeros, "weight": c.weight})
    emit(args, rows)
    return 0


def cmd_lemma(args):
    inst = lemma.LemmaInstance(args.q, args.n, args.d)
    res = lemma.brute_force_min(inst, args.budget)
    mu = lemma.closed_form_mu(inst)
    try:
        shape = lemma.check_minimizer_structure(inst, args.budget).shape
    except lemma.StructureMismatch:
        shape = None
    emit(args, {"q": inst.q, "n": inst.n, "d": inst.d, "a": inst.a, "b": inst.b, "K": inst.K,
                "mu_brute": res.mu, "mu_closed": mu, "equal": res.mu == mu,
                "size_v": res.size_v, "minimizers": [list(m) for m in res.minimizers[:20]],
                "minimizers_truncated": res.truncated or len(res.minimizers) > 20,
                "shape": shape})
    return 0


def cmd_verify(args):
    cfg = verify.SweepConfig(q_set=args.q_set, n_set=args.n_set,
                             d_policy=args.d_list or "all-valid", seed=args.seed,
                             budget=args.budget, samples=args.samples,
                             output_format=args.format, output_path=args.out)
    start = time.perf_counter()
    checks = _run(args.suite, cfg, args.d_list)
    ok = all(c.passed for c in checks)
    failed = sum(not c.passed for c in checks)
    if args.format == "json":
        emit(args, {"suite": args.suite, "passed": ok, "checks_total": len(checks),
                    "checks_failed": failed, "checks": [c.as_dict() for c in checks]})
    else:
        emit(args, [c.as_dict() for c in checks])
    print(f"{args.suite}: {len(checks) - failed}/{len(checks)} checks passed", file=sys.stderr)
    if args.timing:
        print(f"elapsed {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return 0 if ok else EXIT_FAIL


def _run(suite, cfg, d_list):
    if suite == "sampling" and d_list:
        cells = [(q, n, d) for q in cfg.q_set for n in cfg.n_set for d in d_list]
        return verify.suite_sampling(cfg, cells)
    if suite == "footprint":
        return verify.suite_footprint(cfg, q=cfg.q_set[0] if len(cfg.q_set) == 1 else 3,
                                      n_set=tuple(n for n in cfg.n_set if n <= 3) or (2, 3))
    return verify.run_suite(suite, cfg)


COMMANDS = {"params": cmd_params, "arrangements": cmd_arrangements, "groebner": cmd_groebner,
            "poly": cmd_poly, "lemma": cmd_lemma, "verify": cmd_verify}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.verb](args)
    except BudgetExceeded as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except IterationCapExceeded as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_CAP
    except (GrmError, ValueError, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
