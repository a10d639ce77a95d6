"""Command-line front end.

Exit codes: 0 when everything checked out, 1 when a verification failed,
2 for usage errors (bad flags, invalid shapes, out-of-range q).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from . import dot
from .boolmaps import BooleanMap, positive_count
from .census import (
    NAIVE_MAX,
    RealMultiset,
    classify_signature,
    count_nonneg_subsets_mitm,
    count_nonneg_subsets_naive,
)
from .lattice import Shape, ShapeError, enumerate_strings, lattice
from .regions import check_lemma_properties
from .synthesis import decompose, rank_levels, synthesize_basis, synthesize_map, verify_synthesis
from .weights import alpha, eta, gamma, maximizer, minimizer, sample_random

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _shape(args, negatives=False) -> Shape:
    try:
        shape = Shape(args.n, args.r)
        if negatives:
            shape.require_negatives()
        shape.check_enumerable()
    except ShapeError as exc:
        raise UsageError(str(exc)) from None
    return shape


def _check_q(shape: Shape, q: int) -> None:
    lo, hi = gamma(shape), eta(shape)
    if not lo <= q <= hi:
        raise UsageError(f"q={q} outside the valid interval [{lo}, {hi}] for {shape}")


def cmd_gen(args, out) -> int:
    shape = _shape(args)
    if args.format == "text":
        for w in enumerate_strings(shape):
            out.append(str(w))
        return EXIT_OK
    lat = lattice(shape)
    if args.format == "json":
        lo, hi = lat.edges
        out.append(json.dumps({
            "n": shape.n, "r": shape.r,
            "elements": [str(w) for w in lat],
            "edges": [[str(lat.element(a)), str(lat.element(b))] for a, b in zip(lo, hi)],
        }, indent=1))
        return EXIT_OK

    colors = None
    if args.color_by == "regions":
        try:
            shape.require_negatives()
        except ShapeError as exc:
            raise UsageError(f"region colors: {exc}") from None
        colors = dot.region_colors(shape)
    elif args.color_by == "map":
        if not args.map_file:
            raise UsageError("--color-by map needs --map-file")
        try:
            with open(args.map_file) as fh:
                doc = json.load(fh)
            # accept the document written by `synth --emit` as well
            if isinstance(doc, dict) and "map" in doc:
                doc = doc["map"]
            A = BooleanMap.from_json(doc)
        except (OSError, ValueError) as exc:
            raise UsageError(f"bad map file {args.map_file}: {exc}") from None
        if A.shape != shape:
            raise UsageError(f"map file is for {A.shape}, not {shape}")
        colors = dot.map_colors(A)
    out.append(dot.to_dot(shape, colors).rstrip("\n"))
    return EXIT_OK


def cmd_extremes(args, out) -> int:
    shape = _shape(args, negatives=True)
    wf, bound = (minimizer(shape), gamma(shape)) if args.which == "min" else (maximizer(shape), eta(shape))
    a = alpha(wf)
    out.append(f"f = {wf}")
    out.append(f"alpha = {a}")
    out.append(f"bound = {bound}")
    return EXIT_OK if a == bound else EXIT_FAIL


def cmd_synth(args, out) -> int:
    shape = _shape(args, negatives=True)
    _check_q(shape, args.q)
    A = synthesize_map(shape, args.q)
    doc = {"map": A.to_json()}
    out.append(f"count = {positive_count(A)}")
    basis = synthesize_basis(shape, args.q) if args.with_basis else None
    if args.with_basis:
        if basis is None:
            out.append("case = extremal (no basis)")
        else:
            dec = decompose(shape, args.q)
            doc["basis"] = basis.to_json()
            doc["decomposition"] = dec.to_json()
            out.append(f"case = {dec.case}")
            out.append("Y+ = {" + ", ".join(doc["basis"]["y_plus"]) + "}")
            out.append("Y- = {" + ", ".join(doc["basis"]["y_minus"]) + "}")
    status = EXIT_OK
    if args.verify:
        rep = verify_synthesis(shape, args.q)
        doc["verify"] = rep.to_json()
        checks = {"count": rep.count == args.q, "bm1": rep.axioms.bm1, "bm2": rep.axioms.bm2,
                  "bm3": rep.axioms.bm3, **rep.basis_checks}
        for name, ok in checks.items():
            out.append(f"{name}: {'pass' if ok else 'FAIL'}")
        if not rep.ok:
            status = EXIT_FAIL
    if args.emit:
        with open(args.emit, "w") as fh:
            json.dump(doc, fh, indent=1, sort_keys=True)
    return status


def _sweep_one(nrq):
    n, r, q = nrq
    return q, verify_synthesis(Shape(n, r), q).ok


def _sample_one(nrs):
    n, r, seed = nrs
    return seed, alpha(sample_random(Shape(n, r), seed))


def _pool_map(fn, items, jobs):
    if jobs <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=16))


def cmd_verify(args, out) -> int:
    shape = _shape(args)
    summary = {"n": shape.n, "r": shape.r}
    ok = True
    lo, hi = (gamma(shape), eta(shape)) if shape.r < shape.n else (gamma(shape), (1 << shape.n) - 1)

    if shape.r < shape.n:
        lemma = check_lemma_properties(shape)
        summary["lemma"] = lemma.results
        ok &= lemma.ok
        ext = {"min": alpha(minimizer(shape)), "max": alpha(maximizer(shape))}
        summary["extremes"] = {"min": ext["min"], "max": ext["max"], "gamma": lo, "eta": hi}
        ok &= ext["min"] == lo and ext["max"] == hi
        if args.q_sweep:
            res = sorted(_pool_map(_sweep_one, [(shape.n, shape.r, q) for q in range(lo, hi + 1)], args.jobs))
            failed = [q for q, good in res if not good]
            summary["q_sweep"] = {"checked": len(res), "passed": len(res) - len(failed), "failed": failed}
            ok &= not failed

    if args.samples:
        seeds = [args.seed * 1_000_003 + i for i in range(args.samples)]
        res = sorted(_pool_map(_sample_one, [(shape.n, shape.r, s) for s in seeds], args.jobs))
        bad = [s for s, a in res if not lo <= a <= hi]
        summary["samples"] = {"count": len(res), "within": len(res) - len(bad), "range": [lo, hi],
                              "seed": args.seed}
        ok &= not bad
    summary["ok"] = bool(ok)

    if args.format == "json":
        out.append(json.dumps(summary, indent=1, sort_keys=True))
    else:
        if "lemma" in summary:
            out.append("lemma: " + " ".join(f"{k}={'pass' if v else 'FAIL'}" for k, v in summary["lemma"].items()))
            e = summary["extremes"]
            out.append(f"extremes: min alpha={e['min']} (gamma={lo}), max alpha={e['max']} (eta={hi})")
        if "q_sweep" in summary:
            s = summary["q_sweep"]
            out.append(f"q-sweep: {s['passed']}/{s['checked']} pass")
        if "samples" in summary:
            s = summary["samples"]
            out.append(f"samples: {s['within']}/{s['count']} within [{lo}, {hi}]")
        out.append("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_census(args, out) -> int:
    try:
        m = RealMultiset.parse(args.values)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sig = classify_signature(m)
    out.append(f"n = {sig['n']}, r = {sig['r']}, in_W = {str(sig['in_W']).lower()}")
    mitm = count_nonneg_subsets_mitm(m)
    status = EXIT_OK
    if m.n <= NAIVE_MAX:
        naive = count_nonneg_subsets_naive(m)
        out.append(f"count = {mitm} (naive {naive}, mitm {mitm})")
        if naive != mitm:
            out.append("naive and meet-in-the-middle counts disagree")
            status = EXIT_FAIL
    else:
        out.append(f"count = {mitm} (mitm)")
    if sig["in_W"] and 0 < m.r < m.n:
        shape = Shape(m.n, m.r)
        lo, hi = gamma(shape), eta(shape)
        where = "minimum" if mitm == lo else "maximum" if mitm == hi else (
            "interior" if lo < mitm < hi else "OUTSIDE")
        out.append(f"range = [{lo}, {hi}], position = {where}")
        if args.expect_range and where == "OUTSIDE":
            status = EXIT_FAIL
    return status


def cmd_rank_levels(args, out) -> int:
    shape = _shape(args, negatives=True)
    try:
        dec = rank_levels(shape)
    except ShapeError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out.append(json.dumps({"R": dec.R, "betas": dec.betas,
                               "levels": [[str(w) for w in lv] for lv in dec.levels]}, indent=1))
    else:
        out.append(f"R = {dec.R}")
        out.append("betas = " + " ".join(map(str, dec.betas)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="signlattice", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def shape_args(sp):
        sp.add_argument("n", type=int)
        sp.add_argument("r", type=int)
        sp.add_argument("--out", help="write output to FILE instead of stdout")

    g = sub.add_parser("gen", help="enumerate S(n,r), optionally as a Graphviz Hasse diagram")
    shape_args(g)
    g.add_argument("--format", choices=("text", "json", "dot"), default="text")
    g.add_argument("--color-by", choices=("regions", "map"))
    g.add_argument("--map-file")
    g.set_defaults(func=cmd_gen)

    e = sub.add_parser("extremes", help="extremal weight functions and their counts")
    shape_args(e)
    e.add_argument("which", choices=("min", "max"))
    e.set_defaults(func=cmd_extremes)

    s = sub.add_parser("synth", help="boolean map with exactly q positive values")
    shape_args(s)
    s.add_argument("q", type=int)
    s.add_argument("--with-basis", action="store_true")
    s.add_argument("--verify", action="store_true")
    s.add_argument("--emit", metavar="FILE", help="write map/basis JSON to FILE")
    s.set_defaults(func=cmd_synth)

    v = sub.add_parser("verify", help="region identities, extremal counts, q-sweep, random bounds")
    shape_args(v)
    v.add_argument("--q-sweep", action="store_true")
    v.add_argument("--samples", type=int, default=0)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("census", help="count non-negative subset sums of a value list")
    c.add_argument("values", help='comma-separated rationals, e.g. "1,1,0.9,-0.8,-2.1"')
    c.add_argument("--expect-range", action="store_true",
                   help="exit 1 when the count falls outside [gamma, eta]")
    c.add_argument("--out")
    c.set_defaults(func=cmd_census)

    k = sub.add_parser("rank-levels", help="rank levels of S1+- (R and level sizes)")
    shape_args(k)
    k.add_argument("--format", choices=("text", "json"), default="text")
    k.set_defaults(func=cmd_rank_levels)
    return p


_VALUES_RE = re.compile(r"^-[0-9./,\s-]+$")


def _protect_values(argv: list[str]) -> list[str]:
    # a value list starting with a minus sign would otherwise parse as a flag
    if "census" in argv:
        i = argv.index("census") + 1
        if i < len(argv) and _VALUES_RE.match(argv[i]):
            argv = argv[:i] + argv[i + 1:] + ["--", argv[i]]
    return argv


def main(argv=None) -> int:
    argv = _protect_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out: list[str] = []
    try:
        status = args.func(args, out)
    except UsageError as exc:
        print(f"signlattice {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = "\n".join(out) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
