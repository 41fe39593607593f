"""Command-line interface: ``topk-lambda {topk,enum,gen,verify,stability,bench}``."""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional, TextIO

from .barcode import Barcode, BarcodeError, format_barcode, format_real, parse_barcode
from .bench import run_bench
from .decomposition import RefusalError, brute_force_lambda, enumerate_decomposition, total_count
from .engine import TopKResult, check_identities, topk_colex, topk_enum, topk_grouped
from .stability import check_topk_stability, jitter, tightness_pair
from .sweep import run_sweep
from .synth import GenConfig, generate, random_small_barcode

ENGINES = {"grouped": topk_grouped, "colex": topk_colex, "enum": topk_enum}


def _read_barcode(path: str, t_max: Optional[float]) -> Barcode:
    if path == "-":
        return parse_barcode(sys.stdin, t_max=t_max)
    with open(path) as fh:
        return parse_barcode(fh, t_max=t_max)


def _result_dict(res: TopKResult, snap, mode: str) -> dict:
    out = {
        "i": res.i,
        "K": res.K,
        "mode": mode,
        "lengths": res.lengths,
        "emissions": [
            {"length": e.length, "anchor": e.anchor, "rank": e.rank, "copies": e.copies} for e in res.emissions
        ],
        "intervals": [list(p) for p in res.intervals(snap)],
    }
    if res.identities is not None:
        out["identities"] = [list(t) for t in res.identities]
    return out


def cmd_topk(args, out: TextIO) -> int:
    bc = _read_barcode(args.input, args.tmax)
    snap = run_sweep(bc)
    res = ENGINES[args.mode](snap, args.i, args.k, identities=args.identities or args.json)
    if args.json:
        json.dump(_result_dict(res, snap, args.mode), out)
        out.write("\n")
        return 0
    intervals = res.intervals(snap)
    for p, length in enumerate(res.lengths):
        fields = [format_real(length)]
        if args.intervals:
            fields += [format_real(intervals[p][0]), format_real(intervals[p][1])]
        if args.identities:
            fields += [str(k) for k in res.identities[p]]
        out.write(" ".join(fields) + "\n")
    return 0


def cmd_enum(args, out: TextIO) -> int:
    bc = _read_barcode(args.input, args.tmax)
    groups = enumerate_decomposition(run_sweep(bc), args.i)
    if args.json:
        json.dump({"i": args.i, "k_all": total_count(groups), "groups": [g._asdict() for g in groups]}, out)
        out.write("\n")
        return 0
    out.write("# length anchor rank multiplicity\n")
    for g in groups:
        out.write(f"{format_real(g.length)} {g.anchor} {g.rank} {g.multiplicity}\n")
    out.write(f"# total {total_count(groups)}\n")
    return 0


def cmd_gen(args, out: TextIO) -> int:
    bc = generate(GenConfig(args.m, args.lmean, args.seed))
    text = format_barcode(bc)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def verify_barcode(bc: Barcode, i: int) -> List[str]:
    """Compare every engine with brute force; returns a list of failures."""
    brute = sorted((iv.length for iv in brute_force_lambda(bc, i)), reverse=True)
    total = len(brute)
    snap = run_sweep(bc)
    failures = []
    for K in sorted({0, 1, 2, total // 2, total, total + 2}):
        want = brute[:K]
        for mode, engine in ENGINES.items():
            res = engine(snap, i, K, identities=True)
            got = res.lengths if mode != "colex" else sorted(res.lengths, reverse=True)
            if got != want:
                failures.append(f"{mode} K={K}: lengths differ from brute force")
            elif not check_identities(snap, res):
                failures.append(f"{mode} K={K}: identity tuples do not reproduce lengths")
    return failures


def cmd_verify(args, out: TextIO) -> int:
    if args.input is not None:
        cases = [("input", _read_barcode(args.input, args.tmax))]
    else:
        rng = random.Random(args.seed)
        cases = [(f"trial {t}", random_small_barcode(rng, args.m)) for t in range(args.random)]
    passed = 0
    for name, bc in cases:
        try:
            failures = verify_barcode(bc, args.i)
        except RefusalError as exc:
            print(f"refused: {exc}", file=sys.stderr)
            return 2
        if failures:
            out.write(f"{name}: FAIL (M={bc.M}) " + "; ".join(failures) + "\n")
        else:
            passed += 1
            out.write(f"{name}: ok (M={bc.M})\n")
    out.write(f"{passed}/{len(cases)} passed\n")
    return 0 if passed == len(cases) else 1


def cmd_stability(args, out: TextIO) -> int:
    rng = random.Random(args.seed)
    ok = True
    X, Y = tightness_pair()
    chk = check_topk_stability(X, Y, 2, 1)
    tight = chk.holds and abs(chk.lhs - chk.rhs) <= 1e-12
    ok &= tight
    out.write(f"tightness: lhs={format_real(chk.lhs)} rhs={format_real(chk.rhs)} "
              f"{'ok (equality)' if tight else 'FAIL'}\n")
    for t in range(args.trials):
        try:
            X = random_small_barcode(rng, args.m, min_m=1)
            Y = jitter(X, args.epsilon, rng)
            chk = check_topk_stability(X, Y, args.i, args.k)
        except RefusalError as exc:
            print(f"refused: {exc}", file=sys.stderr)
            return 2
        ok &= chk.holds
        out.write(f"trial {t}: lhs={chk.lhs!r} rhs={chk.rhs!r} {'ok' if chk.holds else 'FAIL'}\n")
    out.write("all hold\n" if ok else "VIOLATION\n")
    return 0 if ok else 1


def cmd_bench(args, out: TextIO) -> int:
    rep = run_bench(args.m, args.lmean, args.i, args.k, args.seed, args.reps)
    if args.json:
        out.write(rep.to_json() + "\n")
    else:
        out.write(f"M={rep.M} l_mean={rep.l_mean} i={rep.i} K={rep.K} seed={rep.seed}\n")
        out.write(f"K_all      {rep.k_all}\n")
        out.write(f"baseline   {rep.t_baseline:.4f} s\n")
        out.write(f"best-first {rep.t_ours:.4f} s\n")
        out.write(f"speedup    {rep.speedup:.2f}x\n")
        out.write(f"matched    {rep.matched}\n")
    return 0 if rep.matched else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="topk-lambda", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("topk", help="K longest intervals of the i-th exterior power")
    p.add_argument("input", help="barcode file, or - for stdin")
    p.add_argument("--i", type=int, default=2)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--mode", choices=sorted(ENGINES), default="grouped")
    p.add_argument("--intervals", action="store_true", help="print birth and death after each length")
    p.add_argument("--identities", action="store_true", help="print the i bar indices of each interval")
    p.add_argument("--tmax", type=float, default=None, help="truncation horizon for infinite bars")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_topk)

    p = sub.add_parser("enum", help="list every rank group of the decomposition")
    p.add_argument("input")
    p.add_argument("--i", type=int, default=2)
    p.add_argument("--tmax", type=float, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("gen", help="write a synthetic barcode")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lmean", type=float, default=0.05)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check all engines against brute force")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--random", type=int, default=100, help="number of random trials when no input is given")
    p.add_argument("--m", type=int, default=20, help="maximum bars per random trial")
    p.add_argument("--i", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tmax", type=float, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stability", help="Top-K stability under bottleneck perturbation")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--m", type=int, default=20)
    p.add_argument("--i", type=int, default=2)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--epsilon", type=float, default=0.05)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_stability)

    p = sub.add_parser("bench", help="best-first vs full enumeration timing")
    p.add_argument("--m", type=int, default=3000)
    p.add_argument("--lmean", type=float, default=0.05)
    p.add_argument("--i", type=int, default=2)
    p.add_argument("--k", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    if getattr(args, "i", 2) < 2:
        print("error: --i must be >= 2", file=sys.stderr)
        return 2
    if getattr(args, "k", 0) < 0:
        print("error: --k must be >= 0", file=sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except (BarcodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
