"""``normtrace`` command line.

Field elements are printed as integers: ``c_0 + c_1 p + ... + c_{m-1} p^{m-1}``
encodes ``c_0 + c_1 t + ... + c_{m-1} t^{m-1}`` modulo the field's primitive
polynomial.  Exit status is 0 on success, 1 when an internal verification
fails and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from statistics import fmean

import numpy as np

from normtrace import catalog, ffla
from normtrace.code import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    NoSquareRootError,
    VerificationError,
    build_code,
    classify_duality,
    distance_bruteforce,
    distance_formula,
    dual_code,
    hull,
    scaling_vectors,
    singleton_gap,
    sqrt_in_field,
    witness_min_weight,
)
from normtrace.curve import eval_vector
from normtrace.monset import complement
from normtrace.repair import (
    IneligibleCodeError,
    bandwidth_bound,
    make_repair_context,
    naive_bandwidth,
    repair,
)
from normtrace.reproduce import MATRIX_LIMIT, run_all
from normtrace.specfile import SpecError, load_spec, parse_spec

PRNG_NAME = "MT19937 (Python random.Random(seed)); message symbol i = rng.randrange(q^r)"

EXIT_OK, EXIT_VERIFY, EXIT_INPUT = 0, 1, 2


class CommandFailed(Exception):
    """A verification inside a command failed; the report is still printed."""

    def __init__(self, report: dict, text: list[str]):
        super().__init__(report.get("error", "verification failed"))
        self.report, self.text = report, text


def _load(args):
    if args.inline is not None:
        spec = parse_spec(args.inline.replace(";", "\n"))
    elif args.spec is None:
        raise SpecError("give a spec file or --inline TEXT")
    elif args.spec == "-":
        spec = parse_spec(sys.stdin.read())
    else:
        try:
            spec = load_spec(args.spec)
        except OSError as exc:
            raise SpecError(f"cannot read {args.spec}: {exc.strerror}") from None
    curve = spec.curve()
    return spec, curve, spec.monomials(curve)


def _pairs(M) -> list[list[int]]:
    return [[a, b] for a, b in M]


def _fmt_pairs(M) -> str:
    return " ".join(f"({a},{b})" for a, b in M) or "(none)"


def _ints(v) -> list[int]:
    return [int(x) for x in v]


def _header(curve) -> dict:
    return {"q": curve.q, "r": curve.r, "u": curve.u, "n": curve.n}


def _matrix_ok(curve) -> bool:
    return curve.n <= MATRIX_LIMIT


def cmd_points(args):
    _, curve, _ = _load(args)
    pts = [{"index": P.index, "alpha": P.alpha, "beta": P.beta} for P in curve.points]
    text = [f"n={curve.n}"] + [f"{P.index} {P.alpha} {P.beta}" for P in curve.points]
    return {**_header(curve), "points": pts}, text


def cmd_params(args):
    _, curve, M = _load(args)
    d = distance_formula(curve, M)
    report = {**_header(curve), "k": len(M), "d": d, "gap": singleton_gap(curve, M),
              "matrix_checks": "done" if _matrix_ok(curve) else "skipped", "brute": None, "witness": None}
    text = [f"n={curve.n} k={len(M)} d={d} gap={report['gap']}"]
    code = None
    if _matrix_ok(curve):
        code = build_code(curve, M)
    else:
        text.append("matrix checks skipped (n > %d)" % MATRIX_LIMIT)
    if args.witness:
        f = witness_min_weight(curve, M)
        word = eval_vector(curve, f)
        weight = int(np.count_nonzero(word))
        report["witness"] = {"weight": weight, "polynomial": repr(f), "codeword": _ints(word)}
        text.append(f"witness weight={weight} {f!r}")
        text.append("codeword: " + " ".join(map(str, word)))
        if weight != d:
            report["error"] = f"witness weight {weight} != d = {d}"
            raise CommandFailed(report, text)
    if args.brute:
        if code is None:
            raise BudgetExceeded(f"n = {curve.n} exceeds the matrix limit of {MATRIX_LIMIT}")
        db = distance_bruteforce(code, args.budget)
        report["brute"] = {"d": db, "match": db == d}
        text.append(f"brute d={db} {'match' if db == d else 'MISMATCH'}")
        if db != d:
            report["error"] = f"brute-force distance {db} != formula {d}"
            raise CommandFailed(report, text)
    return report, text


def cmd_gen_matrix(args):
    _, curve, M = _load(args)
    report = {**_header(curve), "k": len(M), "monomials": _pairs(M), "matrix": None,
              "matrix_checks": "skipped"}
    text = ["monomials: " + _fmt_pairs(M)]
    if not _matrix_ok(curve):
        text.append("matrix skipped (n > %d)" % MATRIX_LIMIT)
        return report, text
    G = build_code(curve, M).G
    report["matrix"] = G.tolist()
    report["matrix_checks"] = "done"
    text += [" ".join(map(str, row)) for row in G]
    return report, text


def cmd_dual(args):
    _, curve, M = _load(args)
    Mc = complement(M, curve)
    sv = scaling_vectors(curve)
    report = {**_header(curve), "k": len(M), "complement": _pairs(Mc), "k_dual": len(Mc),
              "beta": _ints(sv.beta), "verified": "skipped"}
    text = [f"complement ({len(Mc)} monomials): {_fmt_pairs(Mc)}", "beta: " + " ".join(map(str, sv.beta))]
    if _matrix_ok(curve):
        code = build_code(curve, M)
        dual_code(code)  # raises VerificationError on failure
        K = ffla.kernel_basis(curve.field, code.G)
        other = build_code(curve, Mc)
        if not ffla.row_space_equal(curve.field, K, ffla.scale_cols(curve.field, other.G, sv.beta)):
            report["verified"] = False
            report["error"] = "kernel of G differs from beta * ev(complement)"
            raise CommandFailed(report, text)
        report["verified"] = True
        text.append("orthogonality verified")
    else:
        text.append("orthogonality check skipped (n > %d)" % MATRIX_LIMIT)
    return report, text


def cmd_hull(args):
    _, curve, M = _load(args)
    root = sqrt_in_field(curve.field, curve.u)
    if root is None:
        raise NoSquareRootError(f"u = {curve.u} is not a square in F_{curve.field.order}; no hull scaling exists")
    sv = scaling_vectors(curve)
    meet = M & complement(M, curve)
    report = {**_header(curve), "k": len(M), "sqrt_u": root, "lambda": _ints(sv.lam),
              "hull_dim": len(meet), "hull_monomials": _pairs(meet), "verified": "skipped"}
    text = [f"sqrt(u) = {root}", "lambda: " + " ".join(map(str, sv.lam)),
            f"hull dimension {len(meet)}: {_fmt_pairs(meet)}"]
    if _matrix_ok(curve):
        hull(build_code(curve, M))
        report["verified"] = True
        text.append("hull verified")
    else:
        text.append("hull check skipped (n > %d)" % MATRIX_LIMIT)
    return report, text


def cmd_classify(args):
    _, curve, M = _load(args)
    if _matrix_ok(curve):
        rep = classify_duality(build_code(curve, M))
        kind, hull_dim = rep.kind, rep.hull_dim
        confirmed = "no square root" if rep.confirmed is None else rep.confirmed
    else:
        Mc = complement(M, curve)
        meet = M & Mc
        kind = ("self-dual" if M == Mc else "self-orthogonal" if M <= Mc
                else "LCD-after-scaling" if not len(meet) else "none")
        hull_dim, confirmed = len(meet), "skipped"
    report = {**_header(curve), "k": len(M), "kind": kind, "hull_dim": hull_dim, "confirmed": confirmed}
    text = [f"{kind}, k = {len(M)}, hull dimension {hull_dim}, confirmed: {confirmed}"]
    if confirmed is False:
        report["error"] = "classification not confirmed by linear algebra"
        raise CommandFailed(report, text)
    return report, text


def cmd_repair_sim(args):
    _, curve, M = _load(args)
    if not _matrix_ok(curve):
        raise BudgetExceeded(f"n = {curve.n} exceeds the matrix limit of {MATRIX_LIMIT}")
    code = build_code(curve, M)
    ctx = make_repair_context(code)
    report = {**_header(curve), "k": code.k, "trials": args.trials, "seed": args.seed, "prng": PRNG_NAME,
              "bound": bandwidth_bound(curve), "baseline": naive_bandwidth(curve),
              "repairs": 0, "success_rate": None, "max_bandwidth": None, "mean_bandwidth": None}
    text = [f"n={curve.n} k={code.k} bound={report['bound']} baseline={report['baseline']} "
            f"trials={args.trials} seed={args.seed}"]
    if args.trials == 0:
        return report, text
    rng = random.Random(args.seed)
    Q = curve.field.order
    bandwidths, good = [], 0
    for _ in range(args.trials):
        word = code.encode([rng.randrange(Q) for _ in range(code.k)])
        for star in range(curve.n):
            t = repair(ctx, list(word), star)
            good += t.recovered == word[star]
            bandwidths.append(t.bandwidth)
    report.update(repairs=len(bandwidths), success_rate=good / len(bandwidths),
                  max_bandwidth=max(bandwidths), mean_bandwidth=fmean(bandwidths))
    text.append(f"success rate {100 * report['success_rate']:.1f}% over {len(bandwidths)} repairs")
    text.append(f"max bandwidth {report['max_bandwidth']} mean {report['mean_bandwidth']:.3f}")
    if good != len(bandwidths) or report["max_bandwidth"] > report["bound"]:
        report["error"] = "repair failed or exceeded the bandwidth bound"
        raise CommandFailed(report, text)
    return report, text


def cmd_table1(args):
    rows, text, bad = [], ["k  d  gap" + ("  brute" if args.brute else "")], False
    for ex in catalog.LENGTH15_ROWS:
        curve = ex.spec.curve()
        M = ex.spec.monomials(curve)
        d = distance_formula(curve, M)
        row = {"k": len(M), "d": d, "gap": singleton_gap(curve, M), "expected_d": ex.d, "brute": None}
        bad |= d != ex.d
        line = f"{len(M):<2} {d:<2} {row['gap']}"
        if args.brute:
            try:
                row["brute"] = distance_bruteforce(build_code(curve, M), args.budget)
                bad |= row["brute"] != d
                line += f"    {row['brute']}"
            except BudgetExceeded:
                line += "    over budget"
        rows.append(row)
        text.append(line)
    report = {"rows": rows}
    if bad:
        report["error"] = "a row disagrees with the published table"
        raise CommandFailed(report, text)
    return report, text


def cmd_verify_paper(args):
    claims, text = [], []
    for o in run_all():
        claims.append({"group": o.group, "name": o.name, "ok": o.ok, "detail": o.detail,
                       "seconds": round(o.seconds, 4)})
        text.append(o.line())
        if not args.json:
            print(o.line(), flush=True)
    n_ok = sum(c["ok"] for c in claims)
    summary = f"{n_ok}/{len(claims)} claims pass"
    report = {"claims": claims, "passed": n_ok, "total": len(claims)}
    if not args.json:
        text = []  # already streamed
    text.append(summary)
    if n_ok != len(claims):
        report["error"] = summary
        raise CommandFailed(report, text)
    return report, text


COMMANDS = {
    "points": (cmd_points, "list the curve's rational points"),
    "params": (cmd_params, "length, dimension, distance and Singleton gap"),
    "gen-matrix": (cmd_gen_matrix, "print the generator matrix"),
    "dual": (cmd_dual, "complement set and dual scaling vector"),
    "hull": (cmd_hull, "hull scaling vector and hull dimension"),
    "classify": (cmd_classify, "self-dual / self-orthogonal / LCD classification"),
    "repair-sim": (cmd_repair_sim, "simulate single-erasure repair on random codewords"),
    "table1": (cmd_table1, "the length-15 table over F_9"),
    "verify-paper": (cmd_verify_paper, "rerun every published example"),
}
SPEC_COMMANDS = {"points", "params", "gen-matrix", "dual", "hull", "classify", "repair-sim"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object on stdout")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max codewords for --brute (default 1e8)")
    parser = argparse.ArgumentParser(prog="normtrace", description="Decreasing norm-trace codes.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if name in SPEC_COMMANDS:
            p.add_argument("spec", nargs="?", help="spec file, or - for stdin")
            p.add_argument("--inline", metavar="TEXT", help="spec text with ';' as line separator")
        if name in ("params", "table1"):
            p.add_argument("--brute", action="store_true", help="also compute the distance by enumeration")
        if name == "params":
            p.add_argument("--witness", action="store_true", help="emit a minimum-weight codeword")
        if name == "repair-sim":
            p.add_argument("--trials", type=int, default=10, help="random codewords (default 10)")
            p.add_argument("--seed", type=int, default=0, help="PRNG seed (default 0)")
    return parser


def _emit(args, command: str, ok: bool, report: dict, text: list[str]):
    if args.json:
        print(json.dumps({"command": command, "ok": ok, **report}, sort_keys=True))
    else:
        for line in text:
            print(line)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "trials", 0) < 0:
        parser.error("--trials must be >= 0")
    fn = COMMANDS[args.command][0]
    try:
        report, text = fn(args)
    except CommandFailed as exc:
        _emit(args, args.command, False, exc.report, exc.text)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except VerificationError as exc:
        _emit(args, args.command, False, {"error": str(exc)}, [])
        print(f"error: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (SpecError, IneligibleCodeError, NoSquareRootError, BudgetExceeded, ValueError) as exc:
        _emit(args, args.command, False, {"error": str(exc)}, [])
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(args, args.command, True, report, text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
