"""Command-line front end.

Every subcommand prints one JSON document on stdout.  Exit status is 0 when
all requested checks pass, 1 on a validation failure, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from pathlib import Path

from . import codes, constructions, designs, locality
from .codes import DEFAULT_DISTANCE_BUDGET, SystematicCode
from .files import code_document, dumps, load_code, read_json, write_json
from .gf import field_new


class Failure(Exception):
    """Validation failure reported with exit status 1."""


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _distance_budget(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get("LRC_DISTANCE_BUDGET")
    return int(env) if env else DEFAULT_DISTANCE_BUDGET


# -- subcommands --------------------------------------------------------------

def cmd_build_dm(args) -> dict:
    try:
        D = designs.dm_build(args.k, args.r, args.u)
    except designs.DifferenceMatrixError as exc:
        raise Failure(str(exc))
    out = {"ok": True, "difference_matrix": D.to_dict()}
    if args.out:
        write_json(args.out, D.to_dict())
        out["out"] = str(args.out)
    if args.resolvable is not None:
        rp = designs.dm_to_resolvable(D)
        out["resolvable"] = rp.to_dict()
        target = args.resolvable
        if target == "" and args.out:
            target = str(Path(args.out).with_suffix(".resolvable.json"))
        if target:
            write_json(target, rp.to_dict())
            out["resolvable_out"] = target
    return out


def cmd_rs_gen(args) -> dict:
    F = field_new(args.p, args.m, args.modulus)
    code = codes.rs_systematic(F, args.n, args.k)
    doc = code_document(code, {"construction": "rs", "n": args.n, "k": args.k, "d": args.n - args.k + 1})
    if args.out:
        write_json(args.out, doc)
    return {"ok": True, "code": doc}


def _summary(code: SystematicCode, r: int, delta: int, d: int, optimal_c: bool, report) -> dict:
    return {
        "n": code.n,
        "k": code.k,
        "r": r,
        "delta": delta,
        "d": d,
        "n1": report.n1,
        "n2": report.n2,
        "bound_c": locality.bound_c(code.n, code.k, r, delta),
        "bound_i": locality.bound_i(code.n, code.k, r, delta),
        "optimal_c": optimal_c,
        "update_efficiency": codes.update_efficiency(code),
        "update_optimal": codes.update_efficiency(code) == d,
    }


def cmd_construct(args) -> dict:
    if args.flavor == "a":
        if not args.packing:
            raise argparse.ArgumentTypeError("construct a needs --packing")
        pk = designs.Packing.from_dict(read_json(args.packing))
        res = constructions.construction_a(pk)
        summary = _summary(res.code, res.r, res.delta, res.delta, res.optimal_c, res.report)
        summary["d_method"] = "structural"
    else:
        if not args.resolvable:
            raise argparse.ArgumentTypeError("construct b needs --resolvable")
        rp = designs.ResolvablePacking.from_dict(read_json(args.resolvable))
        if args.mds:
            mds, _ = load_code(args.mds)
        elif args.rs_n and args.p:
            mds = codes.rs_systematic(field_new(args.p, args.m, args.modulus), args.rs_n, rp.k)
        else:
            raise argparse.ArgumentTypeError("construct b needs --mds FILE or --rs-n/--p/--m")
        res = constructions.construction_b(mds, rp, args.columns, effort=args.effort)
        summary = _summary(res.code, res.r, res.delta, res.d, res.optimal_c, res.report)
        summary["d_method"] = "certified"
        summary["mds_certificate"] = res.certificate.mds.level
    doc = code_document(res.code, res.provenance())
    if args.out:
        write_json(args.out, doc)
    return {"ok": True, "summary": summary, "out": str(args.out) if args.out else None}


def _distance(code: SystematicCode, provenance: dict | None, budget: int, effort: int) -> tuple[int | None, str]:
    try:
        return codes.min_distance(code, budget), "exact"
    except codes.DistanceBudgetExceeded:
        pass
    if provenance and provenance.get("construction") == "B" and "split_map" in provenance:
        cert = constructions.recertify_split(code, provenance, effort)
        if cert.ok:
            return cert.d, "certified"
    return None, "unknown"


def cmd_analyze(args) -> dict:
    code, provenance = load_code(args.code)
    report = locality.verify_locality(code, args.r, args.delta)
    if not report.satisfied:
        doc = report.to_dict()
        doc["ok"] = False
        doc["error"] = f"({args.r},{args.delta})_c locality unsatisfiable at symbol {report.failed_symbol}"
        return doc

    d, method = _distance(code, provenance, _distance_budget(args.exact_distance), args.effort)
    report.d = d
    report.distance_method = method
    report.update_efficiency = codes.update_efficiency(code)
    if code.k >= 2:
        ex = locality.extract_packing(code, args.r, args.delta, report)
        report.extra["extracted_packing"] = ex.packing.to_dict()
        report.extra["deletions"] = [{"column": c, "element": e} for c, e in ex.deletions]
    if d is not None:
        verdict = locality.classify_optimal(code, args.r, args.delta, d, report)
        report.optimal_c = verdict.optimal_c
        report.optimal_i = verdict.optimal_i
        report.update_optimal = verdict.update_optimal
        report.extra["verdict"] = verdict.to_dict()
    report.extra["theorem3_budget"] = locality.theorem3_budget(code.k, args.r, args.delta)
    doc = report.to_dict()
    doc["ok"] = True
    if args.out:
        write_json(args.out, doc)
    return doc


def cmd_repair(args) -> dict:
    code, _ = load_code(args.code)
    report = locality.LocalityReport.from_dict(read_json(args.report))
    if args.message:
        doc = read_json(args.message)
        message = doc["message"] if isinstance(doc, dict) else doc
    else:
        rng = random.Random(args.seed)
        message = [rng.randrange(code.field.q) for _ in range(code.k)]
    original = codes.encode(code, message)
    damaged = codes.erase(original, args.erase)
    try:
        plan = codes.plan_repair(code, damaged.erased, report)
        recovered = codes.erase_and_repair(code, damaged, report)
    except codes.RepairError as exc:
        raise Failure(str(exc))
    ok = recovered == original
    result = {
        "ok": ok,
        "message": list(message),
        "erased": list(damaged.erased),
        "groups": {str(i): j for i, j in plan.items()},
        "codeword": list(original.symbols),
        "recovered": list(recovered.symbols),
    }
    if not ok:  # pragma: no cover
        result["error"] = "recovered word differs from the original"
    return result


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lrcpack", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-dm", help="difference matrix over GF(k), optionally its resolvable packing")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--resolvable", nargs="?", const="", default=None, metavar="PATH",
                   help="also emit the derived resolvable packing (to PATH if given)")
    p.set_defaults(func=cmd_build_dm)

    p = sub.add_parser("rs-gen", help="systematic Reed-Solomon (MDS) code file")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--modulus", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_rs_gen)

    p = sub.add_parser("construct", help="build a locally repairable code from a packing")
    p.add_argument("flavor", choices=["a", "b"])
    p.add_argument("--packing", help="packing JSON (flavor a)")
    p.add_argument("--resolvable", help="resolvable packing JSON (flavor b)")
    p.add_argument("--mds", help="systematic MDS code JSON (flavor b)")
    p.add_argument("--rs-n", type=int, help="build an RS code of this length instead of --mds")
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--modulus", type=int)
    p.add_argument("--columns", type=_int_list, help="MDS check columns to split, one per class")
    p.add_argument("--effort", type=int, default=20000, help="MDS minor-check budget")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="locality report, bounds and optimality of a code file")
    p.add_argument("code")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--exact-distance", type=int, metavar="BUDGET",
                   help="enumeration cap (default $LRC_DISTANCE_BUDGET or 2^24)")
    p.add_argument("--effort", type=int, default=20000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("repair", help="encode, erase, locally repair and compare")
    p.add_argument("code")
    p.add_argument("report")
    p.add_argument("--erase", type=_int_list, default=[])
    group = p.add_mutually_exclusive_group()
    group.add_argument("--message")
    group.add_argument("--seed", "--random", dest="seed", type=int, default=0, help="message RNG seed")
    p.set_defaults(func=cmd_repair)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.print_usage(sys.stderr)
        print(f"lrcpack: error: {exc}", file=sys.stderr)
        return 2
    except (Failure, ValueError, KeyError, OSError) as exc:
        print(f"lrcpack: {exc}", file=sys.stderr)
        sys.stdout.write(dumps({"ok": False, "error": str(exc)}))
        return 1
    sys.stdout.write(dumps(result))
    return 0 if result.get("ok") else 1


if __name__ == "__main__":
    sys.exit(main())
