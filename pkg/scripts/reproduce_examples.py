"""Rebuild the worked example codes and print their parameters.

    python3 scripts/reproduce_examples.py [--json]
"""

import argparse
import json
import time

from lrcpack import known
from lrcpack.codes import min_distance, rs_systematic, update_efficiency
from lrcpack.constructions import construction_a, construction_b
from lrcpack.designs import dm_build, dm_to_resolvable
from lrcpack.gf import field_new
from lrcpack.locality import bound_c, bound_i, classify_optimal, extract_packing, verify_locality


def describe(name, code, r, delta, d=None, method="exact"):
    t0 = time.perf_counter()
    if d is None:
        d = min_distance(code)
    secs = time.perf_counter() - t0
    rep = verify_locality(code, r, delta)
    row = {
        "example": name,
        "n": code.n,
        "k": code.k,
        "r": r,
        "delta": delta,
        "d": d,
        "d_method": method,
        "locality": rep.satisfied,
        "bound_c": bound_c(code.n, code.k, r, delta),
        "bound_i": bound_i(code.n, code.k, r, delta),
        "t": update_efficiency(code),
        "seconds": round(secs, 6),
    }
    if rep.satisfied:
        v = classify_optimal(code, r, delta, d, rep)
        row.update(optimal_c=v.optimal_c, update_optimal=v.update_optimal, n1=rep.n1)
        if code.k >= 2:
            row["deletions"] = len(extract_packing(code, r, delta, rep).deletions)
    return row


def rows():
    yield describe("binary [16,8] from printed matrix", known.code_16_8(), 3, 4)
    yield describe("binary [14,8] from printed matrix", known.code_14_8(), 3, 3)
    res = construction_a(known.cyclic_8_3_packing())
    yield describe("construction A, cyclic 3-regular packing", res.code, res.r, res.delta)
    res = construction_b(rs_systematic(field_new(2, 8), 16, 8), known.resolvable_8(2))
    yield describe("construction B, RS[16,8] over GF(256), two classes", res.code, res.r, res.delta,
                   res.d, "certified")
    res = construction_b(rs_systematic(field_new(2, 3), 8, 4), dm_to_resolvable(dm_build(2, 2, 2)))
    yield describe("construction B, RS[8,4] over GF(8), DM(2,2,2)", res.code, res.r, res.delta)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="one JSON object per line")
    args = ap.parse_args()
    cols = ["n", "k", "r", "delta", "d", "bound_c", "bound_i", "t", "optimal_c", "update_optimal"]
    if not args.json:
        print(f"{'example':52s} " + " ".join(f"{c:>6s}" for c in cols))
    for row in rows():
        if args.json:
            print(json.dumps(row))
        else:
            print(f"{row['example']:52s} " + " ".join(f"{str(row.get(c, '-')):>6s}" for c in cols))


if __name__ == "__main__":
    main()
