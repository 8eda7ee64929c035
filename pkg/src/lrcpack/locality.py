"""(r, delta)_c locality: verification, bounds and packing extraction.

A systematic code has information (r, delta)_c locality when each
information symbol i lies in delta - 1 check columns of weight <= r whose
supports pairwise meet only in {i}.  Each such column plus its check symbol
is a repair group.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from itertools import combinations

from .codes import SystematicCode, update_efficiency
from .designs import Packing


class LocalityError(ValueError):
    pass


def _check_params(n: int, k: int, r: int, delta: int) -> None:
    if not 1 <= r <= k < n:
        raise LocalityError(f"need 1 <= r <= k < n, got n={n}, k={k}, r={r}")
    if delta < 2:
        raise LocalityError(f"delta must be >= 2, got {delta}")


def bound_i(n: int, k: int, r: int, delta: int) -> int:
    """Singleton-type bound for (r, delta)_i locality."""
    _check_params(n, k, r, delta)
    return n - k + 1 - (math.ceil(k / r) - 1) * (delta - 1)


def bound_c(n: int, k: int, r: int, delta: int) -> int:
    """Distance bound for (r, delta)_c locality with one check per repair group."""
    _check_params(n, k, r, delta)
    return n - k - math.ceil(k * (delta - 1) / r) + delta


def n1_target(k: int, r: int, delta: int) -> int:
    return math.ceil(k * (delta - 1) / r)


def n1_conditions(k: int, r: int, delta: int) -> bool:
    """Whether an optimal code must have exactly ceil(k(delta-1)/r) partial checks."""
    kappa = k - r
    if delta >= 4:
        return True
    if delta == 3:
        return k >= 2 * r or (r / 3 <= kappa < r / 2) or (2 * r / 3 <= kappa < r)
    if delta == 2:
        return k >= 2 * r or (r / 2 <= kappa < r)
    return False


def theorem3_budget(k: int, r: int, delta: int) -> int:
    """Max number of elements with occurrence above delta - 1 in an optimal code."""
    return n1_target(k, r, delta) * r - k * (delta - 1)


@dataclass
class LocalityReport:
    """Witness for (r, delta)_c locality of a systematic code.

    ``repair_groups[i - 1]`` lists the 1-based check columns repairing
    information symbol i.  When ``satisfied`` is false, ``failed_symbol``
    names the first symbol without enough compatible columns and the groups
    found before it are kept.
    """

    n: int
    k: int
    r: int
    delta: int
    satisfied: bool
    repair_groups: list[list[int]]
    partial_indices: list[int]
    occurrences: list[int]
    bound_c: int
    bound_i: int
    failed_symbol: int | None = None
    d: int | None = None
    distance_method: str = "unknown"
    update_efficiency: int | None = None
    optimal_c: bool | None = None
    optimal_i: bool | None = None
    update_optimal: bool | None = None
    extra: dict = field(default_factory=dict)

    @property
    def n1(self) -> int:
        return len(self.partial_indices)

    @property
    def n2(self) -> int:
        return self.n - self.k - self.n1

    @property
    def Delta(self) -> int:
        return min(self.occurrences)

    def to_dict(self) -> dict:
        d = asdict(self)
        extra = d.pop("extra")
        d.update(n1=self.n1, n2=self.n2, Delta=self.Delta)
        d.update(extra)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "LocalityReport":
        names = {f for f in cls.__dataclass_fields__ if f != "extra"}
        kwargs = {k: v for k, v in d.items() if k in names}
        extra = {k: v for k, v in d.items() if k not in names and k not in ("n1", "n2", "Delta")}
        return cls(**kwargs, extra=extra)


def _find_groups(i: int, candidates: list[int], supports: dict[int, frozenset], need: int) -> list[int] | None:
    """Backtracking search for ``need`` candidates pairwise meeting only in {i}."""
    compatible = {
        a: {b for b in candidates if b != a and supports[a] & supports[b] == {i}}
        for a in candidates
    }
    chosen: list[int] = []

    def extend(start: int, allowed: set[int]) -> bool:
        if len(chosen) == need:
            return True
        for pos in range(start, len(candidates)):
            if len(candidates) - pos < need - len(chosen):
                return False
            c = candidates[pos]
            if c in allowed:
                chosen.append(c)
                if extend(pos + 1, allowed & compatible[c]):
                    return True
                chosen.pop()
        return False

    return list(chosen) if extend(0, set(candidates)) else None


def verify_locality(code: SystematicCode, r: int, delta: int) -> LocalityReport:
    """Search for delta - 1 repair groups per information symbol.

    Candidates are partial check columns (weight <= r) through the symbol,
    tried in order of weight then index.  The search is exact, so a negative
    result means no valid choice exists.
    """
    _check_params(code.n, code.k, r, delta)
    weights = code.column_weights
    partial = [j for j in range(1, code.num_checks + 1) if weights[j - 1] <= r]
    supports = {j: code.support(j) for j in partial}
    occ = [sum(1 for j in partial if i in supports[j]) for i in range(1, code.k + 1)]

    groups: list[list[int]] = []
    failed = None
    for i in range(1, code.k + 1):
        cands = sorted((j for j in partial if i in supports[j]), key=lambda j: (weights[j - 1], j))
        found = _find_groups(i, cands, supports, delta - 1) if len(cands) >= delta - 1 else None
        if found is None:
            failed = i
            break
        groups.append(sorted(found))

    return LocalityReport(
        n=code.n, k=code.k, r=r, delta=delta,
        satisfied=failed is None,
        repair_groups=groups,
        partial_indices=partial,
        occurrences=occ,
        bound_c=bound_c(code.n, code.k, r, delta),
        bound_i=bound_i(code.n, code.k, r, delta),
        failed_symbol=failed,
    )


def check_report(code: SystematicCode, report: LocalityReport) -> None:
    """Re-validate every repair group of a report against the code."""
    if not report.satisfied:
        raise LocalityError("report is not a locality certificate")
    if len(report.repair_groups) != code.k:
        raise LocalityError("report must list groups for every information symbol")
    for i, grp in enumerate(report.repair_groups, start=1):
        if len(set(grp)) != report.delta - 1:
            raise LocalityError(f"symbol {i}: expected {report.delta - 1} distinct groups, got {grp}")
        for j in grp:
            s = code.support(j)
            if i not in s or len(s) > report.r:
                raise LocalityError(f"symbol {i}: column {j} is not a valid repair group")
        for a, b in combinations(grp, 2):
            if code.support(a) & code.support(b) != {i}:
                raise LocalityError(f"symbol {i}: columns {a},{b} overlap beyond {{{i}}}")


def max_delta(code: SystematicCode, r: int) -> int:
    """Largest delta for which verify_locality succeeds (1 if even delta=2 fails)."""
    best = 1
    delta = 2
    while delta - 1 <= code.num_checks and verify_locality(code, r, delta).satisfied:
        best = delta
        delta += 1
    return best


@dataclass(frozen=True)
class Extraction:
    packing: Packing
    deletions: tuple[tuple[int, int], ...]  # (check column, deleted element)


def extract_packing(code: SystematicCode, r: int, delta: int, report: LocalityReport | None = None) -> Extraction:
    """Thin the partial check supports into a packing.

    While some pair sits in several blocks, the lowest-index block keeps it
    and every other block drops whichever of the two elements currently has
    the larger occurrence count (the larger element on ties).
    """
    if report is None:
        report = verify_locality(code, r, delta)
    if not report.satisfied:
        raise LocalityError(f"code lacks ({r},{delta})_c locality at symbol {report.failed_symbol}")
    cols = report.partial_indices
    blocks = [set(code.support(j)) for j in cols]
    deletions = []

    def count(x: int) -> int:
        return sum(1 for b in blocks if x in b)

    changed = True
    while changed:
        changed = False
        for i1, i2 in combinations(range(1, code.k + 1), 2):
            holders = [b for b in range(len(blocks)) if i1 in blocks[b] and i2 in blocks[b]]
            if len(holders) < 2:
                continue
            for b in holders[1:]:
                c1, c2 = count(i1), count(i2)
                victim = i1 if c1 > c2 else i2
                blocks[b].discard(victim)
                deletions.append((cols[b], victim))
            changed = True
            break

    pk = Packing(code.k, tuple(tuple(sorted(b)) for b in blocks))
    if pk.max_block > r or pk.Delta < delta - 1:
        raise LocalityError("extracted packing violates the occurrence floor")  # pragma: no cover
    return Extraction(pk, tuple(deletions))


@dataclass(frozen=True)
class OptimalityVerdict:
    d: int
    bound_c: int
    bound_i: int
    optimal_c: bool
    optimal_i: bool
    update_efficiency: int
    update_optimal: bool
    n1: int
    n1_target: int
    n1_matches: bool
    n1_conditions: bool
    consistent: bool  # optimal_c and n1_conditions imply n1 == n1_target

    def to_dict(self) -> dict:
        return asdict(self)


def classify_optimal(code: SystematicCode, r: int, delta: int, d: int | None,
                     report: LocalityReport | None = None) -> OptimalityVerdict:
    if d is None:
        raise LocalityError("minimum distance is required for classification")
    if report is None:
        report = verify_locality(code, r, delta)
    if not report.satisfied:
        raise LocalityError(f"code lacks ({r},{delta})_c locality at symbol {report.failed_symbol}")
    bc = bound_c(code.n, code.k, r, delta)
    bi = bound_i(code.n, code.k, r, delta)
    t = update_efficiency(code)
    target = n1_target(code.k, r, delta)
    conds = n1_conditions(code.k, r, delta)
    opt_c = d == bc
    return OptimalityVerdict(
        d=d, bound_c=bc, bound_i=bi,
        optimal_c=opt_c, optimal_i=d == bi,
        update_efficiency=t, update_optimal=t == d,
        n1=report.n1, n1_target=target, n1_matches=report.n1 == target,
        n1_conditions=conds,
        consistent=not (opt_c and conds) or report.n1 == target,
    )
