"""Systematic linear codes G = (I_k | P) over a finite field."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Sequence

import numpy as np

from . import linalg
from .gf import FieldElement, FieldSpec, field_from_dict

if TYPE_CHECKING:
    from .locality import LocalityReport

DEFAULT_DISTANCE_BUDGET = 1 << 24


class CodeError(ValueError):
    pass


class DistanceBudgetExceeded(CodeError):
    pass


class RepairError(CodeError):
    pass


def _as_int(x, F: FieldSpec) -> int:
    if isinstance(x, FieldElement):
        if x.field != F:
            raise CodeError(f"element from {x.field} used in a code over {F}")
        return x.value
    v = int(x)
    if not 0 <= v < F.q:
        raise CodeError(f"{v} is not an element of {F}")
    return v


@dataclass(frozen=True)
class SystematicCode:
    """Code with generator (I_k | P); ``P`` is k rows of n - k encodings."""

    field: FieldSpec
    k: int
    P: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.k < 1:
            raise CodeError("dimension must be >= 1")
        if len(self.P) != self.k:
            raise CodeError(f"P has {len(self.P)} rows, expected {self.k}")
        P = tuple(tuple(_as_int(x, self.field) for x in row) for row in self.P)
        width = len(P[0])
        if width < 1:
            raise CodeError("need at least one check column (n > k)")
        if any(len(row) != width for row in P):
            raise CodeError("P rows have different lengths")
        object.__setattr__(self, "P", P)

    @property
    def n(self) -> int:
        return self.k + len(self.P[0])

    @property
    def num_checks(self) -> int:
        return len(self.P[0])

    def column(self, j: int) -> tuple[int, ...]:
        """Check column p_j (1-based)."""
        return tuple(row[j - 1] for row in self.P)

    def support(self, j: int) -> frozenset[int]:
        """1-based information positions where p_j is nonzero."""
        return frozenset(i + 1 for i, row in enumerate(self.P) if row[j - 1])

    @property
    def column_weights(self) -> tuple[int, ...]:
        return tuple(sum(1 for row in self.P if row[j]) for j in range(self.num_checks))

    @property
    def row_weights(self) -> tuple[int, ...]:
        """Hamming weights of the rows of G."""
        return tuple(1 + sum(1 for x in row if x) for row in self.P)

    def generator(self) -> list[list[int]]:
        return [[1 if i == j else 0 for j in range(self.k)] + list(row) for i, row in enumerate(self.P)]

    def to_dict(self) -> dict:
        return {
            "field": self.field.to_dict(),
            "k": self.k,
            "n": self.n,
            "p_columns": [list(self.column(j)) for j in range(1, self.num_checks + 1)],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SystematicCode":
        F = field_from_dict(d["field"])
        k = int(d["k"])
        cols = d["p_columns"]
        if any(len(c) != k for c in cols):
            raise CodeError("every check column must have k entries")
        code = cls(F, k, tuple(tuple(c[i] for c in cols) for i in range(k)))
        if "n" in d and int(d["n"]) != code.n:
            raise CodeError(f"declared n={d['n']} but the matrix gives n={code.n}")
        return code


def code_new(field: FieldSpec, k: int, P: Sequence[Sequence]) -> SystematicCode:
    return SystematicCode(field, k, tuple(tuple(row) for row in P))


@dataclass(frozen=True)
class Codeword:
    """Length-n word; erased positions hold ``None``."""

    symbols: tuple[int | None, ...]

    @property
    def erased(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, s in enumerate(self.symbols) if s is None)

    def __len__(self) -> int:
        return len(self.symbols)

    def to_dict(self) -> dict:
        return {"symbols": list(self.symbols), "erased": list(self.erased)}

    @classmethod
    def from_dict(cls, d: dict) -> "Codeword":
        symbols = list(d["symbols"])
        for i in d.get("erased", []):
            symbols[int(i) - 1] = None
        return cls(tuple(symbols))


def encode(code: SystematicCode, message: Sequence) -> Codeword:
    F = code.field
    if len(message) != code.k:
        raise CodeError(f"message has length {len(message)}, expected {code.k}")
    m = [_as_int(x, F) for x in message]
    checks = [0] * code.num_checks
    for mi, row in zip(m, code.P):
        if mi:
            for j, pij in enumerate(row):
                if pij:
                    checks[j] = F.add(checks[j], F.mul(mi, pij))
    return Codeword(tuple(m + checks))


def erase(word: Codeword, positions: Sequence[int]) -> Codeword:
    symbols = list(word.symbols)
    for i in positions:
        if not 1 <= i <= len(symbols):
            raise CodeError(f"erasure position {i} outside 1..{len(symbols)}")
        symbols[i - 1] = None
    return Codeword(tuple(symbols))


# -- minimum distance ---------------------------------------------------------

def _span(F: FieldSpec, rows: np.ndarray) -> np.ndarray:
    """All F-linear combinations of ``rows``; index 0 is the zero word."""
    out = np.zeros((1, rows.shape[1]), dtype=np.int64)
    scalars = np.arange(F.q, dtype=np.int64)
    for row in rows:
        scaled = F.mul_arrays(scalars[:, None], row[None, :])  # q x n
        out = F.add_arrays(out[None, :, :], scaled[:, None, :]).reshape(-1, rows.shape[1])
    return out


def min_distance(code: SystematicCode, budget: int = DEFAULT_DISTANCE_BUDGET) -> int:
    """Exact minimum distance by enumerating all q^k - 1 nonzero messages.

    The message space is split in two halves (meet in the middle on the sum),
    so memory stays near q^(k/2) words.
    """
    F = code.field
    total = F.q**code.k - 1
    if total > budget:
        raise DistanceBudgetExceeded(f"{total} messages exceed the enumeration budget {budget}")
    G = np.asarray(code.generator(), dtype=np.int64)
    half = (code.k + 1) // 2
    A = _span(F, G[:half])
    B = _span(F, G[half:])
    chunk = max(1, (1 << 20) // max(1, A.size))
    best = code.n
    for start in range(0, len(B), chunk):
        words = F.add_arrays(A[None, :, :], B[start:start + chunk, None, :])
        weights = np.count_nonzero(words, axis=2)
        if start == 0:
            weights[0, 0] = code.n + 1
        best = min(best, int(weights.min()))
    return best


def update_efficiency(code: SystematicCode) -> int:
    """Largest row weight of G: symbols touched when one message symbol changes."""
    return max(code.row_weights)


# -- MDS generators -----------------------------------------------------------

def rs_evaluation_points(field: FieldSpec, n: int) -> list[int | None]:
    """beta^0, beta^1, ..., then 0, then the point at infinity (``None``)."""
    q = field.q
    if n > q + 1:
        raise CodeError(f"length {n} exceeds q + 1 = {q + 1}")
    pts: list[int | None] = [field.exp(i) for i in range(min(n, q - 1))]
    if n >= q:
        pts.append(0)
    if n == q + 1:
        pts.append(None)
    return pts


def rs_systematic(field: FieldSpec, n: int, k: int) -> SystematicCode:
    """Systematic generator of an [n, k, n - k + 1] (doubly extended) RS code.

    Row i of the Vandermonde matrix holds x_j^i; the point at infinity is the
    column e_k.  The left k x k block is inverted to reach (I | P).
    """
    if not 1 <= k < n:
        raise CodeError(f"need 1 <= k < n, got n={n}, k={k}")
    pts = rs_evaluation_points(field, n)
    V = [
        [(1 if i == k - 1 else 0) if x is None else field.pow(x, i) for x in pts]
        for i in range(k)
    ]
    left_inv = linalg.inverse(field, [row[:k] for row in V])
    G = linalg.matmul(field, left_inv, V)
    return SystematicCode(field, k, tuple(tuple(row[k:]) for row in G))


@dataclass(frozen=True)
class MDSCertificate:
    """Outcome of an MDS check.

    ``level`` is ``"full"`` when every square submatrix of P was checked,
    ``"partial"`` when only entries, 2x2 minors and a random sample were,
    and ``"failed"`` when a singular submatrix was found (``witness`` gives
    its 1-based rows and check columns).
    """

    level: str
    minors_checked: int
    total_minors: int
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    @property
    def ok(self) -> bool:
        return self.level != "failed"

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "minors_checked": self.minors_checked,
            "total_minors": self.total_minors,
            "witness": None if self.witness is None else [list(self.witness[0]), list(self.witness[1])],
        }


def total_minors(k: int, c: int) -> int:
    return sum(math.comb(k, s) * math.comb(c, s) for s in range(1, min(k, c) + 1))


def mds_check(code: SystematicCode, effort: int = 20000, seed: int = 0) -> MDSCertificate:
    """Check that square submatrices of P are nonsingular.

    All 1x1 and 2x2 minors are always checked.  If the total number of square
    minors is within ``effort`` every one is checked; otherwise ``effort``
    randomly chosen larger minors are sampled with ``seed``.
    """
    F, P = code.field, code.P
    k, c = code.k, code.num_checks
    total = total_minors(k, c)
    checked = 0

    def singular(rows, cols) -> bool:
        nonlocal checked
        checked += 1
        return linalg.det(F, [[P[i][j] for j in cols] for i in rows]) == 0

    def fail(rows, cols):
        return MDSCertificate(
            "failed", checked, total,
            (tuple(i + 1 for i in rows), tuple(j + 1 for j in cols)),
        )

    exhaustive = total <= effort
    sizes = range(1, min(k, c) + 1) if exhaustive else range(1, min(2, k, c) + 1)
    for s in sizes:
        for rows in combinations(range(k), s):
            for cols in combinations(range(c), s):
                if singular(rows, cols):
                    return fail(rows, cols)
    if exhaustive:
        return MDSCertificate("full", checked, total)

    rng = random.Random(seed)
    big = list(range(3, min(k, c) + 1))
    for _ in range(effort if big else 0):
        s = rng.choice(big)
        rows = tuple(sorted(rng.sample(range(k), s)))
        cols = tuple(sorted(rng.sample(range(c), s)))
        if singular(rows, cols):
            return fail(rows, cols)
    return MDSCertificate("partial", checked, total)


# -- erasure repair -----------------------------------------------------------

def plan_repair(code: SystematicCode, erased: Sequence[int], report: "LocalityReport") -> dict[int, int]:
    """Map each erased information symbol to the check column that repairs it.

    The chosen group is the lowest-index one whose check symbol and other
    members are all intact.
    """
    if not report.satisfied:
        raise RepairError("report does not certify locality")
    if report.k != code.k or report.n != code.n:
        raise RepairError(f"report is for an [{report.n},{report.k}] code, not [{code.n},{code.k}]")
    erased_set = set(erased)
    if len(erased_set) > report.delta - 1:
        raise RepairError(f"{len(erased_set)} erasures exceed delta - 1 = {report.delta - 1}")
    plan = {}
    for i in sorted(x for x in erased_set if x <= code.k):
        for j in sorted(report.repair_groups[i - 1]):
            members = (code.support(j) - {i}) | {code.k + j}
            if i not in code.support(j):
                raise RepairError(f"report lists column {j} for symbol {i} but p_{j}[{i}] = 0")
            if not members & erased_set:
                plan[i] = j
                break
        else:
            raise RepairError(f"no intact repair group for symbol {i}")
    return plan


def erase_and_repair(code: SystematicCode, word: Codeword, report: "LocalityReport") -> Codeword:
    """Restore erased symbols through local repair groups.

    Information symbols are solved from one intact group each; erased checks
    are then re-encoded from the recovered message.
    """
    if len(word) != code.n:
        raise RepairError(f"word has length {len(word)}, code has n={code.n}")
    F = code.field
    plan = plan_repair(code, word.erased, report)
    sym = list(word.symbols)
    for i, j in plan.items():
        acc = sym[code.k + j - 1]
        for l in code.support(j) - {i}:
            acc = F.sub(acc, F.mul(sym[l - 1], code.P[l - 1][j - 1]))
        sym[i - 1] = F.div(acc, code.P[i - 1][j - 1])
    return encode(code, sym[: code.k])
