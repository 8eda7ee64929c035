"""Packings, resolvable packings and difference matrices.

Elements of a ground set of size k are the integers 1..k.  Block order and
class order are kept exactly as given, because the code constructions map
the j-th block to the j-th check column.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .gf import FieldError, FieldSpec, field_of_order, prime_power


class PackingError(ValueError):
    pass


class DifferenceMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class Packing:
    """A (k, R, 1) packing: no pair of elements lies in two blocks."""

    k: int
    blocks: tuple[tuple[int, ...], ...]
    occurrences: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        k = self.k
        if k < 2:
            raise PackingError(f"ground set size must be >= 2, got {k}")
        blocks = tuple(tuple(sorted(int(x) for x in b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)

        seen: dict[tuple[int, int], int] = {}
        occ = [0] * k
        for idx, b in enumerate(blocks):
            if not b:
                raise PackingError(f"block {idx} is empty")
            for x in b:
                if not 1 <= x <= k:
                    raise PackingError(f"block {idx} contains {x}, outside 1..{k}")
            for a, c in zip(b, b[1:]):
                if a == c:
                    raise PackingError(f"block {idx} repeats element {a}")
            for pair in combinations(b, 2):
                if pair in seen:
                    raise PackingError(
                        f"pair {pair} occurs in blocks {seen[pair]} and {idx}",
                    )
                seen[pair] = idx
            for x in b:
                occ[x - 1] += 1
        object.__setattr__(self, "occurrences", tuple(occ))

    @property
    def block_sizes(self) -> frozenset[int]:
        return frozenset(len(b) for b in self.blocks)

    @property
    def max_block(self) -> int:
        return max((len(b) for b in self.blocks), default=0)

    @property
    def Delta(self) -> int:
        """Smallest number of blocks through any element."""
        return min(self.occurrences)

    def to_dict(self) -> dict:
        return {"k": self.k, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_dict(cls, d: dict) -> "Packing":
        return packing_validate(int(d["k"]), d["blocks"])


def packing_validate(k: int, blocks: Iterable[Iterable[int]]) -> Packing:
    return Packing(k, tuple(tuple(b) for b in blocks))


def is_regular(pk: Packing, t: int) -> bool:
    return all(d == t for d in pk.occurrences)


@dataclass(frozen=True)
class ResolvablePacking:
    """A (k, R, 1; u) packing split into u parallel classes."""

    k: int
    classes: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        if self.k < 2:
            raise PackingError(f"ground set size must be >= 2, got {self.k}")
        if not self.classes:
            raise PackingError("at least one parallel class is required")
        classes = tuple(tuple(tuple(sorted(b)) for b in cls) for cls in self.classes)
        object.__setattr__(self, "classes", classes)
        full = set(range(1, self.k + 1))
        for ci, cls in enumerate(classes):
            flat = [x for b in cls for x in b]
            dupes = sorted({x for x in flat if flat.count(x) > 1})
            missing = sorted(full - set(flat))
            extra = sorted(set(flat) - full)
            if dupes or missing or extra:
                parts = []
                if missing:
                    parts.append(f"missing {missing}")
                if dupes:
                    parts.append(f"duplicated {dupes}")
                if extra:
                    parts.append(f"out of range {extra}")
                raise PackingError(f"class {ci} is not a partition of 1..{self.k}: " + ", ".join(parts))
        # pair rule across classes
        self.flatten()

    @property
    def u(self) -> int:
        return len(self.classes)

    @property
    def num_blocks(self) -> int:
        return sum(len(c) for c in self.classes)

    def flatten(self) -> Packing:
        return Packing(self.k, tuple(b for cls in self.classes for b in cls))

    def to_dict(self) -> dict:
        return {"k": self.k, "classes": [[list(b) for b in cls] for cls in self.classes]}

    @classmethod
    def from_dict(cls, d: dict) -> "ResolvablePacking":
        return resolvable_validate(int(d["k"]), d["classes"])


def resolvable_validate(k: int, classes: Iterable[Iterable[Iterable[int]]]) -> ResolvablePacking:
    return ResolvablePacking(k, tuple(tuple(tuple(b) for b in cls) for cls in classes))


# -- difference matrices ----------------------------------------------------

@dataclass(frozen=True)
class DifferenceMatrix:
    """r x u matrix over an additive group of order k.

    ``group`` is ``"gf"`` (additive group of GF(k)) or ``"cyclic"`` (Z_k).
    """

    k: int
    entries: tuple[tuple[int, ...], ...]
    group: str = "gf"

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(int(x) for x in row) for row in self.entries))
        if self.group not in ("gf", "cyclic"):
            raise DifferenceMatrixError(f"unknown group kind {self.group!r}")
        if not self.entries or not self.entries[0]:
            raise DifferenceMatrixError("difference matrix must be non-empty")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise DifferenceMatrixError("ragged difference matrix")
            for x in row:
                if not 0 <= x < self.k:
                    raise DifferenceMatrixError(f"entry {x} is not a group element of order-{self.k} group")
        if self.group == "gf" and prime_power(self.k) is None:
            raise DifferenceMatrixError(f"{self.k} is not a prime power")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def _field(self) -> FieldSpec | None:
        return field_of_order(self.k) if self.group == "gf" else None

    def group_add(self, a: int, b: int) -> int:
        F = self._field()
        return F.add(a, b) if F else (a + b) % self.k

    def group_sub(self, a: int, b: int) -> int:
        F = self._field()
        return F.sub(a, b) if F else (a - b) % self.k

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "group": self.group,
            "rows": self.rows,
            "cols": self.cols,
            "entries": [list(r) for r in self.entries],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DifferenceMatrix":
        D = cls(int(d["k"]), tuple(tuple(r) for r in d["entries"]), d.get("group", "gf"))
        if "rows" in d and int(d["rows"]) != D.rows or "cols" in d and int(d["cols"]) != D.cols:
            raise DifferenceMatrixError("declared rows/cols do not match entries")
        return D


def dm_build(k: int, r: int, u: int) -> DifferenceMatrix:
    """Multiplication table d[j][i] = a_j * b_i over GF(k).

    a_1..a_r and b_1..b_u are the first r and u field elements by encoding.
    """
    try:
        F = field_of_order(k)
    except FieldError as exc:
        raise DifferenceMatrixError(f"{k} is not a prime power") from exc
    if not 1 <= r <= k:
        raise DifferenceMatrixError(f"rows must be in 1..{k}, got {r}")
    if not 1 <= u <= k:
        raise DifferenceMatrixError(f"columns must be in 1..{k}, got {u}")
    D = DifferenceMatrix(k, tuple(tuple(F.mul(a, b) for b in range(u)) for a in range(r)), "gf")
    dm_validate(D)
    return D


def dm_validate(D: DifferenceMatrix) -> None:
    """Raise DifferenceMatrixError unless every row pair has distinct differences.

    A full matrix (u == k) must additionally have differences covering the group.
    """
    for s, t in combinations(range(D.rows), 2):
        diffs: dict[int, int] = {}
        for i in range(D.cols):
            dv = D.group_sub(D.entries[s][i], D.entries[t][i])
            if dv in diffs:
                raise DifferenceMatrixError(
                    f"rows {s + 1},{t + 1}: differences collide at columns {diffs[dv] + 1},{i + 1}",
                )
            diffs[dv] = i
        if D.cols == D.k and len(diffs) != D.k:  # pragma: no cover
            raise DifferenceMatrixError(f"rows {s + 1},{t + 1}: differences miss group elements")


def dm_to_resolvable(D: DifferenceMatrix) -> ResolvablePacking:
    """Translate each column over the group to get one parallel class.

    Point (j, a) of [r] x group is relabelled (j - 1) * k + a + 1.
    """
    dm_validate(D)
    k = D.k
    classes = []
    for i in range(D.cols):
        cls = []
        for a in range(k):
            cls.append(tuple((j * k) + D.group_add(D.entries[j][i], a) + 1 for j in range(D.rows)))
        classes.append(tuple(cls))
    return ResolvablePacking(D.rows * k, tuple(classes))


def occurrence_sum_matches(pk: Packing) -> bool:
    """Double counting: total occurrences equal total block size."""
    return sum(pk.occurrences) == sum(len(b) for b in pk.blocks)


def blocks_through(pk: Packing, x: int) -> list[int]:
    return [i for i, b in enumerate(pk.blocks) if x in b]
