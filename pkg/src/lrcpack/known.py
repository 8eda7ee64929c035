"""Small reference objects with known parameters, used by tests and scripts."""

from __future__ import annotations

from .codes import SystematicCode
from .designs import Packing, ResolvablePacking, packing_validate, resolvable_validate
from .gf import field_new

# Binary [16, 8, 4] code with (3, 4)_c locality; rows of G = (I_8 | P).
G_16_8 = (
    "1000000001000011",
    "0100000010100001",
    "0010000011010000",
    "0001000001101000",
    "0000100000110100",
    "0000010000011010",
    "0000001000001101",
    "0000000110000110",
)

# Binary [14, 8, 3] code with (3, 3)_c locality whose last two check
# supports share the pair {1, 6}.
G_14_8 = (
    "10000000010011",
    "01000000101000",
    "00100000110000",
    "00010000011000",
    "00001000000110",
    "00000100001011",
    "00000010000101",
    "00000001100100",
)

# 3-regular (8, 3, 1) packing; its indicator code is G_16_8.
CYCLIC_8_3_BLOCKS = (
    (2, 3, 8), (3, 4, 1), (4, 5, 2), (5, 6, 3), (6, 7, 4), (7, 8, 5), (8, 1, 6), (1, 2, 7),
)

# (8, {3, 2}, 1; 4) resolvable packing.
RESOLVABLE_8_CLASSES = (
    ((2, 3, 8), (6, 7, 4), (1, 5)),
    ((3, 4, 1), (7, 8, 5), (2, 6)),
    ((4, 5, 2), (8, 1, 6), (3, 7)),
    ((5, 6, 3), (1, 2, 7), (4, 8)),
)

# Packing left after thinning the supports of G_14_8.
THINNED_14_8_BLOCKS = ((2, 3, 8), (1, 3, 4), (2, 4, 6), (5, 7, 8), (1, 5, 6), (1, 7))


def _binary_code(rows: tuple[str, ...]) -> SystematicCode:
    k = len(rows)
    return SystematicCode(field_new(2), k, tuple(tuple(int(c) for c in row[k:]) for row in rows))


def code_16_8() -> SystematicCode:
    return _binary_code(G_16_8)


def code_14_8() -> SystematicCode:
    return _binary_code(G_14_8)


def cyclic_8_3_packing() -> Packing:
    return packing_validate(8, CYCLIC_8_3_BLOCKS)


def resolvable_8(u: int = 4) -> ResolvablePacking:
    """The first ``u`` parallel classes of the (8, {3, 2}, 1; 4) packing."""
    return resolvable_validate(8, RESOLVABLE_8_CLASSES[:u])


def thinned_14_8_packing() -> Packing:
    return packing_validate(8, THINNED_14_8_BLOCKS)
