"""Arithmetic over GF(p^m) with integer-encoded elements.

An element is the base-p integer of its coefficient vector, so in GF(2^8)
the polynomial x^7 + x + 1 is stored as 0b10000011.  Multiplication goes
through log/exp tables built from a fixed primitive element.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

MAX_ORDER = 1 << 16

# Standard primitive polynomials for GF(2^m), including the leading term.
BINARY_MODULI = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x89,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q == p**m, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                return None
            m = 0
            while q % p == 0:
                q //= p
                m += 1
            return (p, m) if q == 1 else None
    return None


# -- polynomials over GF(p) as little-endian coefficient lists --------------

def _digits(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        value, d = divmod(value, p)
        out.append(d)
    return out


def _undigits(coeffs: Sequence[int], p: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * p + c
    return value


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_from_int(value: int, p: int) -> list[int]:
    out = []
    while value:
        value, d = divmod(value, p)
        out.append(d)
    return out


def _poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    b = _trim(list(b))
    inv_lead = pow(b[-1], p - 2, p) if p > 2 else 1
    while len(a) >= len(b):
        factor = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * c) % p
        _trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _poly_rem(prod, mod, p)


def is_irreducible(modulus: int, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..m//2."""
    poly = _poly_from_int(modulus, p)
    m = len(poly) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    for deg in range(1, m // 2 + 1):
        for low in range(p**deg):
            divisor = _digits(low, p, deg) + [1]
            if not _poly_rem(poly, divisor, p):
                return False
    return True


def _smallest_primitive_modulus(p: int, m: int) -> int:
    q = p**m
    for enc in range(q, 2 * q):
        if is_irreducible(enc, p):
            try:
                _build_tables(p, m, enc, p)
            except FieldError:
                continue
            return enc
    raise FieldError(f"no primitive polynomial found for GF({p}^{m})")


def _build_tables(p: int, m: int, modulus: int, generator: int) -> tuple[list[int], list[int]]:
    """exp/log tables for powers of ``generator``; raises if it is not primitive."""
    q = p**m
    mod = _poly_from_int(modulus, p)
    g = _poly_from_int(generator, p)
    exp = [0] * (2 * (q - 1))
    log = [-1] * q
    cur = [1]
    for i in range(q - 1):
        v = _undigits(cur, p) if cur else 0
        if log[v] != -1:
            raise FieldError(f"element {generator} is not primitive")
        exp[i] = v
        log[v] = i
        cur = _poly_mulmod(cur, g, mod, p)
    exp[q - 1:] = exp[: q - 1]
    return exp, log


def _build_tables_fast(p: int, m: int, modulus: int, generator: int) -> tuple[list[int], list[int]]:
    # x-multiplication shortcut for characteristic 2 with generator x
    if p != 2 or generator != 2 or m == 1:
        return _build_tables(p, m, modulus, generator)
    q = 1 << m
    exp = [0] * (2 * (q - 1))
    log = [-1] * q
    v = 1
    for i in range(q - 1):
        if log[v] != -1:
            raise FieldError(f"element {generator} is not primitive")
        exp[i] = v
        log[v] = i
        v <<= 1
        if v & q:
            v ^= modulus
    exp[q - 1:] = exp[: q - 1]
    return exp, log


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) defined by an irreducible ``modulus`` (integer encoding)."""

    p: int
    m: int
    modulus: int
    primitive_element: int
    _exp: list = field(repr=False, compare=False, default_factory=list)
    _log: list = field(repr=False, compare=False, default_factory=list)

    @property
    def q(self) -> int:
        return self.p**self.m

    def __str__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    # -- scalar operations on encodings --

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        return _undigits(
            [(x + y) % self.p for x, y in zip(_digits(a, self.p, self.m), _digits(b, self.p, self.m))],
            self.p,
        )

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return -a % self.p
        return _undigits([-x % self.p for x in _digits(a, self.p, self.m)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply; negative exponents invert first."""
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def exp(self, i: int) -> int:
        """beta ** i for the fixed primitive element beta."""
        return self._exp[i % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        return n // math.gcd(n, self._log[a])

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value, self)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(v, self) for v in range(self.q)]

    def to_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": self.modulus}

    # -- vectorised operations on integer arrays --

    @functools.cached_property
    def _exp_arr(self) -> np.ndarray:
        return np.asarray(self._exp, dtype=np.int64)

    @functools.cached_property
    def _log_arr(self) -> np.ndarray:
        arr = np.asarray(self._log, dtype=np.int64)
        arr[0] = 0
        return arr

    def add_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.m == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
        scale = 1
        for _ in range(self.m):
            out += ((a // scale + b // scale) % self.p) * scale
            scale *= self.p
        return out

    def mul_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        prod = self._exp_arr[self._log_arr[a] + self._log_arr[b]]
        return np.where((a == 0) | (b == 0), 0, prod)


@functools.lru_cache(maxsize=None)
def _field_cached(p: int, m: int, modulus: int) -> FieldSpec:
    q = p**m
    if q > MAX_ORDER:
        raise FieldError(f"field order {q} exceeds the cap {MAX_ORDER}")
    poly = _poly_from_int(modulus, p)
    if len(poly) - 1 != m:
        raise FieldError(f"modulus {modulus} does not have degree {m} over GF({p})")
    if poly[-1] != 1:
        raise FieldError("modulus must be monic")
    if not is_irreducible(modulus, p):
        raise FieldError(f"modulus {modulus} is reducible over GF({p})")
    for g in range(1, q):
        try:
            exp, log = _build_tables_fast(p, m, modulus, g)
        except FieldError:
            continue
        return FieldSpec(p, m, modulus, g, exp, log)
    raise FieldError("multiplicative group has no generator")  # unreachable for fields


def default_modulus(p: int, m: int) -> int:
    if m == 1:
        return p  # the polynomial x
    if p == 2 and m in BINARY_MODULI:
        return BINARY_MODULI[m]
    return _smallest_primitive_modulus(p, m)


def field_new(p: int, m: int = 1, modulus: int | Sequence[int] | None = None) -> FieldSpec:
    """Build GF(p^m).

    ``modulus`` is either the integer encoding of a monic degree-m polynomial
    or its little-endian coefficient list.  Omitted, GF(2^m) uses a standard
    primitive polynomial (0x11D for m = 8), prime fields use plain modular
    arithmetic, and other extension fields use the smallest primitive
    polynomial by encoding.
    """
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_ORDER:
        raise FieldError(f"field order {p}^{m} exceeds the cap {MAX_ORDER}")
    if modulus is None:
        modulus = default_modulus(p, m)
    elif not isinstance(modulus, int):
        modulus = _undigits(list(modulus), p)
    return _field_cached(p, m, modulus)


def field_of_order(q: int, modulus: int | None = None) -> FieldSpec:
    pm = prime_power(q)
    if pm is None:
        raise FieldError(f"{q} is not a prime power")
    return field_new(pm[0], pm[1], modulus)


def field_from_dict(d: dict) -> FieldSpec:
    return field_new(int(d["p"]), int(d.get("m", 1)), d.get("modulus"))


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: FieldSpec

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise FieldError(f"{self.value} is not an element of {self.field}")

    def _check(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"field mismatch: {self.field} vs {other.field}")
            return other.value
        return NotImplemented

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(v, self.field)

    def __add__(self, other):
        v = self._check(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.add(self.value, v))

    def __sub__(self, other):
        v = self._check(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.sub(self.value, v))

    def __mul__(self, other):
        v = self._check(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.mul(self.value, v))

    def __truediv__(self, other):
        v = self._check(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.field.div(self.value, v))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inv(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.field}[{self.value}]"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def neg(a: FieldElement) -> FieldElement:
    return -a


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inv()


def power(a: FieldElement, e: int) -> FieldElement:
    return a**e
