"""Exact field arithmetic: prime fields, small extension fields, and the rationals.

Elements are plain Python values owned by a :class:`Field` context:

* prime field  -> ``int`` in ``[0, p)``
* extension    -> ``tuple`` of ``k`` residues, little-endian in the modulus root
* rationals    -> :class:`fractions.Fraction`

All arithmetic goes through the field object, so the same algorithm runs over
any backend.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import (
    FieldTooLarge,
    MalformedInput,
    NoSuchOrder,
    NotPrime,
    ReducibleModulus,
    ZeroElement,
)

MAX_FIELD_SIZE = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    divs = [1]
    for q, e in factorize(n).items():
        divs = [d * q**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def totient(n: int) -> int:
    out = n
    for q in factorize(n):
        out = out // q * (q - 1)
    return out


# -- polynomials over Z_p as little-endian coefficient lists -----------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m`` over Z_p."""
    a = [c % p for c in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            shift = i - dm
            for j in range(dm + 1):
                a[shift + j] = (a[shift + j] - c * m[j]) % p
    return _trim(a[:dm])


def _monic_polys(p: int, degree: int) -> Iterator[list[int]]:
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= k/2."""
    k = len(modulus) - 1
    if k < 1 or modulus[-1] % p != 1:
        return False
    for d in range(1, k // 2 + 1):
        for cand in _monic_polys(p, d):
            if not _poly_mod(modulus, cand, p):
                return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``k`` over Z_p.

    Candidates are ordered by the integer ``sum(c_i * p**i)`` of their lower
    coefficients, so ``(2, 4)`` gives ``x^4 + x + 1``.
    """
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        cand = low + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int
    extension_degree: int = 1
    modulus: tuple[int, ...] | None = None

    @classmethod
    def parse(cls, obj) -> "FieldSpec":
        """Accept ``"p"``, ``"p,k"``, ``"Q"``, an int, or a JSON object."""
        if isinstance(obj, FieldSpec):
            return obj
        if isinstance(obj, bool):
            raise MalformedInput(f"bad field spec {obj!r}")
        if isinstance(obj, int):
            return cls(obj)
        if isinstance(obj, str):
            s = obj.strip()
            if s.upper() in ("Q", "QQ", "0"):
                return cls(0)
            try:
                parts = [int(x) for x in s.split(",")]
            except ValueError:
                raise MalformedInput(f"bad field spec {obj!r}") from None
            if len(parts) == 1:
                return cls(parts[0])
            if len(parts) == 2:
                return cls(parts[0], parts[1])
            raise MalformedInput(f"bad field spec {obj!r}")
        if isinstance(obj, dict):
            try:
                p = int(obj.get("characteristic", obj.get("p")))
                k = int(obj.get("extension_degree", obj.get("k", 1)))
            except (TypeError, ValueError):
                raise MalformedInput(f"bad field spec {obj!r}") from None
            mod = obj.get("modulus")
            return cls(p, k, tuple(int(c) for c in mod) if mod is not None else None)
        raise MalformedInput(f"bad field spec {obj!r}")

    def to_json(self) -> dict:
        out = {"characteristic": self.characteristic, "extension_degree": self.extension_degree}
        if self.modulus is not None:
            out["modulus"] = list(self.modulus)
        return out


class Field:
    """Arithmetic context. Subclasses fix the element representation."""

    spec: FieldSpec
    characteristic: int
    size: int | None  # None for infinite fields
    zero: object
    one: object

    @property
    def is_finite(self) -> bool:
        return self.size is not None

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero

    def elements(self) -> Iterator:
        raise TypeError("field is infinite")

    def nonzero_elements(self) -> Iterator:
        return (x for x in self.elements() if x != self.zero)

    def random_nonzero(self, rng: random.Random):
        while True:
            x = self.random_element(rng)
            if x != self.zero:
                return x

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)


class PrimeField(Field):
    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = self.characteristic = spec.characteristic
        self.size = self.p
        self.zero, self.one = 0, 1

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __call__(self, value: int) -> int:
        return value % self.p

    def from_int(self, value: int) -> int:
        return value % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroElement("zero has no inverse")
        return pow(a, -1, self.p)

    def pow(self, a, e: int):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def elements(self):
        return iter(range(self.p))

    def random_element(self, rng):
        return rng.randrange(self.p)

    def encode(self, a):
        return a

    def decode(self, obj):
        if isinstance(obj, bool):
            raise MalformedInput(f"bad element {obj!r}")
        if isinstance(obj, int):
            return obj % self.p
        if isinstance(obj, str):
            try:
                return int(obj.strip()) % self.p
            except ValueError:
                pass
        raise MalformedInput(f"bad element {obj!r} for GF({self.p})")

    def format(self, a) -> str:
        return str(a)


class ExtensionField(Field):
    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = self.characteristic = spec.characteristic
        self.k = spec.extension_degree
        self.modulus = spec.modulus
        self.size = self.p**self.k
        self.zero = (0,) * self.k
        self.one = (1,) + (0,) * (self.k - 1)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})"

    def __call__(self, coeffs) -> tuple[int, ...]:
        if isinstance(coeffs, int):
            return self.from_int(coeffs)
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        coeffs = [c % self.p for c in coeffs]
        return tuple(coeffs + [0] * (self.k - len(coeffs)))

    def from_int(self, value: int):
        return (value % self.p,) + (0,) * (self.k - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def mul(self, a, b):
        p, k, m = self.p, self.k, self.modulus
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        # reduce by the monic modulus from the top down
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k):
                    prod[i - k + j] -= c * m[j]
        return tuple(c % p for c in prod[:k])

    def inv(self, a):
        if a == self.zero:
            raise ZeroElement("zero has no inverse")
        return self.pow(a, self.size - 2)

    def elements(self):
        return iter(itertools.product(range(self.p), repeat=self.k))

    def random_element(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.k))

    def encode(self, a):
        return list(a)

    def decode(self, obj):
        if isinstance(obj, str):
            try:
                obj = json.loads(obj)
            except ValueError:
                raise MalformedInput(f"bad element {obj!r}") from None
        if isinstance(obj, bool):
            raise MalformedInput(f"bad element {obj!r}")
        if isinstance(obj, int):
            return self.from_int(obj)
        if isinstance(obj, list) and len(obj) == self.k and all(
            isinstance(c, int) and not isinstance(c, bool) for c in obj
        ):
            return tuple(c % self.p for c in obj)
        raise MalformedInput(f"bad element {obj!r} for {self!r}")

    def format(self, a) -> str:
        return json.dumps(list(a))


class RationalField(Field):
    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.characteristic = 0
        self.size = None
        self.zero, self.one = Fraction(0), Fraction(1)

    def __repr__(self) -> str:
        return "QQ"

    def __call__(self, value) -> Fraction:
        return Fraction(value)

    def from_int(self, value: int):
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroElement("zero has no inverse")
        return 1 / a

    def pow(self, a, e: int):
        if a == 0 and e < 0:
            raise ZeroElement("zero has no inverse")
        return a**e

    def random_element(self, rng, bound: int = 9):
        den = rng.randint(1, 3)
        return Fraction(rng.randint(-bound, bound), den)

    def encode(self, a):
        return self.format(a)

    def decode(self, obj):
        if isinstance(obj, bool):
            raise MalformedInput(f"bad element {obj!r}")
        if isinstance(obj, int):
            return Fraction(obj)
        if isinstance(obj, str):
            try:
                return Fraction(obj.strip())
            except (ValueError, ZeroDivisionError):
                pass
        raise MalformedInput(f"bad rational {obj!r}")

    def format(self, a) -> str:
        return f"{a.numerator}/{a.denominator}"


def field_make(spec: FieldSpec | str | int | dict) -> Field:
    """Build the arithmetic context described by ``spec``.

    Raises NotPrime for a composite characteristic and ReducibleModulus when a
    supplied modulus factors over Z_p.
    """
    spec = FieldSpec.parse(spec)
    p, k = spec.characteristic, spec.extension_degree
    if k < 1:
        raise MalformedInput("extension degree must be positive")
    if p == 0:
        if k != 1:
            raise MalformedInput("only degree-1 extensions of Q are supported")
        return RationalField(FieldSpec(0))
    if not is_prime(p):
        raise NotPrime(f"characteristic {p} is not prime")
    if k == 1:
        return PrimeField(FieldSpec(p))
    if p**k > MAX_FIELD_SIZE:
        raise FieldTooLarge(f"{p}^{k} exceeds {MAX_FIELD_SIZE}")
    if spec.modulus is None:
        modulus = default_modulus(p, k)
    else:
        modulus = tuple(c % p for c in spec.modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise MalformedInput(f"modulus must be monic of degree {k}")
        if not is_irreducible(modulus, p):
            raise ReducibleModulus(f"{list(modulus)} is reducible over Z_{p}")
    return ExtensionField(FieldSpec(p, k, modulus))


def element_order(field: Field, g) -> int:
    """Multiplicative order of ``g``: least n >= 1 with g**n == 1."""
    if not field.is_finite:
        raise TypeError("element_order needs a finite field")
    if g == field.zero:
        raise ZeroElement("zero has no multiplicative order")
    for d in divisors(field.size - 1):
        if field.pow(g, d) == field.one:
            return d
    raise AssertionError("unreachable: Lagrange")


def find_element_of_order(field: Field, m: int):
    """First element (in enumeration order) of multiplicative order ``m``."""
    if not field.is_finite:
        raise TypeError("find_element_of_order needs a finite field")
    if m < 1 or (field.size - 1) % m:
        raise NoSuchOrder(f"{m} does not divide |F*| = {field.size - 1}")
    for g in field.nonzero_elements():
        if field.pow(g, m) == field.one and element_order(field, g) == m:
            return g
    raise AssertionError("unreachable: F* is cyclic")
