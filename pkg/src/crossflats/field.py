"""Arithmetic in small finite fields GF(p^k).

Field elements are plain integers in ``[0, q)`` with ``q = p**k``.  For
``k == 1`` an encoding is the residue mod p.  For ``k > 1`` the base-p
digits of the encoding, least significant first, are the coefficients of
a polynomial over GF(p); multiplication reduces modulo a fixed monic
irreducible polynomial of degree k.  The modulus is always the canonical
one (smallest encoding), so element encodings are identical across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

# Desk-scale combinatorics only; anything larger is a caller mistake.
MAX_ORDER = 1 << 16


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


# ---------------------------------------------------------------------------
# Polynomials over GF(p): coefficient lists, least significant first.

def _digits(e: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        out.append(e % p)
        e //= p
    return out


def _undigits(coeffs, p: int) -> int:
    e = 0
    for c in reversed(coeffs):
        e = e * p + c
    return e


def _poly_mul(p: int, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_rem(p: int, a, mod):
    """Remainder of a modulo a monic polynomial mod (degree >= 1)."""
    a = list(a)
    d = len(mod) - 1
    while len(a) > d:
        c = a[-1]
        if c:
            off = len(a) - 1 - d
            for j in range(d + 1):
                a[off + j] = (a[off + j] - c * mod[j]) % p
        a.pop()
    while len(a) < d:
        a.append(0)
    return a


def _is_irreducible(p: int, poly) -> bool:
    """Trial division of a monic polynomial by every smaller monic divisor.

    A monic polynomial of degree k >= 2 is reducible iff it has a monic
    factor of degree between 1 and k // 2, so this test is complete.
    """
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for enc in range(p ** d):
            divisor = _digits(enc, p, d) + [1]
            if not any(_poly_rem(p, poly, divisor)):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Canonical degree-k modulus: the monic irreducible with smallest encoding."""
    for enc in range(p ** k):
        poly = _digits(enc, p, k) + [1]
        if _is_irreducible(p, poly):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # cannot happen


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Field:
    """GF(p^k) acting on integer-encoded elements.

    ``modulus`` holds the k+1 ascending coefficients of the canonical
    irreducible modulus; by convention it is empty for prime fields.
    Instances are immutable and all operations are pure.
    """

    p: int
    k: int = 1
    modulus: tuple[int, ...] = ()

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.p ** self.k > MAX_ORDER:
            raise ValueError(f"field order {self.p}^{self.k} exceeds {MAX_ORDER}")
        mod = tuple(self.modulus)
        if self.k == 1:
            if mod:
                raise ValueError("prime fields carry no modulus")
        else:
            canonical = smallest_irreducible(self.p, self.k)
            if mod == ():
                mod = canonical
            elif mod != canonical:
                raise ValueError(
                    f"modulus {mod} is not the canonical irreducible {canonical}")
        object.__setattr__(self, "modulus", mod)

    @property
    def q(self) -> int:
        return self.p ** self.k

    def elements(self) -> range:
        return range(self.q)

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element encoding of GF({self.q})")
        return a

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self.check(a), self.check(b)
        if self.k == 1:
            return (a + b) % self.p
        da, db = _digits(a, self.p, self.k), _digits(b, self.p, self.k)
        return _undigits([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        self.check(a)
        if self.k == 1:
            return (-a) % self.p
        return _undigits([(-c) % self.p for c in _digits(a, self.p, self.k)], self.p)

    def mul(self, a: int, b: int) -> int:
        self.check(a), self.check(b)
        if self.k == 1:
            return (a * b) % self.p
        prod = _poly_mul(self.p, _digits(a, self.p, self.k), _digits(b, self.p, self.k))
        return _undigits(_poly_rem(self.p, prod, self.modulus), self.p)

    def inv(self, a: int) -> int:
        self.check(a)
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        # The multiplicative group has order q - 1, so a^(q-2) inverts a.
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        self.check(a)
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result


def make_field(p: int, k: int = 1) -> Field:
    """GF(p^k) with the deterministic canonical modulus."""
    return Field(p, k)
