"""Small finite fields F_{p^e} with fully materialized tables.

A field element is an integer code in [0, q).  The code encodes the
coordinates (c_0, ..., c_{e-1}) of the element in the power basis of the
modulus polynomial, base p: code = c_0 + c_1*p + ... + c_{e-1}*p^(e-1).
For e = 1 the code is simply the residue mod p.

Construction is deterministic: the modulus is the lexicographically
smallest monic irreducible polynomial of degree e (constant coefficient
compared first), and the generator is the smallest code of multiplicative
order q - 1.  Repeated builds of the same (p, e) agree bit for bit.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

MAX_Q = 1 << 16


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m, ascending (trial division; m is small)."""
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by b over F_p; b need not be monic."""
    a = _poly_trim([c % p for c in a])
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while a and len(a) - 1 >= db:
        shift = len(a) - 1 - db
        factor = (a[-1] * inv_lead) % p
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * c) % p
        _poly_trim(a)
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Exhaustive check: no monic divisor of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def _find_modulus(p: int, e: int) -> tuple[int, ...]:
    for low in itertools.product(range(p), repeat=e):
        poly = list(low) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _decode(code: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        out.append(code % p)
        code //= p
    return out


def _encode(coeffs: list[int], p: int) -> int:
    code = 0
    for c in reversed(coeffs):
        code = code * p + c
    return code


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """Immutable field context; all operations are pure table lookups.

    eq=False keeps identity hashing, so per-field derived tables can be
    memoized cheaply.  build_field caches instances, one per (p, e).
    """

    p: int
    e: int
    q: int
    modulus: tuple[int, ...]
    generator: int
    antilog: tuple[int, ...]   # length q-1, k -> g^k
    log: tuple[int, ...]       # length q, log[0] = -1 sentinel
    trace_table: tuple[int, ...]

    @property
    def n(self) -> int:
        """Order of the multiplicative group, q - 1."""
        return self.q - 1

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> list[int]:
        return [self.antilog[k] for k in range(self.n)]

    def coeffs(self, x: int) -> tuple[int, ...]:
        return tuple(_decode(x, self.p, self.e))

    def from_coeffs(self, coeffs) -> int:
        return _encode([c % self.p for c in coeffs], self.p)

    def embed(self, c: int) -> int:
        """Prime-subfield embedding of the integer c."""
        return c % self.p

    def add(self, x: int, y: int) -> int:
        if self.e == 1:
            return (x + y) % self.p
        p = self.p
        xs, ys = _decode(x, p, self.e), _decode(y, p, self.e)
        return _encode([(a + b) % p for a, b in zip(xs, ys)], p)

    def neg(self, x: int) -> int:
        if self.e == 1:
            return (-x) % self.p
        p = self.p
        return _encode([(-a) % p for a in _decode(x, p, self.e)], p)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self.antilog[(self.log[x] + self.log[y]) % self.n]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inversion of zero field element")
        return self.antilog[(-self.log[x]) % self.n]

    def pow(self, x: int, k: int) -> int:
        """x**k with the convention 0**0 = 1."""
        if x == 0:
            return 1 if k == 0 else 0
        return self.antilog[(self.log[x] * k) % self.n]

    def trace(self, x: int) -> int:
        return self.trace_table[x]

    def dlog(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("discrete log of zero")
        return self.log[x]

    def __repr__(self) -> str:  # tables are huge; keep repr readable
        return f"FieldCtx(p={self.p}, e={self.e}, q={self.q})"


def _mul_codes(x: int, y: int, modulus: tuple[int, ...], p: int, e: int) -> int:
    if x == 0 or y == 0:
        return 0
    prod = _poly_mul(_decode(x, p, e), _decode(y, p, e), p)
    rem = _poly_mod(prod, list(modulus), p)
    rem += [0] * (e - len(rem))
    return _encode(rem, p)


def _order_is_n(x: int, n: int, modulus, p, e) -> bool:
    for ell in prime_factors(n):
        acc, base, k = 1, x, n // ell
        while k:
            if k & 1:
                acc = _mul_codes(acc, base, modulus, p, e)
            base = _mul_codes(base, base, modulus, p, e)
            k >>= 1
        if acc == 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def build_field(p: int, e: int) -> FieldCtx:
    """Construct F_{p^e} with all tables; deterministic and cached."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    q = p ** e
    if q > MAX_Q:
        raise ValueError(f"q = {q} exceeds the supported limit {MAX_Q}")
    modulus = _find_modulus(p, e)
    n = q - 1

    generator = None
    for cand in range(1, q):
        if n == 1 or _order_is_n(cand, n, modulus, p, e):
            generator = cand
            break
    assert generator is not None

    antilog = [1] * n
    for k in range(1, n):
        antilog[k] = _mul_codes(antilog[k - 1], generator, modulus, p, e)
    log = [-1] * q
    for k, x in enumerate(antilog):
        log[x] = k

    # Tr(x) = sum of the e Frobenius conjugates x^(p^i); lands in F_p,
    # whose elements are exactly the codes < p.
    trace = [0] * q
    frob = [pow(p, i, n) if n > 1 else 0 for i in range(e)]
    ctx_add_p = p
    for x in range(1, q):
        acc = 0
        lx = log[x]
        for f in frob:
            y = antilog[(lx * f) % n]
            if e == 1:
                acc = (acc + y) % ctx_add_p
            else:
                ys = _decode(y, p, e)
                accs = _decode(acc, p, e)
                acc = _encode([(a + b) % p for a, b in zip(accs, ys)], p)
        assert acc < p, "trace escaped the prime subfield"
        trace[x] = acc

    return FieldCtx(
        p=p,
        e=e,
        q=q,
        modulus=modulus,
        generator=generator,
        antilog=tuple(antilog),
        log=tuple(log),
        trace_table=tuple(trace),
    )
