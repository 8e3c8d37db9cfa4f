"""Exact arithmetic in GF(p^m) with an explicit irreducible modulus.

Field elements are integer codes in [0, q) where q = p^m.  The base-p
digits of a code, least significant first, are the coefficients of the
element's polynomial representative modulo the field's modulus.  Code 0
is the additive identity and code 1 the multiplicative identity, for any
choice of modulus.

For small fields (q <= 256) full addition/multiplication tables are built
once at construction; everything else falls back to digit arithmetic.
GF instances are immutable and all operations are pure functions, so a
field may be shared across threads without synchronization.
"""

from __future__ import annotations

from typing import Iterable, Sequence

_PRIME_LIMIT = 1 << 20  # larger characteristics are out of scope
_TABLE_LIMIT = 256


def _is_prime(n: int) -> bool:
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
# Polynomials over the prime field F_p, as digit tuples (ascending powers,
# no trailing zeros).  This small kit exists so that a GF instance can pick
# and validate its own modulus without depending on the generic polynomial
# layer, which is built on top of GF.

def _dp_trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _dp_mul(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _dp_trim(out)


def _dp_sub(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _dp_trim((x - y) % p for x, y in zip(a, b))


def _dp_mod(a: Sequence[int], m: Sequence[int], p: int) -> tuple[int, ...]:
    # m is monic of degree >= 1
    a = list(a)
    dm = len(m) - 1
    while len(a) > dm:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i in range(dm + 1):
                a[shift + i] = (a[shift + i] - lead * m[i]) % p
        a.pop()
    return _dp_trim(a)


def _monic_dp(p: int, d: int, code: int) -> tuple[int, ...]:
    """The code-th monic degree-d digit poly; codes enumerate the d low digits."""
    digits = []
    c = code
    for _ in range(d):
        digits.append(c % p)
        c //= p
    return tuple(digits) + (1,)


_DP_IRR_CACHE: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = {}


def _dp_irreducibles(p: int, d: int) -> tuple[tuple[int, ...], ...]:
    """All monic irreducible digit polys of degree d over F_p, ascending code."""
    key = (p, d)
    got = _DP_IRR_CACHE.get(key)
    if got is None:
        got = tuple(
            f
            for code in range(p**d)
            if _dp_is_irreducible(f := _monic_dp(p, d, code), p)
        )
        _DP_IRR_CACHE[key] = got
    return got


def _dp_is_irreducible(f: Sequence[int], p: int) -> bool:
    d = len(f) - 1
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for g in _dp_irreducibles(p, k):
            if not _dp_mod(f, g, p):
                return False
    return True


# ---------------------------------------------------------------------------


class GF:
    """The finite field GF(p^m) = F_p[x] / (modulus).

    When no modulus is supplied, the monic irreducible of degree m over F_p
    with the smallest base-p coefficient code is chosen, so the presentation
    is deterministic across runs.  Prime fields (m = 1) always use x.
    """

    __slots__ = ("p", "m", "q", "modulus", "_add", "_mul", "_inv", "_neg", "_hash")

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p!r}")
        if p > _PRIME_LIMIT:
            raise ValueError(f"characteristic {p} too large for this library")
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"extension degree must be a positive integer, got {m!r}")
        if m == 1:
            if modulus is not None and _dp_trim(c % p for c in modulus) != (0, 1):
                raise ValueError("a prime field is presented with modulus x")
            mod = (0, 1)
        elif modulus is None:
            mod = _dp_irreducibles(p, m)[0]
        else:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != m + 1 or mod[-1] != 1:
                raise ValueError(
                    f"modulus must be monic of degree {m}, got {list(modulus)!r}"
                )
            if not _dp_is_irreducible(mod, p):
                raise ValueError(f"modulus {list(modulus)!r} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = mod
        self._hash = hash((p, mod))
        if self.q <= _TABLE_LIMIT:
            self._build_tables()
        else:
            self._add = self._mul = self._inv = self._neg = None

    # -- representation helpers

    def digits(self, a: int) -> tuple[int, ...]:
        """Base-p digit vector of a code, length m, least significant first."""
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def code(self, digits: Sequence[int]) -> int:
        c = 0
        for d in reversed(list(digits)):
            c = c * self.p + d % self.p
        return c

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element code of {self!r}")
        return a

    def elements(self) -> range:
        return range(self.q)

    # -- arithmetic

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        self._neg = [self._neg_direct(a) for a in range(q)]
        self._add = [[self._add_direct(a, b) for b in range(q)] for a in range(q)]
        self._mul = [[self._mul_direct(a, b) for b in range(q)] for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            row = self._mul[a]
            for b in range(1, q):
                if row[b] == 1:
                    inv[a] = b
                    break
        self._inv = inv

    def _add_direct(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        c = 0
        scale = 1
        for _ in range(self.m):
            c += ((a + b) % p) * scale
            a //= p
            b //= p
            scale *= p
        return c

    def _neg_direct(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        c = 0
        scale = 1
        for _ in range(self.m):
            c += ((-a) % p) * scale
            a //= p
            scale *= p
        return c

    def _mul_direct(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        prod = _dp_mul(self.digits(a), self.digits(b), self.p)
        return self.code(_dp_mod(prod, self.modulus, self.p))

    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        return self._add_direct(a, b)

    def neg(self, a: int) -> int:
        if self._neg is not None:
            return self._neg[a]
        return self._neg_direct(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a][b]
        return self._mul_direct(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        if self._inv is not None:
            return self._inv[a]
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        # extended Euclid on digit polys: find u with u * a == 1 (mod modulus)
        p = self.p
        r0, r1 = self.modulus, _dp_trim(self.digits(a))
        s0, s1 = (), (1,)
        while r1:
            q, r = _dp_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _dp_sub(s0, _dp_mul(q, s1, p), p)
        # r0 is a nonzero constant gcd of a and the irreducible modulus
        c = pow(r0[0], p - 2, p)
        return self.code(_dp_mod(tuple(x * c % p for x in s0), self.modulus, p))

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    # -- identity

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF):
            return NotImplemented
        return self.p == other.p and self.modulus == other.modulus

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"


def _dp_divmod(
    a: Sequence[int], b: Sequence[int], p: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    b = _dp_trim(b)
    if not b:
        raise ZeroDivisionError("digit poly division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    rem = list(a)
    db = len(b) - 1
    quot = [0] * max(0, len(rem) - db)
    while len(_dp_trim(rem)) - 1 >= db and rem:
        rem = list(_dp_trim(rem))
        if len(rem) - 1 < db:
            break
        c = rem[-1] * inv_lead % p
        shift = len(rem) - 1 - db
        quot[shift] = c
        for i in range(db + 1):
            rem[shift + i] = (rem[shift + i] - c * b[i]) % p
    return _dp_trim(quot), _dp_trim(rem)
