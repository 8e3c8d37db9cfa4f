"""Polynomials over GF(q): arithmetic, irreducibility, factorization, order.

A Poly holds its field and an ascending tuple of coefficient codes with no
trailing zeros; the empty tuple is the zero polynomial, whose degree is the
sentinel NEG_INF.  Values are immutable and all functions are pure.

Irreducibility testing, enumeration and factorization all run by sieving
and trial division: candidate polynomials are ordered by their base-q
coefficient code (constant term least significant), which fixes a single
deterministic order used everywhere a polynomial sequence is produced.
"""

from __future__ import annotations

from .field import GF
from .numtheory import factorize

NEG_INF = float("-inf")


class Poly:
    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: GF, coeffs=()):
        cs = [field.check(int(c)) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)
        self._hash = hash((field, self.coeffs))

    # -- constructors

    @classmethod
    def zero(cls, field: GF) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: GF) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: GF) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: GF, c: int) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def from_code(cls, field: GF, degree: int, code: int) -> "Poly":
        """The monic degree-d polynomial whose low coefficients encode `code`."""
        digits = []
        for _ in range(degree):
            digits.append(code % field.q)
            code //= field.q
        return cls(field, digits + [1])

    # -- basic queries

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        """Leading coefficient code; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.lc == 1

    def code(self) -> int:
        """Base-q integer encoding, constant term least significant."""
        c = 0
        for a in reversed(self.coeffs):
            c = c * self.field.q + a
        return c

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def evaluate(self, a: int) -> int:
        F = self.field
        out = 0
        for c in reversed(self.coeffs):
            out = F.add(F.mul(out, a), c)
        return out

    # -- ring operations

    def _need_same_field(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if self.field != other.field:
            raise ValueError(f"mixed fields {self.field!r} and {other.field!r}")

    def __add__(self, other: "Poly") -> "Poly":
        self._need_same_field(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, (F.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._need_same_field(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(F)
        out = [0] * (len(a) + len(b) - 1)
        mul, add = F.mul, F.add
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly(F, out)

    def scale(self, c: int) -> "Poly":
        F = self.field
        return Poly(F, (F.mul(a, c) for a in self.coeffs))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._need_same_field(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        db = other.degree
        inv_lead = F.inv(other.lc)
        rem = list(self.coeffs)
        quot = [0] * max(0, len(rem) - db)
        bc = other.coeffs
        while len(rem) - 1 >= db:
            lead = rem[-1]
            if lead:
                c = F.mul(lead, inv_lead)
                shift = len(rem) - 1 - db
                quot[shift] = c
                for i in range(db + 1):
                    rem[shift + i] = F.sub(rem[shift + i], F.mul(c, bc[i]))
            rem.pop()
        return Poly(F, quot), Poly(F, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, e: int, mod: "Poly | None" = None) -> "Poly":
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {e!r}")
        out = Poly.one(self.field)
        base = self if mod is None else self % mod
        while e:
            if e & 1:
                out = out * base
                if mod is not None:
                    out %= mod
            base = base * base
            if mod is not None:
                base %= mod
            e >>= 1
        return out

    def monic(self) -> "Poly":
        if self.is_zero or self.lc == 1:
            return self
        return self.scale(self.field.inv(self.lc))

    # -- identity

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(f"{c}")
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if c == 1 else f"{c}*{x}")
        return " + ".join(terms)


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    f._need_same_field(g)
    while not g.is_zero:
        f, g = g, f % g
    return f.monic()


_IRR_CACHE: dict[tuple[GF, int], tuple[Poly, ...]] = {}


def irreducibles(field: GF, d: int) -> tuple[Poly, ...]:
    """All monic irreducibles of degree exactly d, by ascending coefficient code."""
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    key = (field, d)
    got = _IRR_CACHE.get(key)
    if got is None:
        lower = [irreducibles(field, k) for k in range(1, d // 2 + 1)]
        out = []
        for code in range(field.q**d):
            f = Poly.from_code(field, d, code)
            if all((f % g).coeffs for gs in lower for g in gs):
                out.append(f)
        got = tuple(out)
        _IRR_CACHE[key] = got
    return got


def is_irreducible(f: Poly) -> bool:
    d = f.degree
    if f.is_zero or d < 1:
        raise ValueError(f"irreducibility is undefined for constant {f!r}")
    for k in range(1, int(d) // 2 + 1):
        for g in irreducibles(f.field, k):
            if (f % g).is_zero:
                return False
    return True


def factor(f: Poly) -> tuple[tuple[Poly, int], ...]:
    """Complete factorization of a monic f into (irreducible, exponent) pairs.

    Pairs come out sorted by (degree, coefficient code) of the irreducible;
    their product reconstructs f exactly.
    """
    if f.is_zero or f.degree < 1:
        raise ValueError(f"cannot factor constant {f!r}")
    if not f.is_monic:
        raise ValueError(f"factor expects a monic polynomial, got {f!r}")
    out = []
    rem = f
    d = 1
    while rem.degree >= 1:
        if d > rem.degree // 2:
            out.append((rem, 1))
            break
        for p in irreducibles(f.field, d):
            e = 0
            while True:
                q, r = divmod(rem, p)
                if not r.is_zero:
                    break
                rem = q
                e += 1
            if e:
                out.append((p, e))
            if rem.degree < 1:
                break
        d += 1
    out.sort(key=lambda pe: (pe[0].degree, pe[0].code()))
    return tuple(out)


def order(f: Poly) -> int:
    """Least e >= 1 with x^e = 1 (mod f), for f of degree >= 1 with f(0) != 0.

    For irreducible f this is the multiplicative order of x in the quotient
    field, found by stripping prime factors from q^deg(f) - 1; otherwise x is
    still a unit mod f and an incremental search is used.
    """
    if f.is_zero or f.degree < 1:
        raise ValueError(f"order is undefined for constant {f!r}")
    if f.coeff(0) == 0:
        raise ValueError(f"order requires a nonzero constant term, got {f!r}")
    F = f.field
    f = f.monic()
    x = Poly.x(F)
    one = Poly.one(F)
    if is_irreducible(f):
        e = F.q ** int(f.degree) - 1
        for prime in factorize(e):
            while e % prime == 0 and pow(x, e // prime, f) == one:
                e //= prime
        return e
    bound = F.q ** int(f.degree)
    r = x % f
    e = 1
    while r != one:
        r = (r * x) % f
        e += 1
        if e > bound:
            raise RuntimeError(f"order search for {f!r} exceeded unit-group bound")
    return e
