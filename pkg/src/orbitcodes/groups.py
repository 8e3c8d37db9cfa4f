"""Cyclic subgroups of GL_n(F_q): orders, conjugacy tests, class enumeration.

Two routes decide whether the cyclic groups generated by A and B are
conjugate:

* conjugacy_witness scans coprime powers B^i for one conjugate to A
  (matrix conjugacy = equal canonical divisor sequences) and returns the
  smallest witness power.  This is the ground-truth oracle.
* same_signature compares the multisets of (order of p, exponent) over the
  elementary divisors p^e.  It is the cheap test the oracle is meant to
  certify; the two can disagree (see verify.suite_groups, which reports a
  known six-dimensional disagreement over GF(2)) and the oracle wins.

Class enumeration lists every multiset of (irreducible p != x, exponent)
with total degree n, partitions the multisets by signature and emits the
canonically smallest member of each cell as its representative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ClosureCapError, SingularMatrixError
from .field import GF
from .matrix import Mat, is_invertible
from .numtheory import multiplicative_order
from .poly import Poly, irreducibles, order as poly_order
from .rcf import RcfData, divisor_key, elementary_divisors, rcf, rcf_from_divisors


def matrix_order(a: Mat) -> int:
    """Multiplicative order of an invertible matrix: the lcm of the orders
    of its elementary divisors, verified by one power check."""
    n = 1
    for p, e in rcf(a).divisors:
        n = math.lcm(n, poly_order(p**e))
    if not (a**n).is_identity():
        raise AssertionError("computed order failed the A^N = I check")
    return n


class CyclicGroup:
    """The cyclic group generated by an invertible matrix."""

    def __init__(self, generator: Mat):
        if not generator.is_square:
            raise ValueError("generator must be square")
        self.generator = generator
        self.field = generator.field
        self.n = generator.rows
        self.order = matrix_order(generator)  # raises on singular input
        self._elements: tuple[Mat, ...] | None = None

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[Mat]:
        """Powers A^0, A^1, ..., A^(N-1) in order."""
        cur = Mat.identity(self.field, self.n)
        for _ in range(self.order):
            yield cur
            cur = cur * self.generator

    def elements(self) -> tuple[Mat, ...]:
        if self._elements is None:
            elems = tuple(self)
            if len(set(elems)) != self.order:
                raise AssertionError("cached powers are not pairwise distinct")
            self._elements = elems
        return self._elements

    def __repr__(self) -> str:
        return f"CyclicGroup(order={self.order}, n={self.n}, field={self.field!r})"


class Signature:
    """Multiset of (order of p, exponent e, deg p) over elementary divisors.

    Equality and hashing ignore the redundant degree component, but a
    degree inconsistent with the order is rejected at construction.
    """

    __slots__ = ("entries", "_key")

    def __init__(self, entries: Sequence[tuple[int, int, int]], q: int):
        entries = tuple(sorted(tuple(e) for e in entries))
        for o, e, deg in entries:
            expect = multiplicative_order(q % o if o > 1 else 0, o)
            if deg != expect:
                raise AssertionError(
                    f"degree {deg} does not match the order of {q} modulo {o}"
                )
        self.entries = entries
        self._key = tuple((o, e) for o, e, _ in entries)

    @property
    def key(self) -> tuple[tuple[int, int], ...]:
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Signature):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        inner = ", ".join(f"(ord={o}, e={e}, deg={d})" for o, e, d in self.entries)
        return f"Signature[{inner}]"


def signature_of_divisors(field: GF, divisors) -> Signature:
    entries = [(poly_order(p), e, int(p.degree)) for p, e in divisors]
    return Signature(entries, field.q)


def signature(a: Mat) -> Signature:
    """Signature of the cyclic group generated by an invertible matrix."""
    return signature_of_divisors(a.field, rcf(a).divisors)


def conjugacy_witness(a: Mat, b: Mat) -> int | None:
    """Smallest i with gcd(i, N) = 1 and A conjugate to B^i, where N is the
    common group order; None when the cyclic groups are not conjugate."""
    if a.field != b.field:
        raise ValueError("matrices must share a field")
    if a.rows != b.rows or not a.is_square or not b.is_square:
        raise ValueError("matrices must be square of equal size")
    n_a = matrix_order(a)
    n_b = matrix_order(b)
    if n_a != n_b:
        return None
    target = elementary_divisors(a)
    power = Mat.identity(b.field, b.rows)
    for i in range(1, n_b + 1):
        power = power * b
        if math.gcd(i, n_b) == 1 and elementary_divisors(power) == target:
            return i
    return None


def same_signature(a: Mat, b: Mat) -> bool:
    """Signature-based conjugacy test: equal divisor counts and equal
    (order, exponent) multisets."""
    div_a = rcf(a).divisors
    div_b = rcf(b).divisors
    if len(div_a) != len(div_b):
        return False
    return signature_of_divisors(a.field, div_a) == signature_of_divisors(b.field, div_b)


def power_signature(a: Mat, i: int) -> Signature:
    """Signature of A^i for i coprime to the order of A."""
    if i < 1:
        raise ValueError(f"power must be a positive integer, got {i}")
    n = matrix_order(a)
    if math.gcd(i, n) != 1:
        raise ValueError(f"power {i} is not coprime to the group order {n}")
    return signature(a**i)


@dataclass(frozen=True)
class ClassRep:
    """One conjugacy class of cyclic subgroups: canonical representative,
    signature, and group order."""

    rcf: RcfData
    signature: Signature
    order: int


def _divisor_multisets(field: GF, n: int):
    """All multisets of (irreducible p != x, e >= 1) with total degree n."""
    x = Poly.x(field)
    atoms = []
    for d in range(1, n + 1):
        for p in irreducibles(field, d):
            if p == x:
                continue
            e = 1
            while e * d <= n:
                atoms.append((p, e))
                e += 1
    atoms.sort(key=divisor_key)

    def extend(start: int, remaining: int, chosen: list):
        if remaining == 0:
            yield tuple(chosen)
            return
        for idx in range(start, len(atoms)):
            p, e = atoms[idx]
            w = e * int(p.degree)
            if w <= remaining:
                chosen.append((p, e))
                yield from extend(idx, remaining - w, chosen)
                chosen.pop()

    yield from extend(0, n, [])


def class_representatives(field: GF, n: int) -> tuple[ClassRep, ...]:
    """Conjugacy classes of cyclic subgroups of GL_n(F_q), one canonical
    representative per signature cell, sorted by representative."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    cells: dict[Signature, list] = {}
    for divisors in _divisor_multisets(field, n):
        sig = signature_of_divisors(field, divisors)
        cells.setdefault(sig, []).append(tuple(sorted(divisors, key=divisor_key)))
    reps = []
    for sig, members in cells.items():
        best = min(members, key=lambda ds: tuple(divisor_key(d) for d in ds))
        order = 1
        for p, e in best:
            order = math.lcm(order, poly_order(p**e))
        reps.append(ClassRep(rcf_from_divisors(field, best), sig, order))
    reps.sort(key=lambda r: tuple(divisor_key(d) for d in r.rcf.divisors))
    return tuple(reps)


@dataclass(frozen=True)
class GeneratedGroup:
    """A finite matrix group as an explicit element set."""

    generators: tuple[Mat, ...]
    elements: frozenset[Mat]
    order: int


_ROW_TABLE_LIMIT = 4096


def closure(generators: Sequence[Mat], cap: int = 1_000_000) -> GeneratedGroup:
    """Breadth-first closure of invertible generators under multiplication.

    Every generator has finite order, so closing under right multiplication
    alone yields the whole group.  Raises ClosureCapError (with the partial
    count) once more than `cap` elements appear.
    """
    if not generators:
        raise ValueError("closure needs at least one generator")
    F = generators[0].field
    n = generators[0].rows
    for g in generators:
        if g.field != F or g.rows != n or g.cols != n:
            raise ValueError("generators must be square, equal-sized, one field")
        if not is_invertible(g):
            raise SingularMatrixError("generators must be invertible")

    if F.q**n <= _ROW_TABLE_LIMIT:
        elems = _closure_rowcoded(F, n, generators, cap)
    else:
        elems = _closure_direct(F, n, generators, cap)
    return GeneratedGroup(tuple(generators), frozenset(elems), len(elems))


def _closure_direct(F: GF, n: int, generators, cap: int) -> set[Mat]:
    gens = list(dict.fromkeys(generators))
    seen = {Mat.identity(F, n), *gens}
    frontier = list(seen)
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                prod = m * g
                if prod not in seen:
                    seen.add(prod)
                    if len(seen) > cap:
                        raise ClosureCapError(cap, len(seen))
                    new.append(prod)
        frontier = new
    return seen


def _closure_rowcoded(F: GF, n: int, generators, cap: int) -> set[Mat]:
    """Closure with rows encoded as base-q integers and right multiplication
    by each generator precomputed as a row-code table."""
    q = F.q
    mul, add = F.mul, F.add

    def decode(code: int) -> list[int]:
        out = []
        for _ in range(n):
            out.append(code % q)
            code //= q
        return out

    def encode_vec(v) -> int:
        c = 0
        for a in reversed(v):
            c = c * q + a
        return c

    tables = []
    for g in generators:
        rows = [g.row(i) for i in range(n)]
        table = []
        for code in range(q**n):
            v = decode(code)
            w = [0] * n
            for i, vi in enumerate(v):
                if vi:
                    row = rows[i]
                    for j in range(n):
                        if row[j]:
                            w[j] = add(w[j], mul(vi, row[j]))
            table.append(encode_vec(w))
        tables.append(table)

    def mat_key(m: Mat) -> tuple[int, ...]:
        return tuple(encode_vec(m.row(i)) for i in range(n))

    ident = mat_key(Mat.identity(F, n))
    seen = {ident}
    for g in generators:
        seen.add(mat_key(g))
    frontier = list(seen)
    while frontier:
        new = []
        for key in frontier:
            for table in tables:
                prod = tuple(table[r] for r in key)
                if prod not in seen:
                    seen.add(prod)
                    if len(seen) > cap:
                        raise ClosureCapError(cap, len(seen))
                    new.append(prod)
        frontier = new
    return {
        Mat(F, n, n, [d for code in key for d in decode(code)]) for key in seen
    }
