"""Seeded random generators used by the verify suites and tests.

Everything draws from a caller-supplied random.Random so that a seed fully
determines a run.
"""

from __future__ import annotations

import random
from typing import Sequence

from .codes import Subspace, subspace
from .field import GF
from .matrix import Mat, is_invertible, rref
from .poly import Poly, irreducibles


def random_matrix(rng: random.Random, field: GF, rows: int, cols: int) -> Mat:
    return Mat(field, rows, cols, [rng.randrange(field.q) for _ in range(rows * cols)])


def random_invertible(rng: random.Random, field: GF, n: int) -> Mat:
    while True:
        m = random_matrix(rng, field, n, n)
        if is_invertible(m):
            return m


def random_full_rank(rng: random.Random, field: GF, rows: int, cols: int) -> Mat:
    while True:
        m = random_matrix(rng, field, rows, cols)
        if rref(m).rank == rows:
            return m


def random_subspace(rng: random.Random, field: GF, n: int, k: int) -> Subspace:
    return subspace(random_full_rank(rng, field, k, n))


def random_monic(rng: random.Random, field: GF, degree: int) -> Poly:
    return Poly.from_code(field, degree, rng.randrange(field.q**degree))


def random_unit_divisors(
    rng: random.Random, field: GF, n: int, max_blocks: int = 3
) -> tuple[tuple[Poly, int], ...]:
    """Random (irreducible p != x, e) blocks with degrees summing to n."""
    x = Poly.x(field)
    while True:
        t = rng.randint(1, min(max_blocks, n))
        cuts = sorted(rng.sample(range(1, n), t - 1)) if t > 1 else []
        degrees = [b - a for a, b in zip([0] + cuts, cuts + [n])]
        divisors = []
        for d in degrees:
            s, e = rng.choice([(s, d // s) for s in range(1, d + 1) if d % s == 0])
            options = [p for p in irreducibles(field, s) if p != x]
            if not options:
                break
            divisors.append((rng.choice(options), e))
        if len(divisors) == len(degrees):
            return tuple(divisors)


def random_block_diag_basis(
    rng: random.Random, field: GF, divisors: Sequence[tuple[Poly, int]]
) -> tuple[Mat, list[Mat]]:
    """A block-diagonal basis diag(B_1, ..., B_t) with random full-rank
    blocks (at least one nonempty); returns (basis, blocks)."""
    degrees = [int(p.degree) * e for p, e in divisors]
    while True:
        blocks = []
        for d in degrees:
            ki = rng.randint(0, d)
            blocks.append(
                random_full_rank(rng, field, ki, d) if ki else Mat(field, 0, d, [])
            )
        if any(b.rows for b in blocks):
            break
    n = sum(degrees)
    starts = [0]
    for d in degrees:
        starts.append(starts[-1] + d)
    entries: list[int] = []
    for i, b in enumerate(blocks):
        for r in range(b.rows):
            row = [0] * n
            row[starts[i] : starts[i + 1]] = list(b.row(r))
            entries.extend(row)
    k = sum(b.rows for b in blocks)
    return Mat(field, k, n, entries), blocks
