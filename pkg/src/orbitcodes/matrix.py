"""Dense exact matrices over GF(q).

Entries are element codes stored row-major in a flat tuple.  Mat values are
immutable (and hashable, so they can live in sets during group closures);
every operation returns a fresh matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import SingularMatrixError
from .field import GF
from .poly import Poly


class Mat:
    __slots__ = ("field", "rows", "cols", "entries", "_hash")

    def __init__(self, field: GF, rows: int, cols: int, entries: Iterable[int]):
        entries = tuple(field.check(int(e)) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError(f"entry count {len(entries)} != {rows}x{cols}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = hash((field, rows, cols, entries))

    # -- constructors

    @classmethod
    def from_rows(cls, field: GF, rows: Sequence[Sequence[int]]) -> "Mat":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(field, r, c, [e for row in rows for e in row])

    @classmethod
    def identity(cls, field: GF, n: int) -> "Mat":
        return cls(field, n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, field: GF, rows: int, cols: int) -> "Mat":
        return cls(field, rows, cols, (0,) * (rows * cols))

    # -- access

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def _need_same_field(self, other: "Mat") -> None:
        if not isinstance(other, Mat):
            raise TypeError(f"expected Mat, got {type(other).__name__}")
        if self.field != other.field:
            raise ValueError(f"mixed fields {self.field!r} and {other.field!r}")

    # -- arithmetic

    def __add__(self, other: "Mat") -> "Mat":
        self._need_same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(
                f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )
        add = self.field.add
        return Mat(
            self.field,
            self.rows,
            self.cols,
            (add(a, b) for a, b in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "Mat":
        neg = self.field.neg
        return Mat(self.field, self.rows, self.cols, (neg(a) for a in self.entries))

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-other)

    def __mul__(self, other: "Mat") -> "Mat":
        self._need_same_field(other)
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        F = self.field
        mul, add = F.mul, F.add
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            for j in range(m):
                acc = 0
                for t in range(k):
                    at = arow[t]
                    if at:
                        acc = add(acc, mul(at, b[t * m + j]))
                out.append(acc)
        return Mat(F, n, m, out)

    def __pow__(self, e: int) -> "Mat":
        if not self.is_square:
            raise ValueError("matrix power needs a square matrix")
        if not isinstance(e, int):
            raise TypeError("matrix exponent must be an integer")
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        out = Mat.identity(self.field, self.rows)
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def transpose(self) -> "Mat":
        return Mat(
            self.field,
            self.cols,
            self.rows,
            (self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def inverse(self) -> "Mat":
        """Gauss-Jordan inverse; raises SingularMatrixError when singular."""
        if not self.is_square:
            raise ValueError("only square matrices have inverses")
        F = self.field
        n = self.rows
        aug = [list(self.row(i)) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col]), None)
            if pivot is None:
                raise SingularMatrixError(f"matrix is singular:\n{self!r}")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv_p = F.inv(aug[col][col])
            aug[col] = [F.mul(inv_p, v) for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    c = aug[r][col]
                    aug[r] = [F.sub(v, F.mul(c, w)) for v, w in zip(aug[r], aug[col])]
        return Mat(F, n, n, (aug[i][n + j] for i in range(n) for j in range(n)))

    def is_identity(self) -> bool:
        return self.is_square and self == Mat.identity(self.field, self.rows)

    # -- identity

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return (
            self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(",".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"Mat({self.field!r}, {self.rows}x{self.cols}: {body})"


@dataclass(frozen=True)
class RrefResult:
    matrix: Mat
    pivots: tuple[int, ...]
    rank: int


def rref(m: Mat) -> RrefResult:
    """Reduced row echelon form with leading ones and zeros above pivots."""
    F = m.field
    rows = [list(m.row(i)) for i in range(m.rows)]
    pivots = []
    r = 0
    for col in range(m.cols):
        pivot = next((i for i in range(r, m.rows) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv_p = F.inv(rows[r][col])
        if inv_p != 1:
            rows[r] = [F.mul(inv_p, v) for v in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [F.sub(v, F.mul(c, w)) for v, w in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == m.rows:
            break
    flat = [e for row in rows for e in row]
    return RrefResult(Mat(F, m.rows, m.cols, flat), tuple(pivots), len(pivots))


def rank(m: Mat) -> int:
    return rref(m).rank


def is_invertible(m: Mat) -> bool:
    return m.is_square and rank(m) == m.rows


def companion(f: Poly) -> Mat:
    """Companion matrix of a monic f: superdiagonal ones, negated
    coefficients of f along the last row."""
    if f.is_zero or f.degree < 1:
        raise ValueError(f"companion matrix needs degree >= 1, got {f!r}")
    if not f.is_monic:
        raise ValueError(f"companion matrix needs a monic polynomial, got {f!r}")
    F = f.field
    s = int(f.degree)
    entries = [0] * (s * s)
    for i in range(s - 1):
        entries[i * s + i + 1] = 1
    for j in range(s):
        entries[(s - 1) * s + j] = F.neg(f.coeff(j))
    return Mat(F, s, s, entries)


def block_diag(blocks: Sequence[Mat]) -> Mat:
    """Block-diagonal assembly of square blocks, in the given order."""
    if not blocks:
        raise ValueError("block_diag needs at least one block")
    F = blocks[0].field
    for b in blocks:
        if not b.is_square:
            raise ValueError(f"blocks must be square, got {b.rows}x{b.cols}")
        if b.field != F:
            raise ValueError("blocks must share a field")
    n = sum(b.rows for b in blocks)
    entries = [0] * (n * n)
    offset = 0
    for b in blocks:
        s = b.rows
        for i in range(s):
            row = b.row(i)
            start = (offset + i) * n + offset
            entries[start : start + s] = row
        offset += s
    return Mat(F, n, n, entries)
