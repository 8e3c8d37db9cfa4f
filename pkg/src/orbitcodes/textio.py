"""Text formats for fields, polynomials, and matrices.

Polynomial: comma-separated ascending coefficient codes ("1,1,0,1" is
x^3 + x + 1 over GF(2)).  Matrix: rows joined by ";", entries by ","
("0,1,0;0,0,1;1,1,0").  Field designator: "p" or "p^m", optionally with a
separate modulus coefficient string over F_p.

Parse errors carry the character position of the offending token.
"""

from __future__ import annotations

from .errors import ParseError
from .field import GF
from .matrix import Mat
from .poly import Poly


def format_poly(f: Poly) -> str:
    if f.is_zero:
        return "0"
    return ",".join(str(c) for c in f.coeffs)


def format_mat(m: Mat) -> str:
    return ";".join(",".join(str(e) for e in m.row(i)) for i in range(m.rows))


def _parse_codes(field: GF, text: str, offset: int) -> list[int]:
    out = []
    pos = 0
    for token in text.split(","):
        stripped = token.strip()
        if not stripped.isdigit():
            raise ParseError(f"expected an element code, got {stripped!r}", offset + pos)
        value = int(stripped)
        if value >= field.q:
            raise ParseError(
                f"code {value} out of range for {field!r}", offset + pos
            )
        out.append(value)
        pos += len(token) + 1
    return out


def parse_poly(field: GF, text: str) -> Poly:
    if not text.strip():
        raise ParseError("empty polynomial", 0)
    return Poly(field, _parse_codes(field, text, 0))


def parse_mat(field: GF, text: str) -> Mat:
    if not text.strip():
        raise ParseError("empty matrix", 0)
    rows = []
    width = None
    offset = 0
    for chunk in text.split(";"):
        row = _parse_codes(field, chunk, offset)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(
                f"row has {len(row)} entries, expected {width}", offset
            )
        rows.append(row)
        offset += len(chunk) + 1
    return Mat.from_rows(field, rows)


def parse_field(designator: str, modulus: str | None = None) -> GF:
    """Build a field from "p" or "p^m" plus an optional modulus string."""
    text = designator.strip()
    if "^" in text:
        p_text, _, m_text = text.partition("^")
    else:
        p_text, m_text = text, "1"
    if not p_text.strip().isdigit():
        raise ParseError(f"expected a prime, got {p_text.strip()!r}", 0)
    if not m_text.strip().isdigit():
        raise ParseError(
            f"expected an extension degree, got {m_text.strip()!r}",
            text.index("^") + 1 if "^" in text else 0,
        )
    p = int(p_text)
    m = int(m_text)
    mod = None
    if modulus is not None:
        mod = []
        pos = 0
        for token in modulus.split(","):
            stripped = token.strip()
            if not stripped.isdigit():
                raise ParseError(f"expected a coefficient, got {stripped!r}", pos)
            mod.append(int(stripped))
            pos += len(token) + 1
    try:
        return GF(p, m, mod)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from exc
