"""Exact rational linear algebra on plain Python sequences.

Matrices are sequences of rows; entries are anything ``Fraction`` accepts
exactly (ints, Fractions).  Elimination runs fraction-free on integer rows
and only converts back to ``Fraction`` at the end.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Row = tuple[Fraction, ...]

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_scalar(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction.  Decimals are rejected."""
    if isinstance(text, bool):
        raise ValueError(f"not a rational scalar: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"scalars must be given as strings, got {text!r}")
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ValueError(f"not an exact rational scalar: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_scalar(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _int_row(row: Iterable) -> list[int]:
    row = [x if type(x) in (int, Fraction) else Fraction(x) for x in row]
    den = 1
    for x in row:
        if x.denominator != 1:
            den = _lcm(den, x.denominator)
    return [x.numerator * (den // x.denominator) for x in row]


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[Row], list[int]]:
    """Reduced row-echelon form.

    Returns the nonzero rows (pivot entries equal to 1) and the pivot columns.
    """
    if ncols is None:
        if not rows:
            return [], []
        ncols = len(rows[0])
    m = [_primitive(_int_row(r)) for r in rows]
    for r in m:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
    m = [r for r in m if any(r)]
    pivots: list[int] = []
    top = 0
    for c in range(ncols):
        if top == len(m):
            break
        best = None
        for i in range(top, len(m)):
            v = m[i][c]
            if v and (best is None or abs(v) < abs(m[best][c])):
                best = i
                if abs(v) == 1:
                    break
        if best is None:
            continue
        m[top], m[best] = m[best], m[top]
        p = m[top]
        pc = p[c]
        for i in range(len(m)):
            if i == top:
                continue
            f = m[i][c]
            if not f:
                continue
            g = gcd(pc, f)
            a, b = pc // g, f // g
            ri = m[i]
            m[i] = _primitive([a * x - b * y for x, y in zip(ri, p)])
        pivots.append(c)
        top += 1
    out = []
    for r, c in zip(m[:top], pivots):
        pc = r[c]
        out.append(tuple(Fraction(x, pc) for x in r))
    return out, pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def kernel(rows: Sequence[Sequence], ncols: int) -> list[Row]:
    """Basis of {x : A x = 0} for the matrix with the given rows."""
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in zip(red, pivots):
            v[c] = -r[f]
        basis.append(tuple(v))
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence, ncols: int) -> Row | None:
    """One solution of A x = b, or None when the system is inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for r, c in zip(red, pivots):
        x[c] = r[ncols]
    return tuple(x)


def transpose(rows: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*rows)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in bt] for r in a]


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(u, v) if x and y), Fraction(0))


class Echelon:
    """Incrementally grown echelon basis with sparse rows.

    Used where many, mostly dependent, sparse vectors are spanned (brackets
    of basis pairs).  ``rows()`` returns the canonical reduced form.
    """

    def __init__(self, n: int):
        self.n = n
        self._rows: dict[int, dict[int, Fraction]] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, v) -> dict[int, Fraction]:
        if isinstance(v, dict):
            w = {k: Fraction(x) for k, x in v.items() if x}
        else:
            w = {k: Fraction(x) for k, x in enumerate(v) if x}
        for c in sorted(self._rows):
            x = w.get(c)
            if x:
                for k, y in self._rows[c].items():
                    z = w.get(k, 0) - x * y
                    if z:
                        w[k] = z
                    else:
                        w.pop(k, None)
        return w

    def add(self, v) -> bool:
        """Add ``v``; return True when it enlarged the span."""
        w = self.reduce(v)
        if not w:
            return False
        c = min(w)
        p = w[c]
        self._rows[c] = {k: x / p for k, x in w.items()}
        return True

    def contains(self, v) -> bool:
        return not self.reduce(v)

    def rows(self) -> list[Row]:
        dense = []
        for c in sorted(self._rows):
            r = [Fraction(0)] * self.n
            for k, x in self._rows[c].items():
                r[k] = x
            dense.append(r)
        return rref(dense, self.n)[0] if dense else []
