"""Lie algebras given by exact structure constants, and their subspaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import linalg
from .errors import DegenerateFormError, DimensionMismatch, InputError
from .linalg import Row, format_scalar, parse_scalar

G = "g"
GSTAR = "g*"


def as_row(v, n: int | None = None) -> Row:
    """Coerce a vector-like object to a tuple of Fractions."""
    if isinstance(v, (Vector, Covector)):
        v = v.coords
    if type(v) is tuple and all(type(x) is Fraction for x in v):
        row = v
    else:
        row = tuple(x if type(x) is Fraction else Fraction(x) for x in v)
    if n is not None and len(row) != n:
        raise DimensionMismatch(f"expected a vector of length {n}, got {len(row)}")
    return row


@dataclass(frozen=True)
class Vector:
    """An element of g in the algebra's basis."""

    coords: Row

    def __post_init__(self):
        object.__setattr__(self, "coords", as_row(self.coords))

    def __len__(self):
        return len(self.coords)


@dataclass(frozen=True)
class Covector:
    """A point of g* in the dual basis."""

    coords: Row

    def __post_init__(self):
        object.__setattr__(self, "coords", as_row(self.coords))

    def __len__(self):
        return len(self.coords)

    def to_json(self) -> dict:
        return {"coords": [format_scalar(x) for x in self.coords]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Covector":
        try:
            return cls(tuple(parse_scalar(x) for x in data["coords"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad covector JSON: {exc}") from exc


class LieAlgebra:
    """A finite-dimensional Lie algebra over Q.

    ``constants`` maps ``(i, j)`` with ``i < j`` to ``{k: c_ij^k}``; the
    antisymmetric completion is implicit.  Instances are treated as immutable.
    """

    def __init__(
        self,
        dim: int,
        constants: Mapping[tuple[int, int], Mapping[int, object]],
        labels: Sequence[str] | None = None,
        name: str = "",
    ):
        if not isinstance(dim, int) or dim < 1:
            raise InputError(f"dimension must be a positive integer, got {dim!r}")
        self.dim = dim
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(dim))
        if len(self.labels) != dim:
            raise InputError("basis label count does not match dimension")
        self.name = name
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), coeffs in constants.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise InputError(f"bracket index out of range: {(i, j)}")
            if i == j:
                if any(Fraction(x) for x in coeffs.values()):
                    raise InputError(f"[e{i}, e{i}] must vanish")
                continue
            row = {}
            for k, x in coeffs.items():
                if not 0 <= k < dim:
                    raise InputError(f"bracket coefficient index out of range: {k}")
                x = Fraction(x)
                if x:
                    row[k] = x
            if i > j:
                i, j = j, i
                row = {k: -x for k, x in row.items()}
            if (i, j) in table and table[(i, j)] != row:
                raise InputError(f"inconsistent brackets given for pair {(i, j)}")
            if row:
                table[(i, j)] = row
        self.constants = table
        full = dict(table)
        for (i, j), row in table.items():
            full[(j, i)] = {k: -x for k, x in row.items()}
        self._full = full

    def __repr__(self):
        return f"LieAlgebra({self.name or 'dim=' + str(self.dim)})"

    def structure(self, i: int, j: int) -> dict[int, Fraction]:
        """``{k: c_ij^k}`` for any ordered pair."""
        return self._full.get((i, j), {})

    def basis_vector(self, i: int) -> Row:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return tuple(v)

    def bracket(self, a, b) -> Row:
        a = as_row(a, self.dim)
        b = as_row(b, self.dim)
        out = [Fraction(0)] * self.dim
        sb = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in sb:
                row = self._full.get((i, j))
                if row:
                    w = x * y
                    for k, c in row.items():
                        out[k] += w * c
        return tuple(out)

    def ad_matrix(self, a) -> list[list[Fraction]]:
        """Matrix of ad_a: column j is [a, e_j]."""
        a = as_row(a, self.dim)
        m = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for i, x in enumerate(a):
            if not x:
                continue
            for j in range(self.dim):
                for k, c in self.structure(i, j).items():
                    m[k][j] += x * c
        return m

    def pairing(self, mu, a) -> Fraction:
        return linalg.dot(as_row(mu, self.dim), as_row(a, self.dim))

    def to_json(self) -> dict:
        brackets = []
        for (i, j) in sorted(self.constants):
            row = self.constants[(i, j)]
            brackets.append(
                {"i": i, "j": j, "coeffs": {str(k): format_scalar(row[k]) for k in sorted(row)}}
            )
        return {"dim": self.dim, "basis": list(self.labels), "brackets": brackets}

    @classmethod
    def from_json(cls, data: Mapping, name: str = "") -> "LieAlgebra":
        try:
            dim = data["dim"]
            labels = data.get("basis")
            constants = {}
            for entry in data.get("brackets", []):
                i, j = entry["i"], entry["j"]
                if not (isinstance(i, int) and isinstance(j, int)) or i >= j:
                    raise InputError(f"brackets must be listed with integer indices i < j, got {(i, j)}")
                if (i, j) in constants:
                    raise InputError(f"duplicate bracket entry {(i, j)}")
                constants[(i, j)] = {int(k): parse_scalar(v) for k, v in entry["coeffs"].items()}
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"bad Lie algebra JSON: {exc}") from exc
        return cls(dim, constants, labels, name=name)


def bracket(L: LieAlgebra, a, b) -> Row:
    return L.bracket(a, b)


def jacobi_check(L: LieAlgebra) -> bool:
    """True iff the Jacobi identity holds on every basis triple."""
    n = L.dim
    e = [L.basis_vector(i) for i in range(n)]
    br = {}
    for i, j in combinations(range(n), 2):
        br[(i, j)] = L.bracket(e[i], e[j])
    for i, j, k in combinations(range(n), 3):
        s = [x + y + z for x, y, z in zip(
            L.bracket(br[(i, j)], e[k]),
            L.bracket(br[(j, k)], e[i]),
            L.bracket(e[j], br[(i, k)]),
        )]
        if any(s):
            return False
    return True


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of g or g*, stored by its reduced row-echelon basis."""

    parent_dim: int
    basis: tuple[Row, ...]
    space_tag: str = G
    pivots: tuple[int, ...] = field(default=(), compare=False, repr=False)

    @classmethod
    def span(cls, vectors: Iterable, n: int, tag: str = G) -> "Subspace":
        rows = [as_row(v, n) for v in vectors]
        red, piv = linalg.rref(rows, n) if rows else ([], [])
        return cls(n, tuple(red), tag, tuple(piv))

    @classmethod
    def zero(cls, n: int, tag: str = G) -> "Subspace":
        return cls(n, (), tag, ())

    @classmethod
    def full(cls, n: int, tag: str = G) -> "Subspace":
        return cls.span([[int(i == j) for j in range(n)] for i in range(n)], n, tag)

    @classmethod
    def from_echelon(cls, ech: linalg.Echelon, tag: str = G) -> "Subspace":
        return cls.span(ech.rows(), ech.n, tag)

    def __post_init__(self):
        if not self.pivots and self.basis:
            piv = tuple(next(k for k, x in enumerate(r) if x) for r in self.basis)
            object.__setattr__(self, "pivots", piv)
        object.__setattr__(self, "_sparse", [[(k, x) for k, x in enumerate(r) if x] for r in self.basis])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check(self, other: "Subspace"):
        if self.parent_dim != other.parent_dim or self.space_tag != other.space_tag:
            raise DimensionMismatch(
                f"incompatible subspaces: ({self.parent_dim}, {self.space_tag}) vs "
                f"({other.parent_dim}, {other.space_tag})"
            )

    def contains(self, v) -> bool:
        v = as_row(v, self.parent_dim)
        # RREF: the candidate combination is read off the pivot columns.
        w = list(v)
        for r, c in zip(self._sparse, self.pivots):
            x = w[c]
            if x:
                for k, y in r:
                    w[k] -= x * y
        return not any(w)

    def coordinates(self, v) -> Row:
        """Coefficients of ``v`` in this subspace's basis."""
        v = as_row(v, self.parent_dim)
        if not self.contains(v):
            raise InputError("vector not in subspace")
        return tuple(v[c] for c in self.pivots)

    def includes(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains(r) for r in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.basis + other.basis, self.parent_dim, self.space_tag)

    def complement_rows(self) -> list[Row]:
        """Basis of the standard-pairing annihilator."""
        return linalg.kernel(self.basis, self.parent_dim) if self.basis else [
            tuple(Fraction(int(i == j)) for j in range(self.parent_dim)) for i in range(self.parent_dim)
        ]

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        eqs = self.complement_rows() + other.complement_rows()
        if not eqs:
            return self
        return Subspace.span(linalg.kernel(eqs, self.parent_dim), self.parent_dim, self.space_tag)

    def to_json(self) -> list[list[str]]:
        return [[format_scalar(x) for x in r] for r in self.basis]


def span(vectors, n: int, tag: str = G) -> Subspace:
    return Subspace.span(vectors, n, tag)


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    return s1 + s2


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    return s1 & s2


def contains(s: Subspace, v) -> bool:
    return s.contains(v)


def equal(s1: Subspace, s2: Subspace) -> bool:
    s1._check(s2)
    return s1.basis == s2.basis


@dataclass(frozen=True)
class BilinearForm:
    matrix: tuple[Row, ...]
    symmetric: bool = True

    def __post_init__(self):
        m = tuple(as_row(r) for r in self.matrix)
        object.__setattr__(self, "matrix", m)
        n = len(m)
        if any(len(r) != n for r in m):
            raise InputError("bilinear form matrix must be square")
        if self.symmetric and any(m[i][j] != m[j][i] for i in range(n) for j in range(i)):
            raise InputError("matrix declared symmetric is not")

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def __call__(self, a, b) -> Fraction:
        a = as_row(a, self.dim)
        b = as_row(b, self.dim)
        return sum((x * linalg.dot(r, b) for x, r in zip(a, self.matrix) if x), Fraction(0))

    def rank(self) -> int:
        return linalg.rank(self.matrix, self.dim)

    def is_nondegenerate(self) -> bool:
        return self.rank() == self.dim

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.matrix)

    def apply(self, s) -> Row:
        """The row vector x -> B(x, s)."""
        s = as_row(s, self.dim)
        return tuple(linalg.dot(r, s) for r in self.matrix)


def killing_form(L: LieAlgebra) -> BilinearForm:
    """K(a, b) = trace(ad_a ad_b) from the structure constants."""
    n = L.dim
    ads = [L.ad_matrix(L.basis_vector(i)) for i in range(n)]
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a, b = ads[i], ads[j]
            t = sum(a[k][l] * b[l][k] for k in range(n) for l in range(n) if a[k][l] and b[l][k])
            m[i][j] = m[j][i] = Fraction(t)
    return BilinearForm(tuple(tuple(r) for r in m), symmetric=True)


def orthogonal_complement(s: Subspace, form: BilinearForm, *, allow_degenerate: bool = False) -> Subspace:
    """{x : B(x, v) = 0 for all v in s}."""
    if form.dim != s.parent_dim:
        raise DimensionMismatch("form and subspace live in different dimensions")
    if not allow_degenerate and not form.is_nondegenerate():
        raise DegenerateFormError("bilinear form is degenerate")
    eqs = [form.apply(v) for v in s.basis]
    if not eqs:
        return Subspace.full(s.parent_dim, s.space_tag)
    return Subspace.span(linalg.kernel(eqs, s.parent_dim), s.parent_dim, s.space_tag)


def annihilator(s: Subspace) -> Subspace:
    """Covectors vanishing on a subspace of g."""
    if s.space_tag != G:
        raise DimensionMismatch("annihilator expects a subspace of g")
    return Subspace.span(s.complement_rows(), s.parent_dim, GSTAR)
