"""Pointwise analysis of a covector: Poisson tensor, stabilizer, derived algebra."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .algebra import G, LieAlgebra, Subspace, as_row
from .errors import BoundExceeded, InputError, NotSubalgebraError
from .linalg import Row


@dataclass(frozen=True)
class PoissonTensor:
    """B_ij = <mu, [e_i, e_j]> at a point mu."""

    mu: Row
    matrix: tuple[Row, ...]

    def rank(self) -> int:
        return linalg.rank(self.matrix, len(self.mu))

    def is_skew(self) -> bool:
        m = self.matrix
        n = len(m)
        return all(m[i][j] == -m[j][i] for i in range(n) for j in range(n))

    def apply(self, a) -> Row:
        return tuple(linalg.dot(r, a) for r in self.matrix)


def poisson_tensor(L: LieAlgebra, mu) -> PoissonTensor:
    mu = as_row(mu, L.dim)
    n = L.dim
    m = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), row in L.constants.items():
        v = sum((mu[k] * c for k, c in row.items() if mu[k]), Fraction(0))
        m[i][j] = v
        m[j][i] = -v
    return PoissonTensor(mu, tuple(tuple(r) for r in m))


def stabilizer(L: LieAlgebra, mu) -> Subspace:
    """{a : ad*_a mu = 0}, the kernel of the Poisson tensor."""
    b = poisson_tensor(L, mu)
    return Subspace.span(linalg.kernel(b.matrix, L.dim), L.dim, G)


def bracket_table(L: LieAlgebra, s: Subspace) -> dict[tuple[int, int], Row]:
    return {(i, j): L.bracket(s.basis[i], s.basis[j]) for i, j in combinations(range(s.dim), 2)}


def _closure_witness(s: Subspace, table) -> tuple[int, int] | None:
    if s.dim == s.parent_dim:
        return None
    for (i, j), v in table.items():
        if any(v) and not s.contains(v):
            return (i, j)
    return None


def is_subalgebra(L: LieAlgebra, s: Subspace) -> bool:
    return _closure_witness(s, bracket_table(L, s)) is None


def checked_table(L: LieAlgebra, s: Subspace) -> dict[tuple[int, int], Row]:
    """Bracket table of ``s``, after confirming that ``s`` is closed under it.

    Functions below accept such a table through ``table=`` and then skip
    their own closure check.
    """
    table = bracket_table(L, s)
    w = _closure_witness(s, table)
    if w is not None:
        raise NotSubalgebraError(w)
    return table


def derived_subalgebra(L: LieAlgebra, s: Subspace, *, table=None) -> Subspace:
    """Span of the brackets of all basis pairs of ``s``."""
    table = checked_table(L, s) if table is None else table
    ech = linalg.Echelon(L.dim)
    for v in table.values():
        if any(v):
            ech.add(v)
    return Subspace.from_echelon(ech, s.space_tag)


def center_of_subalgebra(L: LieAlgebra, s: Subspace, *, table=None) -> Subspace:
    """{x in s : [x, y] = 0 for all y in s}."""
    table = checked_table(L, s) if table is None else table
    r = s.dim
    if r == 0:
        return s
    # unknown c in Q^r; for each j and each coordinate k: sum_i c_i [s_i, s_j]_k = 0
    eqs: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), v in table.items():
        for k, x in enumerate(v):
            if x:
                eqs.setdefault((j, k), {})[i] = eqs.get((j, k), {}).get(i, 0) + x
                eqs.setdefault((i, k), {})[j] = eqs.get((i, k), {}).get(j, 0) - x
    ech = linalg.Echelon(r)
    for key in sorted(eqs):
        ech.add(eqs[key])
        if len(ech) == r:
            return Subspace.zero(L.dim, s.space_tag)
    rows = ech.rows()
    coeffs = linalg.kernel(rows, r) if rows else [
        tuple(Fraction(int(i == j)) for j in range(r)) for i in range(r)
    ]
    vecs = [
        tuple(sum((c * b[k] for c, b in zip(cv, s.basis) if c), Fraction(0)) for k in range(L.dim))
        for cv in coeffs
    ]
    return Subspace.span(vecs, L.dim, s.space_tag)


def subalgebra_structure(L: LieAlgebra, s: Subspace) -> LieAlgebra:
    """``s`` as an abstract Lie algebra in its own (echelon) basis."""
    if s.dim == 0:
        raise InputError("the zero subspace is not a Lie algebra of positive dimension")
    table = checked_table(L, s)
    consts = {}
    for (i, j), v in table.items():
        if any(v):
            consts[(i, j)] = dict(enumerate(s.coordinates(v)))
    return LieAlgebra(s.dim, consts, name=f"sub({L.name})")


@dataclass(frozen=True)
class StabilizerReport:
    mu: Row
    stabilizer: Subspace
    derived: Subspace
    center_of_stabilizer: Subspace

    @property
    def dim_stabilizer(self) -> int:
        return self.stabilizer.dim

    @property
    def dim_derived(self) -> int:
        return self.derived.dim

    @property
    def orbit_dim(self) -> int:
        return self.stabilizer.parent_dim - self.stabilizer.dim


def analyze_point(L: LieAlgebra, mu) -> StabilizerReport:
    mu = as_row(mu, L.dim)
    s = stabilizer(L, mu)
    table = checked_table(L, s)
    derived = derived_subalgebra(L, s, table=table)
    center = center_of_subalgebra(L, s, table=table)
    return StabilizerReport(mu, s, derived, center)


class StabilizerType(enum.Enum):
    ABELIAN = "ABELIAN"
    AFF1_PLUS_ABELIAN = "AFF1_PLUS_ABELIAN"
    HEISENBERG_PLUS_ABELIAN = "HEISENBERG_PLUS_ABELIAN"
    OTHER = "OTHER"


def classify_stabilizer_type(L: LieAlgebra, s: Subspace) -> StabilizerType:
    """Which of the hypersurface-case stabilizer types ``s`` has.

    The derived line decides it: zero means abelian, a central generator
    means Heisenberg plus abelian, a non-central one means aff(1) plus
    abelian.
    """
    table = checked_table(L, s)
    derived = derived_subalgebra(L, s, table=table)
    if derived.dim == 0:
        return StabilizerType.ABELIAN
    if derived.dim >= 2:
        return StabilizerType.OTHER
    z = derived.basis[0]
    if all(not any(L.bracket(z, b)) for b in s.basis):
        return StabilizerType.HEISENBERG_PLUS_ABELIAN
    return StabilizerType.AFF1_PLUS_ABELIAN


def symbolic_poisson_matrix(L: LieAlgebra):
    import sympy

    xs = sympy.symbols(f"x1:{L.dim + 1}")
    m = sympy.zeros(L.dim, L.dim)
    for (i, j), row in L.constants.items():
        expr = sum(sympy.Rational(c.numerator, c.denominator) * xs[k] for k, c in row.items())
        m[i, j] = expr
        m[j, i] = -expr
    return m, xs


def singular_polynomial(L: LieAlgebra, *, max_dim: int = 8, seed: int = 0):
    """Squarefree generator of the top-dimensional singular hypersurface.

    Returns a monic ``sympy.Poly`` in ``x1..xn``, or None when the singular
    set has codimension at least 2 (the gcd of the regular-size minors is a
    constant) or the algebra has no rank drop at all.
    """
    import sympy
    from sympy.polys.matrices import DomainMatrix

    from .strata import compute_index

    if L.dim > max_dim:
        raise BoundExceeded(f"singular_polynomial limited to dim <= {max_dim}, got {L.dim}")
    r = L.dim - compute_index(L, seed=seed).ind
    if r == 0:
        return None
    m, xs = symbolic_poisson_matrix(L)
    dom = sympy.QQ[xs]
    dm = DomainMatrix.from_Matrix(m).convert_to(dom)
    g = None
    n = L.dim
    # principal minors first: for skew matrices they carry the Pfaffian squares
    idx = list(combinations(range(n), r))
    order = [(a, a) for a in idx] + [(a, b) for a in idx for b in idx if a != b]
    for rows, cols in order:
        sub = dm.extract(list(rows), list(cols))
        d = sub.det()
        if not d:
            continue
        g = d if g is None else dom.gcd(g, d)
        if dom.is_unit(g) or (hasattr(g, "is_ground") and g.is_ground):
            return None
    if g is None:
        return None
    p = sympy.Poly(dom.to_sympy(g), *xs, domain="QQ")
    if p.is_ground:
        return None
    sqf = sympy.Poly(sympy.prod(f.as_expr() for f, _ in p.sqf_list()[1]), *xs, domain="QQ")
    return sqf.monic()
